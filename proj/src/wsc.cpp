#include "wst/wsc.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

#include "wst/errors.hpp"

namespace wst {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
        tokens.push_back(Token{std::string(line.substr(start, i - start)), start + 1});
    }
    return tokens;
}

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s.substr(1)) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

bool valid_rational_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty() || !std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) return true;
    if (s[i] == '/') {
        ++i;
        if (i >= s.size() || s[i] < '1' || s[i] > '9') return false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return i == s.size();
    }
    if (s[i] == '.') {
        ++i;
        if (i >= s.size()) return false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return i == s.size();
    }
    return false;
}

Rational parse_weight(const Token& token, std::string_view key, std::size_t line_no) {
    const std::string& text = token.text;
    if (text.size() < key.size() + 1 || text.compare(0, key.size(), key) != 0 ||
        text[key.size()] != '=') {
        throw SyntaxError(line_no, token.column,
                          "expected " + std::string(key) + "=<rational>, got '" + text + "'");
    }
    const std::string_view literal = std::string_view(text).substr(key.size() + 1);
    if (!valid_rational_literal(literal)) {
        throw SyntaxError(line_no, token.column + key.size() + 1,
                          "malformed rational '" + std::string(literal) + "'");
    }
    return parse_rational(literal);
}

}  // namespace

WscDocument parse_wsc_document(std::string_view text) {
    WscDocument doc;
    std::set<std::string> declared;
    std::vector<std::pair<std::size_t, std::vector<Token>>> simplex_lines;
    bool header_seen = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;

        const std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) {
            if (pos > text.size()) break;
            continue;
        }

        if (!header_seen) {
            if (tokens[0].text != "wsc") {
                throw SyntaxError(line_no, tokens[0].column, "expected 'wsc <version>' header");
            }
            if (tokens.size() != 2) {
                throw SyntaxError(line_no, tokens[0].column, "header must be 'wsc <version>'");
            }
            if (tokens[1].text != "v1") {
                throw UnsupportedVersion("unsupported format version '" + tokens[1].text + "'");
            }
            doc.version = tokens[1].text;
            header_seen = true;
        } else if (tokens[0].text == "vertex") {
            if (tokens.size() != 4) {
                throw SyntaxError(line_no, tokens[0].column,
                                  "vertex line must be 'vertex <name> f=<rational> g=<rational>'");
            }
            if (!valid_name(tokens[1].text)) {
                throw SyntaxError(line_no, tokens[1].column,
                                  "invalid vertex name '" + tokens[1].text + "'");
            }
            if (!declared.insert(tokens[1].text).second) {
                throw DuplicateVertex("line " + std::to_string(line_no) + ": vertex '" +
                                      tokens[1].text + "' declared twice");
            }
            doc.vertex_names.push_back(tokens[1].text);
            doc.f.push_back(parse_weight(tokens[2], "f", line_no));
            doc.g.push_back(parse_weight(tokens[3], "g", line_no));
        } else if (tokens[0].text == "simplex") {
            if (tokens.size() < 2) {
                throw SyntaxError(line_no, tokens[0].column, "simplex line needs vertex names");
            }
            simplex_lines.emplace_back(line_no, tokens);
        } else {
            throw SyntaxError(line_no, tokens[0].column,
                              "unknown directive '" + tokens[0].text + "'");
        }

        if (pos > text.size()) break;
    }

    if (!header_seen && !text.empty()) {
        throw SyntaxError(1, 1, "expected 'wsc <version>' header");
    }
    if (!header_seen) {
        throw SyntaxError(1, 1, "empty input; expected 'wsc <version>' header");
    }

    // Vertices may be declared after the simplices that use them, so resolve
    // the simplex lines once the whole file has been read.
    for (const auto& [simplex_line, tokens] : simplex_lines) {
        std::vector<std::string> names;
        std::set<std::string> seen;
        for (std::size_t t = 1; t < tokens.size(); ++t) {
            if (!valid_name(tokens[t].text)) {
                throw SyntaxError(simplex_line, tokens[t].column,
                                  "invalid vertex name '" + tokens[t].text + "'");
            }
            if (!declared.count(tokens[t].text)) {
                throw UnknownVertex("line " + std::to_string(simplex_line) +
                                    ": unknown vertex '" + tokens[t].text + "'");
            }
            if (!seen.insert(tokens[t].text).second) {
                throw DuplicateVertex("line " + std::to_string(simplex_line) +
                                      ": repeated vertex '" + tokens[t].text + "'");
            }
            names.push_back(tokens[t].text);
        }
        doc.generators.push_back(std::move(names));
    }
    return doc;
}

std::pair<SimplicialComplex, WeightPair> parse_wsc(std::string_view text) {
    const WscDocument doc = parse_wsc_document(text);
    SimplicialComplex k = build_complex(doc.vertex_names, doc.generators);
    return {std::move(k), WeightPair{doc.f, doc.g}};
}

std::string serialize_wsc(const SimplicialComplex& k, const WeightPair& weights) {
    if (weights.f.size() != k.vertex_count() || weights.g.size() != k.vertex_count()) {
        throw std::invalid_argument("weight vectors do not match the vertex universe");
    }
    std::string out = "wsc v1\n";
    for (const Vertex& v : k.vertices()) {
        out += "vertex " + v.name + " f=" + to_string(weights.f[v.rank]) +
               " g=" + to_string(weights.g[v.rank]) + "\n";
    }
    for (const Simplex& s : k.maximal_faces()) {
        out += "simplex";
        for (std::size_t r : s.ranks()) out += " " + k.vertex(r).name;
        out += "\n";
    }
    return out;
}

}  // namespace wst
