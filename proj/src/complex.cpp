#include "wst/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wst/errors.hpp"

namespace wst {

Simplex Simplex::from_vertices(std::vector<std::size_t> ranks) {
    if (ranks.empty()) throw Error("a simplex needs at least one vertex");
    std::sort(ranks.begin(), ranks.end());
    if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end()) {
        throw DuplicateVertex("repeated vertex in simplex");
    }
    return Simplex(std::move(ranks));
}

bool Simplex::has_vertex(std::size_t rank) const {
    return std::binary_search(ranks_.begin(), ranks_.end(), rank);
}

Simplex Simplex::face(std::size_t i) const {
    if (i >= ranks_.size()) throw IndexOutOfRange("face index exceeds simplex dimension");
    std::vector<std::size_t> rest;
    rest.reserve(ranks_.size() - 1);
    for (std::size_t j = 0; j < ranks_.size(); ++j) {
        if (j != i) rest.push_back(ranks_[j]);
    }
    if (rest.empty()) throw IndexOutOfRange("a vertex has no proper faces");
    return Simplex(std::move(rest));
}

const Vertex& SimplicialComplex::vertex(std::size_t rank) const {
    if (rank >= vertices_.size()) throw IndexOutOfRange("vertex rank out of range");
    return vertices_[rank];
}

std::size_t SimplicialComplex::vertex_rank(const std::string& name) const {
    auto it = rank_of_.find(name);
    if (it == rank_of_.end()) throw UnknownVertex("unknown vertex '" + name + "'");
    return it->second;
}

bool SimplicialComplex::has_vertex_name(const std::string& name) const {
    return rank_of_.count(name) != 0;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int n) const {
    static const std::vector<Simplex> empty;
    if (n < 0 || n >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[static_cast<std::size_t>(n)];
}

std::size_t SimplicialComplex::simplex_count() const {
    std::size_t total = 0;
    for (const auto& level : by_dim_) total += level.size();
    return total;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return index_of(s).has_value();
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    const auto& level = simplices(s.dimension());
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const {
    std::vector<Simplex> result;
    for (int n = 0; n <= dimension(); ++n) {
        for (const Simplex& s : simplices(n)) {
            bool covered = false;
            for (const Simplex& t : simplices(n + 1)) {
                for (std::size_t i = 0; !covered && i <= static_cast<std::size_t>(n) + 1; ++i) {
                    if (t.face(i) == s) covered = true;
                }
                if (covered) break;
            }
            if (!covered) result.push_back(s);
        }
    }
    return result;
}

std::string SimplicialComplex::label(const Simplex& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.ranks().size(); ++i) {
        if (i) out += ",";
        out += vertex(s.ranks()[i]).name;
    }
    out += "}";
    return out;
}

SimplicialComplex build_complex(const std::vector<std::string>& vertex_names,
                                const std::vector<std::vector<std::string>>& generators) {
    SimplicialComplex k;
    for (const std::string& name : vertex_names) {
        if (name.empty()) throw Error("empty vertex name");
        if (!k.rank_of_.emplace(name, k.vertices_.size()).second) {
            throw DuplicateVertex("vertex '" + name + "' declared twice");
        }
        k.vertices_.push_back(Vertex{name, k.vertices_.size()});
    }

    std::set<std::vector<std::size_t>> closure;
    for (const auto& gen : generators) {
        std::vector<std::size_t> ranks;
        ranks.reserve(gen.size());
        for (const std::string& name : gen) ranks.push_back(k.vertex_rank(name));
        const Simplex top = Simplex::from_vertices(std::move(ranks));

        // Every nonempty subset of the generator is a face of the complex.
        const auto& vs = top.ranks();
        const std::size_t subsets = std::size_t{1} << vs.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            std::vector<std::size_t> sub;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (mask & (std::size_t{1} << i)) sub.push_back(vs[i]);
            }
            closure.insert(std::move(sub));
        }
    }

    for (const auto& ranks : closure) {
        const std::size_t n = ranks.size() - 1;
        if (k.by_dim_.size() <= n) k.by_dim_.resize(n + 1);
        k.by_dim_[n].push_back(Simplex::from_vertices(ranks));
    }
    for (auto& level : k.by_dim_) std::sort(level.begin(), level.end());
    return k;
}

Simplex face(const Simplex& s, std::size_t i) {
    return s.face(i);
}

std::vector<Simplex> star(const SimplicialComplex& k, const std::string& vertex_name) {
    const std::size_t rank = k.vertex_rank(vertex_name);
    std::vector<Simplex> result;
    for (int n = 0; n <= k.dimension(); ++n) {
        for (const Simplex& s : k.simplices(n)) {
            if (s.has_vertex(rank)) result.push_back(s);
        }
    }
    return result;
}

SimplicialComplex restrict_nonvanishing(const SimplicialComplex& k, const VertexWeights& w) {
    if (w.size() != k.vertex_count()) {
        throw std::invalid_argument("weight vector does not match the vertex universe");
    }
    SimplicialComplex out;
    out.vertices_ = k.vertices();
    for (const Vertex& v : out.vertices_) out.rank_of_.emplace(v.name, v.rank);

    for (int n = 0; n <= k.dimension(); ++n) {
        std::vector<Simplex> kept;
        for (const Simplex& s : k.simplices(n)) {
            bool alive = true;
            for (std::size_t r : s.ranks()) {
                if (w[r] == 0) {
                    alive = false;
                    break;
                }
            }
            if (alive) kept.push_back(s);
        }
        if (!kept.empty()) {
            out.by_dim_.resize(static_cast<std::size_t>(n) + 1);
            out.by_dim_[static_cast<std::size_t>(n)] = std::move(kept);
        }
    }
    return out;
}

long euler_characteristic(const SimplicialComplex& k) {
    long chi = 0;
    for (int n = 0; n <= k.dimension(); ++n) {
        const long count = static_cast<long>(k.simplex_count(n));
        chi += (n % 2 == 0) ? count : -count;
    }
    return chi;
}

}  // namespace wst
