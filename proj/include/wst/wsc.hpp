#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wst/complex.hpp"
#include "wst/weights.hpp"

namespace wst {

// Parsed form of the line-oriented wsc format:
//   wsc v1
//   # comment
//   vertex <name> f=<rational> g=<rational>
//   simplex <name> <name> ...
// Declaration order of the vertices fixes their rank.
struct WscDocument {
    std::string version;
    std::vector<std::string> vertex_names;
    VertexWeights f;
    VertexWeights g;
    std::vector<std::vector<std::string>> generators;
};

// Total: any byte sequence either yields a document or raises a positioned
// diagnostic (SyntaxError, UnsupportedVersion, DuplicateVertex, UnknownVertex).
WscDocument parse_wsc_document(std::string_view text);

// Parses and realizes the complex (closure of the generators) with weights.
std::pair<SimplicialComplex, WeightPair> parse_wsc(std::string_view text);

// Canonical text form: header, vertices in rank order, maximal faces in
// canonical order. parse_wsc(serialize_wsc(k, w)) reproduces (k, w).
std::string serialize_wsc(const SimplicialComplex& k, const WeightPair& weights);

}  // namespace wst
