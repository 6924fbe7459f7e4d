#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wst/rational.hpp"

namespace wst {

// Vertex of a complex. The rank is the position in the declaration order and
// doubles as the index into weight vectors.
struct Vertex {
    std::string name;
    std::size_t rank;
};

// Weight assignment on the vertex universe of a complex, indexed by rank.
using VertexWeights = std::vector<Rational>;

// Finite nonempty set of vertices, stored as strictly increasing ranks.
class Simplex {
public:
    // Sorts the ranks; throws DuplicateVertex on repeats, Error when empty.
    static Simplex from_vertices(std::vector<std::size_t> ranks);

    int dimension() const { return static_cast<int>(ranks_.size()) - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    bool has_vertex(std::size_t rank) const;

    // The i-th face: the simplex with the i-th vertex removed.
    Simplex face(std::size_t i) const;

    bool operator==(const Simplex& other) const = default;
    // Lexicographic on ranks; canonical order among simplices of equal dimension.
    bool operator<(const Simplex& other) const { return ranks_ < other.ranks_; }

private:
    explicit Simplex(std::vector<std::size_t> ranks) : ranks_(std::move(ranks)) {}
    std::vector<std::size_t> ranks_;
};

// Abstract simplicial complex over an ordered vertex universe. Declared
// vertices need not appear in any simplex. Simplices are grouped by dimension
// and kept in canonical (lexicographic by rank) order.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Dimension of the complex, -1 when there are no simplices.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const Vertex& vertex(std::size_t rank) const;
    std::size_t vertex_rank(const std::string& name) const;
    bool has_vertex_name(const std::string& name) const;

    // Simplices of dimension n in canonical order; empty for n outside [0, dim].
    const std::vector<Simplex>& simplices(int n) const;
    std::size_t simplex_count(int n) const { return simplices(n).size(); }
    std::size_t simplex_count() const;

    bool contains(const Simplex& s) const;
    // Position of s within the canonical order of its dimension.
    std::optional<std::size_t> index_of(const Simplex& s) const;

    std::vector<Simplex> maximal_faces() const;

    // Renders a simplex as {name,...} using this complex's vertex names.
    std::string label(const Simplex& s) const;

    friend SimplicialComplex build_complex(const std::vector<std::string>& vertex_names,
                                           const std::vector<std::vector<std::string>>& generators);
    friend SimplicialComplex restrict_nonvanishing(const SimplicialComplex& k,
                                                   const VertexWeights& w);

private:
    std::vector<Vertex> vertices_;
    std::unordered_map<std::string, std::size_t> rank_of_;
    std::vector<std::vector<Simplex>> by_dim_;
};

// Builds the closure of the given generator simplices over the declared
// vertex universe. Vertex names must be distinct; generator entries must name
// declared vertices and contain no repeats.
SimplicialComplex build_complex(const std::vector<std::string>& vertex_names,
                                const std::vector<std::vector<std::string>>& generators);

// The i-th face of s (vertex i removed); throws IndexOutOfRange for bad i.
Simplex face(const Simplex& s, std::size_t i);

// All simplices of k having v as a vertex, in dimension-major canonical order
// (the closed star minus nothing; the open star as a simplex set).
std::vector<Simplex> star(const SimplicialComplex& k, const std::string& vertex_name);

// Maximal subcomplex on which the weight vanishes nowhere: drops every
// simplex with a zero-weight vertex. The vertex universe is preserved, so
// ranks and weight vectors remain valid for the result.
SimplicialComplex restrict_nonvanishing(const SimplicialComplex& k, const VertexWeights& w);

long euler_characteristic(const SimplicialComplex& k);

}  // namespace wst
