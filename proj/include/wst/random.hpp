#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wst/complex.hpp"
#include "wst/weights.hpp"

namespace wst {

// Deterministic weight and complex generator for randomized certificates.
// All draws are hand-rolled from the raw engine output so that sequences are
// reproducible across platforms and standard libraries.
class WeightRng {
public:
    explicit WeightRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    // Zero with probability 1/5 when allowed; otherwise sign * num/den with
    // numerator and denominator drawn from 1..9.
    Rational weight(bool allow_zero);

    VertexWeights weights(std::size_t count, bool allow_zero);

    // Nonzero wherever support is nonzero; unrestricted (zeros allowed)
    // elsewhere. Used to satisfy the scaling-law hypothesis.
    VertexWeights weights_covering(const VertexWeights& support);

    // Closure of one to four random generator subsets of the given vertices.
    SimplicialComplex subcomplex(const std::vector<std::string>& vertex_names);

private:
    std::mt19937_64 engine_;
};

}  // namespace wst
