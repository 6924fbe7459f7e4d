#include "wst/random.hpp"

#include <stdexcept>

namespace wst {

Rational WeightRng::weight(bool allow_zero) {
    if (allow_zero && below(5) == 0) return Rational(0);
    const long num = 1 + static_cast<long>(below(9));
    const long den = 1 + static_cast<long>(below(9));
    const bool negative = below(2) == 1;
    return make_rational(negative ? -num : num, den);
}

VertexWeights WeightRng::weights(std::size_t count, bool allow_zero) {
    VertexWeights w(count);
    for (auto& x : w) x = weight(allow_zero);
    return w;
}

VertexWeights WeightRng::weights_covering(const VertexWeights& support) {
    VertexWeights w(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
        w[i] = weight(/*allow_zero=*/support[i] == 0);
    }
    return w;
}

SimplicialComplex WeightRng::subcomplex(const std::vector<std::string>& vertex_names) {
    if (vertex_names.empty() || vertex_names.size() > 16) {
        throw std::invalid_argument("subcomplex generator expects 1..16 vertices");
    }
    const std::uint64_t full = (std::uint64_t{1} << vertex_names.size()) - 1;
    const std::size_t generators = 1 + static_cast<std::size_t>(below(4));
    std::vector<std::vector<std::string>> gens;
    for (std::size_t i = 0; i < generators; ++i) {
        const std::uint64_t mask = 1 + below(full);
        std::vector<std::string> gen;
        for (std::size_t v = 0; v < vertex_names.size(); ++v) {
            if (mask & (std::uint64_t{1} << v)) gen.push_back(vertex_names[v]);
        }
        gens.push_back(std::move(gen));
    }
    return build_complex(vertex_names, gens);
}

}  // namespace wst
