#include "wst/weights.hpp"

#include <stdexcept>

#include "wst/errors.hpp"

namespace wst {

namespace {

void check_universe(const VertexWeights& w, const SimplicialComplex& k) {
    if (w.size() != k.vertex_count()) {
        throw std::invalid_argument("weight vector does not match the vertex universe");
    }
}

}  // namespace

VertexWeights epsilon(const VertexWeights& w) {
    VertexWeights e(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) e[i] = (w[i] == 0) ? 0 : 1;
    return e;
}

bool nonvanishing_on(const VertexWeights& w, const SimplicialComplex& k) {
    check_universe(w, k);
    for (const auto& x : w)
        if (x == 0) return false;
    return true;
}

VertexWeights pointwise_product(const VertexWeights& a, const VertexWeights& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight vectors of different length");
    VertexWeights out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

VertexWeights scale_weights(const VertexWeights& w, const Rational& c) {
    VertexWeights out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = c * w[i];
    return out;
}

Rational simplex_weight(const VertexWeights& w, const Simplex& s) {
    Rational product(1);
    for (std::size_t r : s.ranks()) {
        if (r >= w.size()) throw IndexOutOfRange("vertex rank outside the weight vector");
        product *= w[r];
    }
    return product;
}

RationalMatrix boundary_matrix(const SimplicialComplex& k, const VertexWeights& f, int n) {
    check_universe(f, k);
    const auto& domain = k.simplices(n);
    const auto& codomain = k.simplices(n - 1);
    RationalMatrix b(codomain.size(), domain.size());
    if (n <= 0) return b;
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const Simplex& s = domain[col];
        for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
            const auto row = k.index_of(s.face(i));
            if (!row) throw Error("complex is not closed under faces");
            const Rational coeff = f[s.ranks()[i]];
            b(*row, col) += (i % 2 == 0) ? coeff : -coeff;
        }
    }
    return b;
}

RationalMatrix gram_matrix(const SimplicialComplex& k, const VertexWeights& g, int n) {
    check_universe(g, k);
    const auto& level = k.simplices(n);
    RationalMatrix gram(level.size(), level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
        const Rational w = simplex_weight(g, level[i]);
        gram(i, i) = w * w;
    }
    return gram;
}

std::vector<Simplex> null_basis(const SimplicialComplex& k, const VertexWeights& g, int n) {
    check_universe(g, k);
    std::vector<Simplex> basis;
    for (const Simplex& s : k.simplices(n)) {
        if (simplex_weight(g, s) == 0) basis.push_back(s);
    }
    return basis;
}

RationalMatrix null_basis_matrix(const SimplicialComplex& k, const VertexWeights& g, int n) {
    const auto& level = k.simplices(n);
    const auto basis = null_basis(k, g, n);
    RationalMatrix m(level.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto idx = k.index_of(basis[j]);
        m(*idx, j) = 1;
    }
    return m;
}

RationalMatrix chain_scale_iso(const SimplicialComplex& k, const VertexWeights& h, int n) {
    check_universe(h, k);
    for (std::size_t r = 0; r < h.size(); ++r) {
        if (h[r] == 0) {
            throw VanishingScale("scale weight vanishes at vertex '" + k.vertex(r).name + "'");
        }
    }
    const auto& level = k.simplices(n);
    RationalMatrix phi(level.size(), level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
        phi(i, i) = Rational(1) / simplex_weight(h, level[i]);
    }
    return phi;
}

RationalMatrix reduced_boundary(const SimplicialComplex& k, const VertexWeights& f,
                                const VertexWeights& g, int n) {
    check_universe(f, k);
    check_universe(g, k);
    return boundary_matrix(restrict_nonvanishing(k, g), f, n);
}

}  // namespace wst
