#pragma once

#include <vector>

#include "wst/complex.hpp"
#include "wst/matrix.hpp"
#include "wst/rational.hpp"

namespace wst {

// A pair of vertex weightings: f twists boundary maps, g induces the
// diagonal bilinear form on chains.
struct WeightPair {
    VertexWeights f;
    VertexWeights g;
};

// Indicator weighting of the support: 1 where w is nonzero, 0 elsewhere.
VertexWeights epsilon(const VertexWeights& w);

bool nonvanishing_on(const VertexWeights& w, const SimplicialComplex& k);

// Pointwise product of two weightings on the same universe.
VertexWeights pointwise_product(const VertexWeights& a, const VertexWeights& b);

// Constant-scaled weighting c*w.
VertexWeights scale_weights(const VertexWeights& w, const Rational& c);

// Product of the weights of the vertices of s.
Rational simplex_weight(const VertexWeights& w, const Simplex& s);

/*
 * Matrix of the f-twisted boundary map from n-chains to (n-1)-chains of k,
 * in the canonical simplex bases. The column of an n-simplex {v_0,...,v_n}
 * carries (-1)^i f(v_i) in the row of its i-th face: the coefficient is the
 * weight of the removed vertex. For n == 0 the result has zero rows, and
 * composing consecutive boundaries gives the exact zero matrix.
 */
RationalMatrix boundary_matrix(const SimplicialComplex& k, const VertexWeights& f, int n);

// Diagonal Gram matrix of the g-form on n-chains: entry g(s)^2 per simplex.
RationalMatrix gram_matrix(const SimplicialComplex& k, const VertexWeights& g, int n);

// The n-simplices spanning the null space of the g-form (those with zero
// g-weight), in canonical order.
std::vector<Simplex> null_basis(const SimplicialComplex& k, const VertexWeights& g, int n);

// Same span as a 0/1 column matrix in n-chain coordinates.
RationalMatrix null_basis_matrix(const SimplicialComplex& k, const VertexWeights& g, int n);

// Diagonal chain-level map sending each n-simplex s to s / h(s); the scale h
// must vanish nowhere on the vertex universe (VanishingScale otherwise).
// Intertwines the f-boundary with the (f*h)-boundary degreewise.
RationalMatrix chain_scale_iso(const SimplicialComplex& k, const VertexWeights& h, int n);

// Boundary matrix of the restriction of k to the g-nonvanishing subcomplex.
RationalMatrix reduced_boundary(const SimplicialComplex& k, const VertexWeights& f,
                                const VertexWeights& g, int n);

}  // namespace wst
