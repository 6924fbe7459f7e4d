#pragma once

#include "wst/certificate.hpp"
#include "wst/complex.hpp"
#include "wst/quotient.hpp"
#include "wst/weights.hpp"

namespace wst {

// Degree-n homology of the f-twisted chain complex together with the
// bilinear form induced by g on the quotient.
struct HomologyResult {
    int degree = 0;
    std::size_t betti = 0;
    RationalMatrix cycles;      // canonical kernel basis of the degree-n boundary
    RationalMatrix boundaries;  // canonical image basis of the degree-(n+1) boundary
    QuotientForm form;          // induced form on cycles/boundaries
    bool inner_product = false;
};

HomologyResult weighted_homology(const SimplicialComplex& k, const VertexWeights& f,
                                 const VertexWeights& g, int n);

// Exact test of the degeneracy criterion: the induced form on degree-n
// homology is an inner product if and only if every g-null cycle is a
// boundary. Agrees with weighted_homology(...).inner_product.
bool inner_product_criterion(const SimplicialComplex& k, const VertexWeights& f,
                             const VertexWeights& g, int n);

/*
 * Certifies, in exact arithmetic, that two computations of degree-n homology
 * with its form agree: directly on the g-nonvanishing subcomplex, and through
 * the quotient of the full chain complex by the g-null chains with the
 * reduced boundary. Covers the identification of the two descriptions.
 */
Certificate restriction_isometry_check(const SimplicialComplex& k, const VertexWeights& f,
                                       const VertexWeights& g, int n);

/*
 * Certifies that the diagonal chain map s -> s / h(s) intertwines the f- and
 * (f*h)-twisted boundaries, carries the g-form to the (g*h)-form, and induces
 * an exact isometry of degree-n homology forms. Requires h nonvanishing on
 * the vertex universe (VanishingScale otherwise).
 */
Certificate scale_isometry_check(const SimplicialComplex& k, const VertexWeights& f,
                                 const VertexWeights& g, const VertexWeights& h, int n);

}  // namespace wst
