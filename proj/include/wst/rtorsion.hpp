#pragma once

#include <vector>

#include "wst/certificate.hpp"
#include "wst/complex.hpp"
#include "wst/weights.hpp"

namespace wst {

// Degree-n slice of a based chain complex: a basis of the boundaries coming
// from above, a complement basis of the homology inside the cycles, and lifts
// of the boundary basis chosen one degree below.
struct BasedDegreeData {
    int degree = 0;
    RationalMatrix b;         // basis of im d_(n+1), canonical pivot columns
    RationalMatrix h_raw;     // g-orthogonal complement of b inside ker d_n
    RationalMatrix b_lift;    // solutions of d_n x = (degree n-1 b), canonical
    RationalMatrix combined;  // [b | h_raw | b_lift], a basis of the n-chains
};

struct RTorsionResult {
    std::vector<Rational> factor_squared;  // squared bracket per degree
    Rational torsion_squared = 1;
    double torsion = 1.0;
};

// Assembles the degree-n based data on the restricted complex. chosen_b_prev
// must be a basis of im d_n in degree-(n-1) chain coordinates (empty at
// n = 0); LiftFailure when it fails to lift.
BasedDegreeData based_data(const SimplicialComplex& kx, const VertexWeights& f,
                           const VertexWeights& g, int n, const RationalMatrix& chosen_b_prev);

/*
 * Squared change-of-basis bracket of the combined basis against the
 * g-orthonormal simplex basis, with the homology block implicitly
 * orthonormalized: det(M^T G M) / det(H^T G H) for M = combined, H = h_raw.
 * Exact and positive; DegenerateBasis when combined is not a basis.
 */
Rational bracket_squared(const BasedDegreeData& data, const RationalMatrix& gram);

// Alternating product tau^2 = prod_n bracket_squared(n)^((-1)^n) over the
// degrees of the g-nonvanishing subcomplex.
RTorsionResult r_torsion(const SimplicialComplex& k, const VertexWeights& f,
                         const VertexWeights& g);

// Certifies tau^2 == T^2 (analytic route) as exact rationals.
Certificate torsion_equivalence_check(const SimplicialComplex& k, const VertexWeights& f,
                                      const VertexWeights& g);

}  // namespace wst
