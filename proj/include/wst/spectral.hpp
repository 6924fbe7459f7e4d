#pragma once

#include <vector>

#include "wst/certificate.hpp"
#include "wst/complex.hpp"
#include "wst/weights.hpp"

namespace wst {

// Degree-n Laplace data on the g-nonvanishing subcomplex.
struct SpectralBundle {
    int degree = 0;
    RationalMatrix laplacian;      // exact, similar to a symmetric PSD matrix
    RationalMatrix symmetrized;    // |g|-conjugated symmetric form of the same map
    std::vector<double> eigenvalues;  // ascending; zeros arbitrated by exact rank
    std::size_t exact_rank = 0;
    Rational pseudo_det = 1;       // product of the nonzero eigenvalues, exact
    bool zeros_within_tol = true;  // float tolerance agreed with the exact zero count
};

struct TorsionResult {
    double log_torsion = 0.0;          // zeta route, from float eigenvalues
    double torsion = 1.0;              // exp(log_torsion)
    Rational torsion_squared_exact = 1;  // pseudo-determinant route, exact
    long s_exponent = 0;               // scaling exponent of the g-support
    std::vector<SpectralBundle> bundles;  // one per degree of the restricted complex
    double route_disagreement = 0.0;   // relative gap between the two torsion routes
};

// Adjoint of the degree-n twisted boundary with respect to the g-form:
// G_n^{-1} B^T G_{n-1}. The complex must carry no zero g-weight simplex in
// degrees n-1 and n (SingularGram otherwise).
RationalMatrix adjoint_boundary(const SimplicialComplex& kx, const VertexWeights& f,
                                const VertexWeights& g, int n);

// Hodge-Laplace operator (adjoint of the boundary composed below, boundary
// composed with its adjoint above) on degree-n chains.
RationalMatrix hodge_laplacian(const SimplicialComplex& kx, const VertexWeights& f,
                               const VertexWeights& g, int n);

// Conjugates delta by the diagonal square root of the Gram matrix, giving an
// exactly symmetric matrix with the same characteristic polynomial.
RationalMatrix symmetrize(const RationalMatrix& delta, const RationalMatrix& gram);

// Float eigenvalues of a symmetric rational matrix, ascending. Exactly
// dim - rank of them are reported as zero: the exact rank arbitrates the
// zero/nonzero split, the float tolerance is only a diagnostic.
std::vector<double> spectrum(const RationalMatrix& s, double tol);

SpectralBundle spectral_bundle(const SimplicialComplex& kx, const VertexWeights& f,
                               const VertexWeights& g, int n, double tol);

/*
 * Analytic torsion of (k, f, g), computed on the g-nonvanishing subcomplex.
 * Exact route: T^2 = prod_n pseudo_det(Delta_n)^((-1)^(n+1) * n), a rational.
 * Float route: log T = 1/2 * sum_n (-1)^(n+1) * n * sum_{lambda>0} log lambda.
 * Both are returned; their relative gap is recorded.
 */
TorsionResult analytic_torsion(const SimplicialComplex& k, const VertexWeights& f,
                               const VertexWeights& g, double tol = 1e-10);

// Alternating sum of the ranks of the unweighted boundary maps of the
// w-nonvanishing subcomplex; the exponent governing torsion scaling.
long s_exponent(const SimplicialComplex& k, const VertexWeights& w);

// T^2(f*h, g*h) == T^2(f, g) for nonvanishing h, exactly.
Certificate check_scale_invariance(const SimplicialComplex& k, const VertexWeights& f,
                                   const VertexWeights& g, const VertexWeights& h);

// T^2(f, c*g) == |c|^(2s) * T^2(f, g) exactly, s = s_exponent(k, epsilon(g)).
// Requires c != 0 and f nonvanishing wherever g is.
Certificate check_g_scaling(const SimplicialComplex& k, const VertexWeights& f,
                            const VertexWeights& g, const Rational& c);

// T^2(c*f, g) == |c|^(-2s) * T^2(f, g) under the same hypotheses.
Certificate check_f_scaling(const SimplicialComplex& k, const VertexWeights& f,
                            const VertexWeights& g, const Rational& c);

// Substitutes f' = epsilon(g)*f, g' = epsilon(f)*g (which share a common
// support indicator) and certifies the scale-invariance law for h and both
// c-scaling laws exactly.
Certificate check_main_theorem(const SimplicialComplex& k, const VertexWeights& f,
                               const VertexWeights& g, const VertexWeights& h,
                               const Rational& c);

}  // namespace wst
