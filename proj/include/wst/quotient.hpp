#pragma once

#include "wst/certificate.hpp"
#include "wst/matrix.hpp"

namespace wst {

// Finite-dimensional rational vector space carrying a symmetric positive
// semidefinite bilinear form, given by its Gram matrix in a fixed basis.
class FormedSpace {
public:
    explicit FormedSpace(RationalMatrix gram);

    std::size_t dim() const { return gram_.rows(); }
    const RationalMatrix& gram() const { return gram_; }

private:
    RationalMatrix gram_;
};

// Canonical basis of the null space of the form: vectors pairing to zero
// with everything.
RationalMatrix null_space(const FormedSpace& s);

// Whether span(u) is contained in span(w) (columns as vectors).
bool span_contained(const RationalMatrix& u, const RationalMatrix& w);

/*
 * Bilinear form induced on the quotient span(w)/span(u).
 *
 * Both w and u are column bases in ambient coordinates with span(u) inside
 * span(w) (NotSubspace otherwise). The complement representatives are chosen
 * canonically: the columns of w whose unit vectors are picked as pivots when
 * row-reducing [u_in_w_coords | I]. Cosets are paired through residuals
 * against a form-orthogonal projection onto span(u), which is well defined
 * for a PSD form even when it is degenerate.
 */
struct QuotientForm {
    RationalMatrix subspace;    // u, ambient coordinates
    RationalMatrix complement;  // chosen coset representatives, ambient coordinates
    RationalMatrix gram;        // induced pairings of those representatives
};

QuotientForm induced_form_on_quotient(const FormedSpace& s, const RationalMatrix& w,
                                      const RationalMatrix& u);

// Pairings of the cosets of the given representatives (ambient coordinates,
// must lie in span(w)) in the quotient span(w)/span(u).
RationalMatrix coset_pairings(const FormedSpace& s, const RationalMatrix& w,
                              const RationalMatrix& u, const RationalMatrix& reps);

// Whether the induced quotient form is positive definite.
bool quotient_form_is_inner_product(const FormedSpace& s, const RationalMatrix& w,
                                    const RationalMatrix& u);

/*
 * Instance check that a form-compatible isomorphism phi between two formed
 * ambient spaces, carrying span(u_source) onto span(u_target), induces an
 * isometry of the quotient forms. Throws NotEquivariant when phi fails the
 * compatibility preconditions; the returned certificate records whether the
 * induced pairings agree exactly.
 */
Certificate transport_quotient_form(const RationalMatrix& phi, const FormedSpace& source,
                                    const FormedSpace& target, const RationalMatrix& u_source,
                                    const RationalMatrix& u_target);

}  // namespace wst
