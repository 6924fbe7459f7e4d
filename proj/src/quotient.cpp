#include "wst/quotient.hpp"

#include <stdexcept>

#include "wst/errors.hpp"

namespace wst {

FormedSpace::FormedSpace(RationalMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric()) throw NotPSD("form matrix is not symmetric");
    if (!is_psd(gram_)) throw NotPSD("form matrix is not positive semidefinite");
}

RationalMatrix null_space(const FormedSpace& s) {
    return kernel_basis(s.gram());
}

bool span_contained(const RationalMatrix& u, const RationalMatrix& w) {
    if (u.rows() != w.rows()) throw std::invalid_argument("ambient dimensions differ");
    if (u.cols() == 0) return true;
    return rank(hcat(w, u)) == rank(w);
}

namespace {

struct QuotientWorkspace {
    RationalMatrix u_w;        // u in w-coordinates
    RationalMatrix gram_w;     // form restricted to span(w), in w-coordinates
    RationalMatrix normal;     // u_w^T gram_w u_w
    RationalMatrix rhs_map;    // u_w^T gram_w
};

QuotientWorkspace prepare(const FormedSpace& s, const RationalMatrix& w, const RationalMatrix& u) {
    if (w.rows() != s.dim() || u.rows() != s.dim()) {
        throw std::invalid_argument("subspace matrices do not match the ambient dimension");
    }
    if (rank(w) != w.cols()) throw std::invalid_argument("w columns are not independent");
    if (rank(u) != u.cols()) throw std::invalid_argument("u columns are not independent");
    if (!span_contained(u, w)) throw NotSubspace("span(u) is not contained in span(w)");

    QuotientWorkspace ws;
    auto coords = solve(w, u);
    if (!coords) throw NotSubspace("span(u) is not contained in span(w)");
    ws.u_w = std::move(*coords);
    ws.gram_w = w.transpose() * s.gram() * w;
    ws.rhs_map = ws.u_w.transpose() * ws.gram_w;
    ws.normal = ws.rhs_map * ws.u_w;
    return ws;
}

// Residuals of the given w-coordinate vectors against the form-orthogonal
// projection onto span(u_w). Consistent for any PSD form.
RationalMatrix residuals(const QuotientWorkspace& ws, const RationalMatrix& vecs_w) {
    auto y = solve(ws.normal, ws.rhs_map * vecs_w);
    if (!y) throw Error("normal equations inconsistent for a PSD form");
    return vecs_w - ws.u_w * *y;
}

}  // namespace

QuotientForm induced_form_on_quotient(const FormedSpace& s, const RationalMatrix& w,
                                      const RationalMatrix& u) {
    const QuotientWorkspace ws = prepare(s, w, u);

    // Extend u to a basis of the w-coordinate space with canonical unit
    // vectors: the pivots of [u_w | I] beyond the u block.
    const Echelon ech = reduced_row_echelon(hcat(ws.u_w, RationalMatrix::identity(w.cols())));
    std::vector<std::size_t> unit_indices;
    for (std::size_t col : ech.pivot_columns) {
        if (col >= ws.u_w.cols()) unit_indices.push_back(col - ws.u_w.cols());
    }

    RationalMatrix reps_w(w.cols(), unit_indices.size());
    for (std::size_t j = 0; j < unit_indices.size(); ++j) reps_w(unit_indices[j], j) = 1;

    const RationalMatrix res = residuals(ws, reps_w);

    QuotientForm q;
    q.subspace = u;
    q.complement = w.select_columns(unit_indices);
    q.gram = res.transpose() * ws.gram_w * res;
    return q;
}

RationalMatrix coset_pairings(const FormedSpace& s, const RationalMatrix& w,
                              const RationalMatrix& u, const RationalMatrix& reps) {
    const QuotientWorkspace ws = prepare(s, w, u);
    if (reps.rows() != s.dim()) throw std::invalid_argument("representatives have wrong dimension");
    if (!span_contained(reps, w)) throw NotSubspace("representatives do not lie in span(w)");
    auto reps_w = solve(w, reps);
    if (!reps_w) throw NotSubspace("representatives do not lie in span(w)");
    const RationalMatrix res = residuals(ws, *reps_w);
    return res.transpose() * ws.gram_w * res;
}

bool quotient_form_is_inner_product(const FormedSpace& s, const RationalMatrix& w,
                                    const RationalMatrix& u) {
    const QuotientForm q = induced_form_on_quotient(s, w, u);
    return is_psd(q.gram) && determinant(q.gram) != 0;
}

Certificate transport_quotient_form(const RationalMatrix& phi, const FormedSpace& source,
                                    const FormedSpace& target, const RationalMatrix& u_source,
                                    const RationalMatrix& u_target) {
    if (phi.rows() != target.dim() || phi.cols() != source.dim() || source.dim() != target.dim()) {
        throw NotEquivariant("map shape does not match the ambient spaces");
    }
    if (rank(phi) != phi.cols()) throw NotEquivariant("map is not invertible");
    if (!(phi.transpose() * target.gram() * phi == source.gram())) {
        throw NotEquivariant("map does not carry the source form to the target form");
    }
    const RationalMatrix mapped_u = phi * u_source;
    if (!span_contained(mapped_u, u_target) || !span_contained(u_target, mapped_u)) {
        throw NotEquivariant("map does not carry the source subspace onto the target subspace");
    }

    const RationalMatrix eye = RationalMatrix::identity(source.dim());
    const QuotientForm src = induced_form_on_quotient(source, eye, u_source);
    const RationalMatrix transported =
        coset_pairings(target, eye, u_target, phi * src.complement);

    Certificate cert;
    cert.passed = transported == src.gram;
    cert.detail = cert.passed ? "quotient pairings agree exactly"
                              : "quotient pairings differ after transport";
    return cert;
}

}  // namespace wst
