#include "wst/homology.hpp"

#include <string>

#include "wst/errors.hpp"

namespace wst {

namespace {

RationalMatrix image_basis(const RationalMatrix& b) {
    return b.select_columns(reduced_row_echelon(b).pivot_columns);
}

RationalMatrix top_rows(const RationalMatrix& m, std::size_t count) {
    RationalMatrix out(count, m.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

}  // namespace

HomologyResult weighted_homology(const SimplicialComplex& k, const VertexWeights& f,
                                 const VertexWeights& g, int n) {
    HomologyResult h;
    h.degree = n;
    h.cycles = kernel_basis(boundary_matrix(k, f, n));
    h.boundaries = image_basis(boundary_matrix(k, f, n + 1));
    h.betti = h.cycles.cols() - h.boundaries.cols();
    const FormedSpace chains(gram_matrix(k, g, n));
    h.form = induced_form_on_quotient(chains, h.cycles, h.boundaries);
    h.inner_product = is_psd(h.form.gram) && determinant(h.form.gram) != 0;
    return h;
}

bool inner_product_criterion(const SimplicialComplex& k, const VertexWeights& f,
                             const VertexWeights& g, int n) {
    const RationalMatrix b_n = boundary_matrix(k, f, n);
    const RationalMatrix b_up = boundary_matrix(k, f, n + 1);
    const auto null_simplices = null_basis(k, g, n);

    // Cycles supported on the g-null simplices: kernel vectors that also
    // vanish on every non-null coordinate.
    const auto& level = k.simplices(n);
    std::vector<bool> is_null(level.size(), false);
    for (const Simplex& s : null_simplices) is_null[*k.index_of(s)] = true;
    std::size_t live = 0;
    for (bool flag : is_null)
        if (!flag) ++live;
    RationalMatrix selector(live, level.size());
    for (std::size_t i = 0, row = 0; i < level.size(); ++i) {
        if (!is_null[i]) selector(row++, i) = 1;
    }

    const RationalMatrix null_cycles = kernel_basis(vcat(b_n, selector));
    return span_contained(null_cycles, b_up);
}

Certificate restriction_isometry_check(const SimplicialComplex& k, const VertexWeights& f,
                                       const VertexWeights& g, int n) {
    const SimplicialComplex kx = restrict_nonvanishing(k, g);
    const HomologyResult direct = weighted_homology(kx, f, g, n);

    // Quotient route: divide each chain level by its g-null span and push the
    // boundary through the quotient.
    struct Level {
        RationalMatrix reps;
        RationalMatrix gram;
        RationalMatrix null;
    };
    auto reduce_level = [&](int m) {
        const std::size_t dim = k.simplex_count(m);
        const FormedSpace space(gram_matrix(k, g, m));
        const RationalMatrix nulls = null_basis_matrix(k, g, m);
        const QuotientForm q =
            induced_form_on_quotient(space, RationalMatrix::identity(dim), nulls);
        return Level{q.complement, q.gram, nulls};
    };
    const Level below = reduce_level(n - 1);
    const Level here = reduce_level(n);
    const Level above = reduce_level(n + 1);

    auto reduced_map = [&](int m, const Level& lower, const Level& upper) {
        const RationalMatrix pushed = boundary_matrix(k, f, m) * upper.reps;
        const auto coords = solve(hcat(lower.reps, lower.null), pushed);
        if (!coords) throw Error("quotient coordinates inconsistent");
        return top_rows(*coords, lower.reps.cols());
    };
    const RationalMatrix red_n = reduced_map(n, below, here);
    const RationalMatrix red_up = reduced_map(n + 1, here, above);

    const RationalMatrix cycles = kernel_basis(red_n);
    const RationalMatrix bounds = image_basis(red_up);
    const QuotientForm through_quotient =
        induced_form_on_quotient(FormedSpace(here.gram), cycles, bounds);
    const std::size_t betti = cycles.cols() - bounds.cols();

    Certificate cert;
    const bool chains_match = here.gram == gram_matrix(kx, g, n) &&
                              red_n == boundary_matrix(kx, f, n) &&
                              red_up == boundary_matrix(kx, f, n + 1);
    const bool homology_match =
        betti == direct.betti && through_quotient.gram == direct.form.gram;
    cert.passed = chains_match && homology_match;
    cert.detail = cert.passed
                      ? "subcomplex and chain-quotient descriptions agree (betti " +
                            std::to_string(direct.betti) + ")"
                      : std::string("descriptions disagree at the ") +
                            (chains_match ? "homology" : "chain") + " level";
    return cert;
}

Certificate scale_isometry_check(const SimplicialComplex& k, const VertexWeights& f,
                                 const VertexWeights& g, const VertexWeights& h, int n) {
    const VertexWeights fh = pointwise_product(f, h);
    const VertexWeights gh = pointwise_product(g, h);
    const RationalMatrix phi_n = chain_scale_iso(k, h, n);
    const RationalMatrix phi_below = chain_scale_iso(k, h, n - 1);

    const bool chain_map =
        boundary_matrix(k, fh, n) * phi_n == phi_below * boundary_matrix(k, f, n);
    const bool isometry =
        phi_n.transpose() * gram_matrix(k, gh, n) * phi_n == gram_matrix(k, g, n);

    const HomologyResult source = weighted_homology(k, f, g, n);
    const RationalMatrix target_cycles = kernel_basis(boundary_matrix(k, fh, n));
    const RationalMatrix target_bounds =
        boundary_matrix(k, fh, n + 1)
            .select_columns(reduced_row_echelon(boundary_matrix(k, fh, n + 1)).pivot_columns);

    const RationalMatrix mapped_cycles = phi_n * source.cycles;
    const RationalMatrix mapped_bounds = phi_n * source.boundaries;
    const bool carries_cycles = span_contained(mapped_cycles, target_cycles) &&
                                span_contained(target_cycles, mapped_cycles);
    const bool carries_bounds = span_contained(mapped_bounds, target_bounds) &&
                                span_contained(target_bounds, mapped_bounds);

    bool forms_agree = false;
    if (carries_cycles && carries_bounds) {
        const RationalMatrix transported =
            coset_pairings(FormedSpace(gram_matrix(k, gh, n)), target_cycles, target_bounds,
                           phi_n * source.form.complement);
        forms_agree = transported == source.form.gram;
    }

    Certificate cert;
    cert.passed = chain_map && isometry && carries_cycles && carries_bounds && forms_agree;
    if (cert.passed) {
        cert.detail = "chain map, form compatibility and homology isometry all certified";
    } else if (!chain_map || !isometry) {
        cert.detail = "chain-level compatibility failed";
    } else if (!carries_cycles || !carries_bounds) {
        cert.detail = "cycles or boundaries are not carried onto their targets";
    } else {
        cert.detail = "homology pairings differ after transport";
    }
    return cert;
}

}  // namespace wst
