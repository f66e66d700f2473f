#include <map>
#include <stdexcept>

#include "mam_internal.hpp"

namespace motifspectral::detail {

namespace {

// Factor shorthands. J/G stand for the single-edge pair (indicator /
// weighted), Jd/Gd for the reciprocated pair, Jn for the not-materialized
// missing-pair indicator. Structural closure swaps in Js/Gs and the
// missing-edge indicator at evaluation time.
constexpr Factor J{PairKind::Single, false, false};
constexpr Factor Jt{PairKind::Single, true, false};
constexpr Factor G{PairKind::Single, false, true};
constexpr Factor Gt{PairKind::Single, true, true};
constexpr Factor Jd{PairKind::Double, false, false};
constexpr Factor Gd{PairKind::Double, false, true};
constexpr Factor Jn{PairKind::Missing, false, false};

Term t(Factor had, Factor left, Factor right) { return {had, left, right}; }
Term t2(Factor had) { return {had, Jn, Jn}; }  // two-vertex term, only the Hadamard slot is read

std::map<MotifName, MotifFormula> make_formulas() {
    std::map<MotifName, MotifFormula> f;

    f[MotifName::Ms] = {1.0,
                        {t2(G)}, {},
                        {t2(G)}, {}};

    f[MotifName::Md] = {1.0 / 2,
                        {}, {t2(Gd)},
                        {}, {t2(Gd)}};

    f[MotifName::M1] = {1.0 / 3,
                        {t(Jt, J, G), t(Jt, G, J), t(Gt, J, J)}, {},
                        {t(Gt, G, G)}, {}};

    f[MotifName::M2] = {1.0 / 4,
                        {t(Jt, Jd, G), t(Jt, Gd, J), t(Gt, Jd, J),
                         t(Jt, J, Gd), t(Jt, G, Jd), t(Gt, J, Jd),
                         t(Jd, J, G), t(Jd, G, J), t(Gd, J, J)}, {},
                        {t(Gt, Gd, G), t(Gt, G, Gd), t(Gd, G, G)}, {}};

    f[MotifName::M3] = {1.0 / 5,
                        {t(J, Jd, Gd), t(J, Gd, Jd), t(G, Jd, Jd),
                         t(Jd, Jd, G), t(Jd, Gd, J), t(Gd, Jd, J),
                         t(Jd, J, Gd), t(Jd, G, Jd), t(Gd, J, Jd)}, {},
                        {t(G, Gd, Gd), t(Gd, Gd, G), t(Gd, G, Gd)}, {}};

    f[MotifName::M4] = {1.0 / 6,
                        {t(Jd, Jd, Gd)}, {t(Gd, Jd, Jd)},
                        {}, {t(Gd, Gd, Gd)}};

    f[MotifName::M5] = {1.0 / 3,
                        {t(J, J, G), t(J, G, J), t(G, J, J),
                         t(J, J, Gt), t(J, G, Jt), t(G, J, Jt),
                         t(J, Jt, G), t(J, Gt, J), t(G, Jt, J)}, {},
                        {t(G, G, G), t(G, G, Gt), t(G, Gt, G)}, {}};

    f[MotifName::M6] = {1.0 / 4,
                        {t(J, J, Gd), t(J, G, Jd), t(G, J, Jd), t(Jd, Jt, G)},
                        {t(Gd, Jt, J)},
                        {t(G, G, Gd)}, {t(Gd, Gt, G)}};

    f[MotifName::M7] = {1.0 / 4,
                        {t(J, Jd, G), t(J, Gd, J), t(G, Jd, J)},
                        {t(Jd, J, Gt), t(Jd, G, Jt), t(Gd, J, Jt)},
                        {t(G, Gd, G)}, {t(Gd, G, Gt)}};

    f[MotifName::M8] = {1.0 / 2,
                        {t(J, G, Jn), t(G, J, Jn)},
                        {t(Jn, Jt, G), t(Jn, Gt, J)},
                        {t(G, G, Jn)}, {t(Jn, Gt, G)}};

    f[MotifName::M9] = {1.0 / 2,
                        {t(J, Jn, Gt), t(G, Jn, Jt), t(Jn, J, G),
                         t(Jn, G, J), t(J, Gt, Jn), t(G, Jt, Jn)}, {},
                        {t(G, Jn, Gt), t(Jn, G, G), t(G, Gt, Jn)}, {}};

    f[MotifName::M10] = {1.0 / 2,
                         {t(J, Jn, G), t(G, Jn, J)},
                         {t(Jn, J, Gt), t(Jn, G, Jt)},
                         {t(G, Jn, G)}, {t(Jn, G, Gt)}};

    f[MotifName::M11] = {1.0 / 3,
                         {t(Jd, G, Jn), t(Gd, J, Jn), t(Jn, Jd, G),
                          t(Jn, Gd, J), t(J, Gd, Jn), t(G, Jd, Jn)}, {},
                         {t(Gd, G, Jn), t(Jn, Gd, G), t(G, Gd, Jn)}, {}};

    f[MotifName::M12] = {1.0 / 3,
                         {t(Jd, Jn, G), t(Gd, Jn, J), t(Jn, J, Gd),
                          t(Jn, G, Jd), t(J, Jn, Gd), t(G, Jn, Jd)}, {},
                         {t(Gd, Jn, G), t(Jn, G, Gd), t(G, Jn, Gd)}, {}};

    f[MotifName::M13] = {1.0 / 4,
                         {t(Jd, Gd, Jn), t(Gd, Jd, Jn), t(Jn, Jd, Gd)}, {},
                         {t(Gd, Gd, Jn)}, {t(Jn, Gd, Gd)}};

    f[MotifName::Mcoll] = {1.0 / 2,
                           {t(Jn, J, Gt)}, {},
                           {}, {t(Jn, G, Gt)}};

    f[MotifName::Mexpa] = {1.0 / 2,
                           {t(Jn, Jt, G)}, {},
                           {}, {t(Jn, Gt, G)}};

    return f;
}

}  // namespace

const MotifFormula& motif_formula(MotifName name) {
    static const std::map<MotifName, MotifFormula> formulas = make_formulas();
    return formulas.at(name);
}

DerivedFormula derive_formula(const Motif& motif, Weighting weighting) {
    DerivedFormula out;
    out.coef = weighting == Weighting::Product ? 1.0 : 1.0 / motif.num_edges();

    // tuple positions read by each matrix slot: entry (row, col) of the
    // Hadamard factor is (position 0, position m-1); the left and right
    // product factors bridge through position 1
    struct Slot {
        int p, q;
    };
    const bool two_vertex = motif.m == 2;
    const std::array<Slot, 3> slots = two_vertex
                                          ? std::array<Slot, 3>{{{0, 1}, {0, 1}, {0, 1}}}
                                          : std::array<Slot, 3>{{{0, 2}, {0, 1}, {1, 2}}};
    const int nslots = two_vertex ? 1 : 3;

    for (const auto& sigma : motif.automorphism_class_reps) {
        std::array<int, 3> vertex_at{};  // inverse of sigma: position -> motif vertex
        for (int u = 0; u < motif.m; ++u) vertex_at[sigma[u]] = u;

        std::array<Factor, 3> factors{};
        for (int s = 0; s < nslots; ++s) {
            const int u = vertex_at[slots[s].p], v = vertex_at[slots[s].q];
            Factor fac{motif.pair_kind(u, v), false, false};
            if (fac.kind == PairKind::Single && !motif.has_edge(u, v)) fac.transposed = true;
            factors[s] = fac;
        }

        auto make_term = [&](int weighted_slot) {
            Term term{factors[0], factors[1], factors[2]};
            auto set = [&](int s, Factor f) {
                if (s == 0) term.had = f;
                else if (s == 1) term.left = f;
                else term.right = f;
            };
            if (weighted_slot >= 0) {
                Factor f = factors[weighted_slot];
                f.weighted = true;
                set(weighted_slot, f);
            } else {
                for (int s = 0; s < nslots; ++s) {
                    Factor f = factors[s];
                    if (f.kind != PairKind::Missing) f.weighted = true;
                    set(s, f);
                }
            }
            return term;
        };

        if (weighting == Weighting::Product) {
            out.terms.push_back(make_term(-1));
        } else {
            for (int s = 0; s < nslots; ++s)
                if (factors[s].kind != PairKind::Missing) out.terms.push_back(make_term(s));
        }
    }
    return out;
}

}  // namespace motifspectral::detail
