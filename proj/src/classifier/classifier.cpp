// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/classifier.hpp"

#include "padic_cartan/errors.hpp"

namespace pcartan {

std::string to_string(ScopeReason r)
{
    switch (r) {
    case ScopeReason::none:
        return "none";
    case ScopeReason::multiplicative_reduction:
        return "multiplicative_reduction";
    case ScopeReason::ordinary_reduction:
        return "ordinary_reduction";
    case ScopeReason::canonical_subgroup:
        return "canonical_subgroup";
    case ScopeReason::p_at_most_7:
        return "p_at_most_7";
    case ScopeReason::e_not_below_p_minus_1:
        return "e_not_below_p_minus_1";
    case ScopeReason::p_not_above_sqrt_n0_plus_1:
        return "p_not_above_sqrt_n0_plus_1";
    }
    return "unknown";
}

std::string ImageReport::image_label() const
{
    switch (kind) {
    case ImageKind::full_cns_plus_all_levels:
        return "full_Cns_plus_all_levels";
    case ImageKind::preimage_of_cns_plus:
        return "preimage_of_Cns_plus_level_" + std::to_string(n0.value_or(0));
    case ImageKind::preimage_of_index3_subgroup:
        return "preimage_of_index3_subgroup_level_" + std::to_string(n0.value_or(0));
    case ImageKind::out_of_scope:
        break;
    }
    return "out_of_scope(" + to_string(reason) + ")";
}

int index_at_level(std::uint64_t p, int e, std::int64_t v_min_disc)
{
    if (e != 3 && e != 6)
        return 1;
    if (p % 9 == 2 && (v_min_disc == 4 || v_min_disc == 10))
        return 3;
    if (p % 9 == 5 && (v_min_disc == 2 || v_min_disc == 8))
        return 3;
    return 1;
}

namespace {

ImageReport& refuse(ImageReport& r, ScopeReason why)
{
    r.kind = ImageKind::out_of_scope;
    r.reason = why;
    r.index_at_level.reset();
    return r;
}

}  // namespace

ImageReport classify(std::uint64_t p, const Rational& a, const Rational& b,
                     const ClassifyOptions& options)
{
    WeierstrassCurve curve(p, a, b);
    ReductionData red = semistability_defect(curve);
    const CurveInvariants& inv = red.min_model.invariants();

    ImageReport r;
    r.p = p;
    r.a = curve.a();
    r.b = curve.b();
    r.e = red.e;
    r.v_min_disc = red.v_min_disc;
    r.reduction_type = red.potential_type;
    r.j = inv.j;
    r.v_j = inv.v_j;
    r.v_j1728 = inv.v_j1728;
    auto& hyp = r.hypotheses_checked;

    const bool p_ok = p > 7;
    hyp.push_back({"p > 7", p_ok});
    const bool good = red.potential_type != ReductionType::multiplicative;
    hyp.push_back({"potentially good reduction", good});
    if (!good)
        return refuse(r, ScopeReason::multiplicative_reduction);
    const bool supersingular = red.potential_type == ReductionType::good_supersingular;
    hyp.push_back({red.e >= 3 ? "e | p + 1" : "supersingular reduction of the good fibre",
                   supersingular});
    if (!supersingular)
        return refuse(r, ScopeReason::ordinary_reduction);

    if (red.e <= 2) {
        hyp.push_back({"mod p image in C_ns+(p) (assumed)", true});
        if (!p_ok)
            return refuse(r, ScopeReason::p_at_most_7);
        r.kind = ImageKind::full_cns_plus_all_levels;
        r.index_at_level = 1;
        r.conditional = true;
        return r;
    }

    const bool e_small = static_cast<std::uint64_t>(red.e) + 1 < p;
    hyp.push_back({"e < p - 1", e_small});
    if (!e_small)
        return refuse(r, ScopeReason::e_not_below_p_minus_1);
    if (!p_ok)
        return refuse(r, ScopeReason::p_at_most_7);

    r.hodge = hodge_parameters(curve, options.hodge);
    const HodgeParameters& h = *r.hodge;
    r.canonical_subgroup = h.canonical_subgroup;
    hyp.push_back({"no canonical subgroup", !h.canonical_subgroup});
    if (h.canonical_subgroup)
        return refuse(r, ScopeReason::canonical_subgroup);

    const int index = index_at_level(p, red.e, red.v_min_disc);
    if (!h.n0) {
        // beta = 0: alpha in {0, infinity}, no finite stabilization level.
        r.kind = ImageKind::full_cns_plus_all_levels;
        r.index_at_level = index;
        return r;
    }
    r.n0 = h.n0;
    const auto n0 = static_cast<std::uint64_t>(*h.n0);
    const bool sqrt_ok = p * p > n0 + 1;
    hyp.push_back({"p > sqrt(n0 + 1)", sqrt_ok});
    if (!sqrt_ok)
        return refuse(r, ScopeReason::p_not_above_sqrt_n0_plus_1);
    r.index_at_level = index;
    r.kind = index == 3 ? ImageKind::preimage_of_index3_subgroup : ImageKind::preimage_of_cns_plus;
    return r;
}

}  // namespace pcartan
