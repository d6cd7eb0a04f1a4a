// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/report_json.hpp"

namespace pcartan {

namespace {

Json precision_json(std::int64_t n)
{
    if (n == PadicScalar::kExact)
        return "exact";
    return n;
}

template <typename T>
Json optional_json(const std::optional<T>& x)
{
    if (!x)
        return nullptr;
    return *x;
}

}  // namespace

Json to_json(const Valuation& v)
{
    return v.to_string();
}

Json to_json(const PadicScalar& x)
{
    Json j;
    j["unit"] = x.unit().get_str();
    j["valuation"] = x.is_zero() ? Json(nullptr) : Json(x.int_valuation());
    j["abs_precision"] = precision_json(x.absolute_precision());
    return j;
}

Json to_json(const EisensteinElement& x)
{
    Json j;
    j["e"] = x.ram_index();
    Json coords = Json::array();
    for (const auto& c : x.coords())
        coords.push_back(c.to_rational().get_str());
    j["coords"] = coords;
    j["pi_precision"] = precision_json(x.pi_precision());
    j["zero"] = x.is_zero();
    j["valuation"] = x.is_zero() && !x.is_exact_zero() ? Json(nullptr) : to_json(x.valuation());
    return j;
}

Json to_json(const Alpha& a)
{
    Json j;
    switch (a.kind()) {
    case Alpha::Kind::infinity:
        j["kind"] = "infinity";
        j["value"] = nullptr;
        break;
    case Alpha::Kind::unresolved:
        j["kind"] = "unresolved";
        j["value"] = nullptr;
        break;
    case Alpha::Kind::finite:
        j["kind"] = "finite";
        j["value"] = to_json(a.value());
        break;
    }
    return j;
}

Json to_json(const HodgeParameters& h)
{
    Json j;
    j["e"] = h.e;
    j["beta"] = to_json(h.beta);
    j["beta_precision"] = h.beta_precision;
    j["k_used"] = h.k_used;
    j["beta_certified_nonzero"] = h.beta_certified_nonzero;
    j["v_beta"] = to_json(h.v_beta);
    j["v_beta_closed_form"] = to_json(h.v_beta_closed);
    j["epsilon"] = h.epsilon;
    j["alpha"] = to_json(h.alpha);
    j["v_alpha"] = optional_json(h.v_alpha);
    j["v_alpha_inv_normalized"] = optional_json(h.v_alpha_inv_normalized);
    j["twist_applied"] = h.twist_applied;
    j["n0"] = optional_json(h.n0);
    return j;
}

Json to_json(const ImageReport& r)
{
    Json j;
    j["p"] = r.p;
    j["A"] = r.a.get_str();
    j["B"] = r.b.get_str();
    j["e"] = r.e;
    j["v_min_disc"] = r.v_min_disc;
    j["reduction_type"] = to_string(r.reduction_type);
    j["j"] = r.j.get_str();
    j["v_j"] = to_json(r.v_j);
    j["v_j1728"] = to_json(r.v_j1728);
    j["canonical_subgroup"] = optional_json(r.canonical_subgroup);
    j["hodge"] = r.hodge ? to_json(*r.hodge) : Json(nullptr);
    j["n0"] = optional_json(r.n0);
    j["image_label"] = r.image_label();
    j["index_at_level"] = optional_json(r.index_at_level);
    j["out_of_scope_reason"] =
        r.kind == ImageKind::out_of_scope ? Json(to_string(r.reason)) : Json(nullptr);
    j["conditional"] = r.conditional;
    Json hyps = Json::array();
    for (const auto& h : r.hypotheses_checked)
        hyps.push_back(Json{{"condition", h.condition}, {"holds", h.holds}});
    j["hypotheses_checked"] = hyps;
    return j;
}

Json to_json(const SparsePolynomialL& g)
{
    Json j;
    j["p"] = g.p;
    j["e"] = g.e;
    j["degree"] = g.degree();
    Json terms = Json::array();
    for (const auto& [x, v] : coefficient_valuations(g))
        terms.push_back(Json{{"exponent", x}, {"valuation", to_json(v)}});
    j["coefficient_valuations"] = terms;
    return j;
}

Json to_json(const std::vector<RootClass>& roots)
{
    Json out = Json::array();
    for (const auto& r : roots)
        out.push_back(Json{{"valuation", to_json(r.valuation)}, {"count", r.multiplicity}});
    return out;
}

std::string dump(const Json& j)
{
    return j.dump(2);
}

}  // namespace pcartan
