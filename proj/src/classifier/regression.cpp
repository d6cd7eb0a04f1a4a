// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/regression.hpp"

#include <exception>

#include "padic_cartan/classifier.hpp"
#include "padic_cartan/formal_log.hpp"
#include "padic_cartan/volkov.hpp"

namespace pcartan {

namespace {

Rational pw(std::uint64_t p, unsigned k)
{
    return Rational(prime_power(p, k));
}

CheckOutcome expect(bool ok, const std::string& got)
{
    return {ok, got};
}

std::int64_t table_with_faults(const RegressionFaults& f, int e, std::int64_t vd,
                               const Valuation& vj, const Valuation& vj1728)
{
    std::int64_t v = v_alpha_table(e, vd, vj, vj1728);
    return f.corrupt_v_alpha_table ? v + 1 : v;
}

// Example 1: p = 11, y^2 = x^3 + p^3 x + p^2.
WeierstrassCurve ex1()
{
    return WeierstrassCurve(11, pw(11, 3), pw(11, 2));
}

ModelOverL ex1_model()
{
    return good_model_over_L(ex1(), 3);
}

// d_r against c * pi^s mod p^4, i.e. mod pi^12.
CheckOutcome log_coefficient_check(std::uint64_t r, const Rational& c, std::int64_t s)
{
    const ModelOverL m = ex1_model();
    EisensteinElement d = yasuda_coefficient(m, r, 12);
    EisensteinElement want = PiMonomial{c, s}.to_element(11, 3, 12);
    return expect(congruent_mod_pi(d, want, 12), "d_" + std::to_string(r) + " = " + d.to_string());
}

CheckOutcome ex2_check(std::uint64_t p, const RegressionFaults& f)
{
    WeierstrassCurve c(p, pw(p, 4), pw(p, 2));
    ReductionData red = semistability_defect(c);
    const CurveInvariants& inv = red.min_model.invariants();
    ImageReport r = classify(p, c.a(), c.b());
    const HodgeParameters& h = r.hodge.value();
    std::int64_t v_inv = -table_with_faults(f, 3, red.v_min_disc, inv.v_j, inv.v_j1728);
    const int index = index_at_level(p, 3, red.v_min_disc);
    const std::string label = index == 3 ? "preimage_of_index3_subgroup_level_2"
                                         : "preimage_of_Cns_plus_level_2";
    bool ok = red.e == 3 && h.v_beta == Valuation(Rational(7, 3)) && v_inv == 1 &&
              r.n0 == std::optional<std::int64_t>(2) && r.image_label() == label;
    return expect(ok, "v(beta)=" + h.v_beta.to_string() + " v(alpha^-1)=" + std::to_string(v_inv) +
                          " label=" + r.image_label());
}

CheckOutcome ex3_check(std::uint64_t p)
{
    WeierstrassCurve c(p, Rational(static_cast<unsigned long>(p)), pw(p, 2));
    ImageReport r = classify(p, c.a(), c.b());
    const HodgeParameters& h = r.hodge.value();
    bool ok = r.e == 4 && h.v_beta == Valuation(Rational(1, 4)) && h.canonical_subgroup &&
              r.image_label() == "out_of_scope(canonical_subgroup)";
    return expect(ok, "v(beta)=" + h.v_beta.to_string() + " label=" + r.image_label());
}

std::vector<RegressionCheck> build()
{
    std::vector<RegressionCheck> out;
    auto add = [&](std::string name, std::string what,
                   std::function<CheckOutcome(const RegressionFaults&)> fn) {
        out.push_back({std::move(name), std::move(what), std::move(fn)});
    };

    add("ex1_defect", "p=11, y^2=x^3+p^3x+p^2: e=3, v(Delta)=4, supersingular",
        [](const RegressionFaults&) {
            ReductionData red = semistability_defect(ex1());
            return expect(red.e == 3 && red.v_min_disc == 4 &&
                              red.potential_type == ReductionType::good_supersingular,
                          "e=" + std::to_string(red.e) + " v(Delta)=" +
                              std::to_string(red.v_min_disc));
        });
    add("ex1_model_over_L", "good model y^2 = x^3 + p pi^2 x + 1", [](const RegressionFaults&) {
        ModelOverL m = ex1_model();
        return expect(m.a.c == 11 && m.a.r == 2 && m.b.c == 1 && m.b.r == 0,
                      "A_L=" + m.a.to_string() + " B_L=" + m.b.to_string());
    });
    add("ex1_d_p", "d_p = 20 pi^2",
        [](const RegressionFaults&) { return log_coefficient_check(11, Rational(20), 2); });
    add("ex1_d_p2", "d_{p^2} = 59003/p mod p^4", [](const RegressionFaults&) {
        return log_coefficient_check(121, Rational(59003, 11), 0);
    });
    add("ex1_d_p3", "d_{p^3} = -62940 pi^2/p mod p^4", [](const RegressionFaults&) {
        return log_coefficient_check(1331, Rational(-62940, 11), 2);
    });
    add("ex1_d_p4", "d_{p^4} = 370910/p^2 mod p^4", [](const RegressionFaults&) {
        return log_coefficient_check(14641, Rational(370910, 121), 0);
    });
    add("ex1_d_p5", "d_{p^5} = -859443 pi^2/p^2 mod p^4", [](const RegressionFaults&) {
        return log_coefficient_check(161051, Rational(-859443, 121), 2);
    });
    add("ex1_beta_k1", "beta = 0 mod pi^4 at k=1", [](const RegressionFaults&) {
        EisensteinElement b = beta_from_logarithm(ex1_model(), 1, 12);
        return expect(b.pi_precision() == 4 && b.is_zero(), "beta=" + b.to_string());
    });
    add("ex1_beta_k2", "beta = 2 p pi mod pi^7 at k=2", [](const RegressionFaults&) {
        EisensteinElement b = beta_from_logarithm(ex1_model(), 2, 12);
        EisensteinElement want = PiMonomial{Rational(22), 1}.to_element(11, 3, 7);
        return expect(b.pi_precision() == 7 && congruent_mod_pi(b, want, 7),
                      "beta=" + b.to_string());
    });
    add("ex1_alpha", "alpha = 5 + O(p)", [](const RegressionFaults&) {
        EisensteinElement b = beta_from_logarithm(ex1_model(), 2, 12);
        Alpha a = alpha_from_beta(b, epsilon_sign(4), 3);
        bool ok = a.is_finite() && a.value().int_valuation() == 0 && a.value().residue(1) == 5;
        return expect(ok, "alpha=" + a.to_string());
    });
    add("ex1_v_alpha_inverse", "v(alpha^-1) = 0 from the j-invariant",
        [](const RegressionFaults& f) {
            const WeierstrassCurve curve = ex1();
            const CurveInvariants& inv = curve.invariants();
            std::int64_t v = -table_with_faults(f, 3, 4, inv.v_j, inv.v_j1728);
            return expect(v == 0, "v(alpha^-1)=" + std::to_string(v));
        });
    add("ex1_label", "preimage at level 1 of the index-3 subgroup", [](const RegressionFaults&) {
        ImageReport r = classify(11, pw(11, 3), pw(11, 2));
        return expect(r.image_label() == "preimage_of_index3_subgroup_level_1" &&
                          r.index_at_level == std::optional<int>(3),
                      r.image_label());
    });
    add("ex2_p11_beta_k3", "p=11, y^2=x^3+p^4x+p^2: beta from k=3 has valuation 7/3",
        [](const RegressionFaults&) {
            ModelOverL m = good_model_over_L(WeierstrassCurve(11, pw(11, 4), pw(11, 2)), 3);
            EisensteinElement b = beta_from_logarithm(m, 3, 12);
            return expect(!b.is_zero() && b.valuation() == Valuation(Rational(7, 3)),
                          "beta=" + b.to_string());
        });
    for (std::uint64_t p : {11, 23, 29})
        add("ex2_p" + std::to_string(p), "y^2=x^3+p^4x+p^2: v(beta)=7/3, v(alpha^-1)=1, n0=2",
            [p](const RegressionFaults& f) { return ex2_check(p, f); });
    for (std::uint64_t p : {11, 19, 23})
        add("ex3_p" + std::to_string(p), "y^2=x^3+px+p^2: v(beta)=1/4, canonical subgroup",
            [p](const RegressionFaults&) { return ex3_check(p); });
    add("cm_vanishing_p11", "y^2=x^3+1, p=11: d_p = d_{p^3} = 0, v(d_{p^2k}) = -k",
        [](const RegressionFaults&) {
            const std::uint64_t p = 11;
            EisensteinElement a = EisensteinElement::exact_zero(p, 1);
            EisensteinElement b = EisensteinElement::one(p, 1, 8);
            EisensteinElement d1 = yasuda_coefficient(a, b, 1, 4);
            EisensteinElement dp = yasuda_coefficient(a, b, 11, 4);
            EisensteinElement dp2 = yasuda_coefficient(a, b, 121, 4);
            EisensteinElement dp3 = yasuda_coefficient(a, b, 1331, 4);
            EisensteinElement dp4 = yasuda_coefficient(a, b, 14641, 4);
            bool ok = dp.is_exact_zero() && dp3.is_exact_zero() &&
                      d1.valuation() == Valuation(0L) && dp2.valuation() == Valuation(-1L) &&
                      dp4.valuation() == Valuation(-2L);
            return expect(ok, "d_p=" + dp.to_string() + " d_p3=" + dp3.to_string() +
                                  " v(d_p2)=" + dp2.valuation().to_string() +
                                  " v(d_p4)=" + dp4.valuation().to_string());
        });
    return out;
}

}  // namespace

const std::vector<RegressionCheck>& regression_checks()
{
    static const std::vector<RegressionCheck> checks = build();
    return checks;
}

std::vector<NamedOutcome> run_regressions(const RegressionFaults& faults)
{
    std::vector<NamedOutcome> out;
    for (const auto& c : regression_checks()) {
        CheckOutcome o;
        try {
            o = c.run(faults);
        } catch (const std::exception& ex) {
            o = {false, std::string("error: ") + ex.what()};
        }
        out.push_back({c.name, o});
    }
    return out;
}

}  // namespace pcartan
