// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "padic_cartan/classifier.hpp"
#include "padic_cartan/errors.hpp"
#include "padic_cartan/regression.hpp"
#include "padic_cartan/report_json.hpp"

using namespace pcartan;

TEST_SUITE("classifier")
{
    TEST_CASE("worked examples")
    {
        ImageReport r1 = classify(11, 1331, 121);
        CHECK(r1.image_label() == "preimage_of_index3_subgroup_level_1");
        CHECK(r1.n0 == std::optional<std::int64_t>(1));
        CHECK(r1.index_at_level == std::optional<int>(3));
        ImageReport r2 = classify(23, Rational(prime_power(23, 4)), 529);
        CHECK(r2.image_label() == "preimage_of_Cns_plus_level_2");
        CHECK(r2.index_at_level == std::optional<int>(1));
        ImageReport r3 = classify(11, 11, 121);
        CHECK(r3.image_label() == "out_of_scope(canonical_subgroup)");
        CHECK(r3.canonical_subgroup == std::optional<bool>(true));
        CHECK(!r3.index_at_level.has_value());
    }

    TEST_CASE("every failed hypothesis names itself")
    {
        // Multiplicative.
        CHECK(classify(11, -3, 13).image_label() == "out_of_scope(multiplicative_reduction)");
        // e = 4 with p = 1 mod 4: potentially ordinary.
        CHECK(classify(13, 13, 0).image_label() == "out_of_scope(ordinary_reduction)");
        // Good ordinary reduction: y^2 = x^3 + 1 at p = 13 (13 = 1 mod 3).
        CHECK(classify(13, 0, 1).image_label() == "out_of_scope(ordinary_reduction)");
        // e = 6 at p = 5: e < p - 1 is the first gate to fail.
        ImageReport small = classify(5, 0, 5);
        CHECK(small.image_label() == "out_of_scope(e_not_below_p_minus_1)");
        CHECK(small.hypotheses_checked.front().condition == "p > 7");
        CHECK(!small.hypotheses_checked.front().holds);
        // e = 4 at p = 7.
        CHECK(classify(7, 7, 0).image_label() == "out_of_scope(p_at_most_7)");
        // Good supersingular at p = 5.
        CHECK(classify(5, 0, 1).image_label() == "out_of_scope(p_at_most_7)");
        // n0 large enough that p <= sqrt(n0 + 1): v(j) = 3 * 123 - 4.
        ImageReport big = classify(11, Rational(prime_power(11, 123)), 121);
        REQUIRE(big.n0.has_value());
        CHECK(*big.n0 >= 121);
        CHECK(big.image_label() == "out_of_scope(p_not_above_sqrt_n0_plus_1)");
        ImageReport edge = classify(11, Rational(prime_power(11, 40)), 121);
        CHECK(edge.image_label() == "preimage_of_index3_subgroup_level_" +
                                        std::to_string(*edge.n0));
    }

    TEST_CASE("e <= 2 is reported as full and conditional")
    {
        // y^2 = x^3 + 1 at p = 11: good supersingular, e = 1.
        ImageReport r = classify(11, 0, 1);
        CHECK(r.e == 1);
        CHECK(r.image_label() == "full_Cns_plus_all_levels");
        CHECK(r.conditional);
        ImageReport t = classify(11, 0, 1331);
        CHECK(t.e == 2);
        CHECK(t.image_label() == "full_Cns_plus_all_levels");
    }

    TEST_CASE("index-3 rule against the fundamental characters: y^2 = x^3 + p^i")
    {
        for (std::uint64_t p : {11ULL, 23ULL, 29ULL, 41ULL}) {
            for (unsigned i : {1U, 2U, 4U, 5U}) {
                ImageReport r = classify(p, 0, Rational(prime_power(p, i)));
                INFO("p=", p, " i=", i);
                CHECK(r.e == 6 / static_cast<int>(std::gcd(2U, i)));
                CHECK(r.v_min_disc == 2 * static_cast<std::int64_t>(i));
                CHECK(r.image_label() == "full_Cns_plus_all_levels");
                REQUIRE(r.index_at_level.has_value());
                // v(alpha) <= 0 exactly when v(Delta) < 6.
                CHECK(*r.index_at_level ==
                      oracle::index_from_characters(p, r.e, r.v_min_disc < 6));
                if (*r.index_at_level == 3) {
                    CHECK((r.e == 3 || r.e == 6));
                    CHECK((p % 9 == 2 || p % 9 == 5));
                }
            }
        }
        // All four cases occur for p = 2 and p = 5 mod 9.
        int threes = 0;
        for (unsigned i : {1U, 2U, 4U, 5U})
            threes += classify(11, 0, Rational(prime_power(11, i))).index_at_level == 3;
        CHECK(threes == 2);
    }

    TEST_CASE("random lifts: index rule, twist invariance, determinism")
    {
        std::mt19937_64 rng(77);
        for (std::uint64_t p : {11ULL, 23ULL, 29ULL, 41ULL, 47ULL}) {
            for (int e : {3, 4, 6}) {
                if ((p + 1) % static_cast<std::uint64_t>(e) != 0)
                    continue;
                for (int n = 0; n < 12; ++n) {
                    WeierstrassCurve c = oracle::random_lift(rng, p, e);
                    INFO("curve ", c.to_string());
                    ImageReport r = classify(p, c.a(), c.b());
                    const HodgeParameters& h = r.hodge.value();
                    if (r.kind != ImageKind::out_of_scope) {
                        REQUIRE(h.v_alpha.has_value());
                        CHECK(*r.index_at_level ==
                              oracle::index_from_characters(p, e, *h.v_alpha <= 0));
                    }
                    WeierstrassCurve t = quadratic_twist(c, Integer(static_cast<unsigned long>(p)));
                    ImageReport rt = classify(p, t.a(), t.b());
                    CHECK(rt.n0 == r.n0);
                    CHECK(rt.index_at_level == r.index_at_level);
                    CHECK(rt.kind == r.kind);
                    CHECK(dump(to_json(classify(p, c.a(), c.b()))) == dump(to_json(r)));
                }
            }
        }
    }

    TEST_CASE("per-prime bound equals the group-order quotient")
    {
        for (std::uint64_t p = 11; p < 100; ++p) {
            if (!is_prime(p))
                continue;
            for (unsigned n = 1; n <= 4; ++n) {
                Rational q(oracle::gl2_order(p, n), oracle::cns_plus_order(p, n));
                q.canonicalize();
                CHECK(per_prime_index_bound(p, n) == q);
            }
        }
        CHECK(per_prime_index_bound(3, 2) == 81);
        CHECK(per_prime_index_bound(5, 1) == 30);
        CHECK(per_prime_index_bound(5, 2) == 250);
        CHECK(per_prime_index_bound(7, 1) == 147);
        CHECK(per_prime_index_bound(7, 2) == 1029);
        CHECK_THROWS_AS(per_prime_index_bound(5, 1, excluded_j_invariant()), DomainError);
        CHECK(excluded_j_invariant() == Rational(Integer(16) * 9 * 78125 * 12167));
    }

    TEST_CASE("adelic bounds")
    {
        AdelicBound b = adelic_bound(0);
        CHECK(std::fabs(b.bound_a / (1.6e17 * std::pow(480.0, 3.11)) - 1) < 1e-12);
        const double d = adelic_delta(0);
        CHECK(std::fabs(d - 1 / (std::log(std::log(40.0) + 7.6) - 0.903)) < 1e-15);
        // bound_a increases everywhere.  The exponent of bound_b shrinks with
        // delta(12h), so bound_b falls until h ~ 32.65 and rises after.
        double prev_a = 0, prev_b = 0;
        for (int i = 0; i <= 400; ++i) {
            const double h = i * 0.25;
            AdelicBound x = adelic_bound(h);
            CHECK(x.bound_a > prev_a);
            if (i > 0 && h <= 32.5)
                CHECK(x.bound_b < prev_b);
            if (h >= 33)
                CHECK(x.bound_b > prev_b);
            CHECK(x.bound_a < x.bound_b);
            prev_a = x.bound_a;
            prev_b = x.bound_b;
        }
        for (int i = 0; i < 100; ++i) {
            const double h = 33 * std::pow(10.0, i * 0.08);
            AdelicBound x = adelic_bound(h), y = adelic_bound(h * 1.2);
            CHECK(y.bound_a > x.bound_a);
            CHECK(y.bound_b > x.bound_b);
        }
        CHECK_THROWS_AS(adelic_bound(-1), DomainError);
    }

    TEST_CASE("JSON reports round-trip byte for byte")
    {
        for (auto [p, a, b] : {std::tuple<std::uint64_t, Rational, Rational>{11, 1331, 121},
                               {11, 11, 121},
                               {11, 0, 1},
                               {11, 0, 11},
                               {11, 161051, 161051},
                               {11, -3, 13},
                               {23, Rational(1, 23), Rational(5, 529)}}) {
            const std::string s = dump(to_json(classify(p, a, b)));
            CHECK(dump(Json::parse(s)) == s);
        }
        Json j = to_json(classify(11, 1331, 121));
        const char* keys[] = {"p", "A", "B", "e", "v_min_disc", "reduction_type", "j", "v_j",
                              "v_j1728", "canonical_subgroup", "hodge", "n0", "image_label",
                              "index_at_level", "out_of_scope_reason", "conditional",
                              "hypotheses_checked"};
        std::size_t i = 0;
        for (const auto& [k, v] : j.items())
            CHECK(k == keys[i++]);
        CHECK(i == std::size(keys));
        CHECK(j["hodge"]["beta"]["coords"] == Json::array({"0", "22", "0"}));
    }

    TEST_CASE("regression checks pass and the table mutation is caught")
    {
        for (const auto& r : run_regressions())
            CHECK_MESSAGE(r.outcome.pass, r.name, ": ", r.outcome.detail);
        RegressionFaults f;
        f.corrupt_v_alpha_table = true;
        bool caught = false;
        for (const auto& r : run_regressions(f))
            if (r.name == "ex1_v_alpha_inverse")
                caught = !r.outcome.pass;
        CHECK(caught);
    }
}
