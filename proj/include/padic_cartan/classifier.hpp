// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic_cartan/curve.hpp"
#include "padic_cartan/volkov.hpp"

namespace pcartan {

enum class ImageKind {
    full_cns_plus_all_levels,
    preimage_of_cns_plus,
    preimage_of_index3_subgroup,
    out_of_scope,
};

enum class ScopeReason {
    none,
    multiplicative_reduction,
    ordinary_reduction,
    canonical_subgroup,
    p_at_most_7,
    e_not_below_p_minus_1,
    p_not_above_sqrt_n0_plus_1,
};

std::string to_string(ScopeReason r);

struct Hypothesis {
    std::string condition;
    bool holds = false;
};

struct ImageReport {
    std::uint64_t p = 0;
    Rational a;
    Rational b;
    int e = 0;
    std::int64_t v_min_disc = 0;
    ReductionType reduction_type = ReductionType::good_ordinary;
    Rational j;
    Valuation v_j;
    Valuation v_j1728;
    std::optional<bool> canonical_subgroup;
    std::optional<HodgeParameters> hodge;
    std::optional<std::int64_t> n0;
    ImageKind kind = ImageKind::out_of_scope;
    ScopeReason reason = ScopeReason::none;
    /// [C_ns+(p^n0) : image], or at every level for the full case.
    std::optional<int> index_at_level;
    /// The full-C_ns+ conclusion for e <= 2 presumes the mod p image already
    /// lies in C_ns+(p); that cannot be checked from A and B.
    bool conditional = false;
    std::vector<Hypothesis> hypotheses_checked;

    /// e.g. "preimage_of_index3_subgroup_level_1", "out_of_scope(canonical_subgroup)".
    std::string image_label() const;
};

struct ClassifyOptions {
    HodgeOptions hodge;
};

/// Throws DomainError for unsupported p and SingularCurve for Delta = 0.
/// Every failed hypothesis ends in an out_of_scope label, never a guess.
ImageReport classify(std::uint64_t p, const Rational& a, const Rational& b,
                     const ClassifyOptions& options = {});

/// Index 3 iff e in {3, 6} and (p = 2 mod 9, v(Delta) in {4, 10}) or
/// (p = 5 mod 9, v(Delta) in {2, 8}); 1 otherwise.
int index_at_level(std::uint64_t p, int e, std::int64_t v_min_disc);

/// [GL_2(Z_p) : image] for the largest n with image mod p^n in C_ns+(p^n).
/// Bounds for p in {3, 5, 7}, the exact value for p > 7.  Throws for the
/// excluded j-invariant 2^4 3^2 5^7 23^3.
Rational per_prime_index_bound(std::uint64_t p, unsigned n,
                               const std::optional<Rational>& j = std::nullopt);

/// 2^4 * 3^2 * 5^7 * 23^3.
Rational excluded_j_invariant();

struct AdelicBound {
    double bound_a;
    double bound_b;
};

/// delta(x) = 1 / (log(log(x + 40) + 7.6) - 0.903).
double adelic_delta(double x);

/// 1.6e17 (h + 480)^3.11 and 7e17 (h + 270)^(2 + 3.251 delta(12 h)).
AdelicBound adelic_bound(double h);

}  // namespace pcartan
