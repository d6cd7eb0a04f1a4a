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
#include "padic_cartan/formal_log.hpp"

namespace pcartan {

/// alpha in P^1(Q_p).  `unresolved` means beta was not certified nonzero at
/// the precision reached, so only the valuation (from the table) is known.
class Alpha {
public:
    enum class Kind { finite, infinity, unresolved };

    static Alpha infinity() { return Alpha(Kind::infinity, {}); }
    static Alpha finite(const PadicScalar& value) { return Alpha(Kind::finite, value); }
    static Alpha unresolved() { return Alpha(Kind::unresolved, {}); }

    Kind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == Kind::infinity; }
    bool is_finite() const { return kind_ == Kind::finite; }
    /// Throws unless finite.
    const PadicScalar& value() const;
    /// v(alpha^-1); +infinity for alpha = infinity.  Throws for alpha = 0
    /// and for unresolved values.
    Valuation inverse_valuation() const;

    std::string to_string() const;

private:
    Alpha(Kind k, PadicScalar v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    PadicScalar value_;
};

/// beta == -(p/pi) d_{p^(2k+1)} / d_{p^(2k)} mod pi^(ke+1), evaluated as
/// -b'/a' with b' = p^(k+1)/pi d_{p^(2k+1)} and a' = p^k d_{p^(2k)} a unit.
/// `precision` is the working pi-precision for a' and b' and must be at
/// least ke + 1; the result is capped at pi^(ke+1).
EisensteinElement beta_from_logarithm(const ModelOverL& model, std::uint64_t k,
                                      std::int64_t precision, const YasudaOptions& options = {});

/// v(j)/3 - 1/e for e in {3, 6}, v(j - 1728)/2 - 1/e for e = 4.
Valuation v_beta_closed_form(const Valuation& v_j, const Valuation& v_j1728, int e);

/// v(d_{p^(2k+1)}) + k + 1 - 1/e from a computed coefficient; this does not
/// depend on k.  Throws PrecisionError if the coefficient is only known to
/// vanish to its precision.
Valuation v_beta_from_coefficient(const ModelOverL& model, std::uint64_t k,
                                  std::int64_t precision, const YasudaOptions& options = {});

/// +1 iff v(Delta_min) < 6; only defined for v(Delta_min) in {2,3,4,8,9,10}.
int epsilon_sign(std::int64_t v_min_disc);

/// alpha = -p (beta/pi)^-1 for epsilon = +1, -p beta / pi^(e-3) for
/// epsilon = -1; beta = 0 gives infinity resp. 0.  Throws
/// InconsistencyError when beta is not in the matching coset, and
/// PrecisionError when beta is zero only to its precision.
Alpha alpha_from_beta(const EisensteinElement& beta, int epsilon, int e);

/// v(alpha) from j.  Throws DomainError for j in {0, 1728}.
std::int64_t v_alpha_table(int e, std::int64_t v_min_disc, const Valuation& v_j,
                           const Valuation& v_j1728);

/// v(j) in {1, 2} for e in {3, 6}; v(j - 1728) = 1 for e = 4.
bool has_canonical_subgroup(int e, const Valuation& v_j, const Valuation& v_j1728);

/// floor(v(j)/3) for e in {3, 6}, floor(v(j - 1728)/2) for e = 4.  Throws
/// DomainError when a canonical subgroup is present or j is 0 or 1728.
std::int64_t stabilization_level(int e, const Valuation& v_j, const Valuation& v_j1728);

struct HodgeOptions {
    /// Working pi-precision; 0 means 4e.
    std::int64_t precision = 0;
    /// Largest k tried for the beta congruence.
    std::uint64_t k_max = 2;
    /// Skip any k whose p^(2k+1) exceeds this.
    std::uint64_t max_log_index = 25'000'000;
    YasudaOptions yasuda;
};

struct HodgeParameters {
    int e = 0;
    EisensteinElement beta;
    /// beta is known mod pi^beta_precision.
    std::int64_t beta_precision = 0;
    /// Levels k of the congruence actually evaluated.
    std::vector<std::uint64_t> k_used;
    bool beta_certified_nonzero = false;
    Valuation v_beta;
    Valuation v_beta_closed;
    int epsilon = 1;
    Alpha alpha = Alpha::unresolved();
    /// From the table; empty for j in {0, 1728}.
    std::optional<std::int64_t> v_alpha;
    bool canonical_subgroup = false;
    /// v(alpha^-1) after replacing E by its p-twist when v(alpha) > 1.
    std::optional<std::int64_t> v_alpha_inv_normalized;
    bool twist_applied = false;
    std::optional<std::int64_t> n0;
};

/// Runs the whole chain for a potential e-lift (e in {3, 4, 6}, e | p + 1,
/// e < p - 1) and cross-checks the independent routes, throwing
/// InconsistencyError on any disagreement.
HodgeParameters hodge_parameters(const WeierstrassCurve& curve, const HodgeOptions& options = {});

}  // namespace pcartan
