// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <string>

#include "padic_cartan/eisenstein.hpp"
#include "padic_cartan/valuation.hpp"

namespace pcartan {

/// Deterministic for every 64-bit input that matters here.
bool is_prime(std::uint64_t n);

/// Throws DomainError("p must be an odd prime > 3") otherwise.
void require_supported_prime(std::uint64_t p);

struct CurveInvariants {
    Rational discriminant;
    Rational j;
    Rational j_minus_1728;
    Valuation v_disc;
    Valuation v_j;
    Valuation v_j1728;
};

/// y^2 = x^3 + A x + B over Q_p, A and B exact rationals.
class WeierstrassCurve {
public:
    /// Throws DomainError for unsupported p, SingularCurve when the
    /// discriminant vanishes.
    WeierstrassCurve(std::uint64_t p, Rational a, Rational b);

    std::uint64_t prime() const { return p_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const CurveInvariants& invariants() const { return inv_; }

    /// (u^4 A, u^6 B).
    WeierstrassCurve scaled(const Rational& u) const;

    std::string to_string() const;

    friend bool operator==(const WeierstrassCurve& x, const WeierstrassCurve& y)
    {
        return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    std::uint64_t p_;
    Rational a_;
    Rational b_;
    CurveInvariants inv_;
};

/// Delta, j, j - 1728 and their valuations.
CurveInvariants invariants(const WeierstrassCurve& curve);

/// Integral model with the smallest v(Delta), reached by u = p^k scalings.
WeierstrassCurve minimal_model(const WeierstrassCurve& curve);

/// (d^2 A, d^3 B).
WeierstrassCurve quadratic_twist(const WeierstrassCurve& curve, const Integer& d);

enum class ReductionType { good_ordinary, good_supersingular, multiplicative };

std::string to_string(ReductionType t);

struct ReductionData {
    int e = 1;
    ReductionType potential_type = ReductionType::good_ordinary;
    WeierstrassCurve min_model;
    /// v(Delta) of min_model.  In [0, 12) for potentially good reduction.
    std::int64_t v_min_disc = 0;
    /// For e = 2 (and e = 1) the model whose reduction was inspected: the
    /// minimal model itself or its twist by p.
    WeierstrassCurve good_fibre;
};

/// Semistability defect, potential reduction type and minimal model.
ReductionData semistability_defect(const WeierstrassCurve& curve);

/// Coefficient of x^(p-1) in (x^3 + a x + b)^((p-1)/2) modulo p, for a, b
/// p-integral.
std::uint64_t hasse_invariant_mod_p(const Rational& a, const Rational& b, std::uint64_t p);

/// Good model y^2 = x^3 + A_L x + B_L over L = Q_p(pi), pi^e = -p.
struct ModelOverL {
    std::uint64_t p = 0;
    int e = 0;
    PiMonomial a;
    PiMonomial b;
    /// The scaling u = pi^(-s) applied to the minimal model.
    std::int64_t s = 0;
    /// v(Delta) of the minimal model over Q_p.
    std::int64_t v_min_disc = 0;

    Valuation v_a() const { return a.valuation(p, e); }
    Valuation v_b() const { return b.valuation(p, e); }
    /// Valuation of -16(4A_L^3 + 27B_L^2); zero for a good model.
    Valuation v_disc() const;
};

/// Requires e in {3, 4, 6} to be the defect of the curve and e | p + 1;
/// throws DomainError otherwise or when the normalization v(B_L) = 0
/// (e = 3, 6), v(A_L) = 0 (e = 4) fails.
ModelOverL good_model_over_L(const WeierstrassCurve& curve, int e);

}  // namespace pcartan
