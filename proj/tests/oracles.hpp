// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Reference computations that share no code path with the library.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "padic_cartan/curve.hpp"
#include "padic_cartan/eisenstein.hpp"

namespace oracle {

using pcartan::Integer;
using pcartan::Rational;

/// Exact element of Q(pi) with pi^e = -p, as rational coordinates.
struct Exact {
    std::uint64_t p = 0;
    std::vector<Rational> c;  // size e

    static Exact zero(std::uint64_t p, int e);
    static Exact rational(std::uint64_t p, int e, const Rational& x);
    static Exact monomial(std::uint64_t p, int e, const pcartan::PiMonomial& m);
    bool is_zero() const;
    friend Exact operator+(const Exact& a, const Exact& b);
    friend Exact operator*(const Exact& a, const Exact& b);
    Exact scaled(const Rational& s) const;
    /// As an L-element known mod pi^precision.
    pcartan::EisensteinElement to_element(std::int64_t pi_precision) const;
};

/// d_1 .. d_n (index 0 unused) of the formal logarithm of y^2 = x^3 + Ax + B
/// in t = -x/y.  Uses w = -1/y from w = t^3 + A t w^2 + B w^3 and the
/// differential dy / (3x^2 + A), so it never touches dx / 2y.
std::vector<Exact> exact_log(const Exact& a, const Exact& b, std::size_t n);

/// #GL_2(Z/p^n) and #C_ns+(p^n), from the orders over F_p and the kernels of
/// reduction.
Integer gl2_order(std::uint64_t p, unsigned n);
Integer cns_plus_order(std::uint64_t p, unsigned n);

/// Index from the exponents of the level-2 fundamental character on inertia.
int index_from_characters(std::uint64_t p, int e, bool v_alpha_at_most_zero);

/// Supersingularity of y^2 = x^3 + ax + b over F_p by counting points.
bool supersingular_by_count(std::int64_t a, std::int64_t b, std::uint64_t p);

struct ExactModel {
    Exact a;
    Exact b;
};

/// Random integral A, B over Q_p(pi) with unit discriminant; A is zero a
/// quarter of the time.
ExactModel random_unit_model(std::mt19937_64& rng, std::uint64_t p, int e);

/// y^2 = x^3 + u p^i x + w p^j, A and B nonzero, with defect e and
/// supersingular potential good reduction.
pcartan::WeierstrassCurve random_lift(std::mt19937_64& rng, std::uint64_t p, int e);

/// Random integer in [0, bound).
Integer random_below(std::mt19937_64& rng, const Integer& bound);

}  // namespace oracle
