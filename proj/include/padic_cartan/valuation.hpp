// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace pcartan {

using Integer = mpz_class;
using Rational = mpq_class;

/// An element of Q ∪ {+∞}, normalised so that v(p) = 1.
class Valuation {
public:
    Valuation() = default;  // zero
    Valuation(long v) : value_(v) {}
    Valuation(const Rational& v) : value_(v) { value_.canonicalize(); }

    static Valuation infinity();

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    /// Finite value; throws DomainError when infinite.
    const Rational& value() const;

    bool is_integer() const;
    /// Integer value; throws DomainError when infinite or fractional.
    std::int64_t to_int() const;

    friend Valuation operator+(const Valuation& a, const Valuation& b);
    friend Valuation operator-(const Valuation& a, const Rational& b);

    friend bool operator==(const Valuation& a, const Valuation& b);
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

    /// "inf" or the reduced fraction.
    std::string to_string() const;

private:
    bool infinite_ = false;
    Rational value_{0};
};

Valuation min(const Valuation& a, const Valuation& b);

/// Exact p-adic valuation of an integer or rational (infinite at zero).
Valuation padic_valuation(const Integer& x, std::uint64_t p);
Valuation padic_valuation(const Rational& x, std::uint64_t p);

/// v_p of a nonzero machine integer.
int valuation_u64(std::uint64_t x, std::uint64_t p);

/// floor of a rational.
Integer floor(const Rational& x);

}  // namespace pcartan
