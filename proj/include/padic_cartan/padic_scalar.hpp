// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "padic_cartan/valuation.hpp"

namespace pcartan {

/// p^k as a big integer (k >= 0).
Integer prime_power(std::uint64_t p, std::int64_t k);

/// An element of Q_p known modulo p^N.
///
/// The value is unit * p^valuation where the unit is coprime to p and is
/// reduced modulo p^(N - valuation).  Zero comes in two flavours: the exact
/// zero (infinite valuation and precision) and O(p^N), a value only known to
/// be divisible by p^N.  Precision is propagated pessimistically: no result
/// carries more digits than its inputs justify.
class PadicScalar {
public:
    static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

    PadicScalar() = default;

    static PadicScalar exact_zero(std::uint64_t p);
    /// O(p^N).
    static PadicScalar zero(std::uint64_t p, std::int64_t absolute_precision);
    static PadicScalar from_integer(std::uint64_t p, const Integer& x,
                                    std::int64_t absolute_precision);
    /// Rationals may have p in the denominator.
    static PadicScalar from_rational(std::uint64_t p, const Rational& x,
                                     std::int64_t absolute_precision);
    /// x with `relative_precision` significant digits; exact zero for x == 0.
    static PadicScalar from_rational_relative(std::uint64_t p, const Rational& x,
                                              std::int64_t relative_precision);
    /// unit * p^valuation, unit known mod p^relative_precision.
    static PadicScalar from_unit(std::uint64_t p, const Integer& unit, std::int64_t valuation,
                                 std::int64_t relative_precision);

    std::uint64_t prime() const { return p_; }
    bool is_exact_zero() const { return prec_ == kExact; }
    /// True for the exact zero and for O(p^N).
    bool is_zero() const { return unit_ == 0; }

    /// Exact for nonzero values.  For O(p^N) this is the lower bound N, for
    /// the exact zero it is infinite.
    Valuation valuation() const;
    /// Integer valuation of a nonzero value, or the bound N for O(p^N).
    std::int64_t int_valuation() const;
    std::int64_t absolute_precision() const { return prec_; }
    std::int64_t relative_precision() const;
    const Integer& unit() const { return unit_; }

    PadicScalar operator-() const;
    friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
    friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
    friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
    /// Throws DivisionByZero when b is zero to its precision.
    friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);

    PadicScalar inverse() const;
    PadicScalar pow(std::uint64_t n) const;
    /// Multiplication by p^k; exact, shifts the precision along.
    PadicScalar shifted(std::int64_t k) const;
    /// Multiplication by an exact integer.
    PadicScalar mul_exact(const Integer& x) const;
    /// Division by an exact nonzero integer.
    PadicScalar div_exact(const Integer& x) const;
    /// Forgets digits at and beyond p^N (no-op if already coarser).
    PadicScalar with_precision_cap(std::int64_t absolute_precision) const;

    /// unit * p^valuation as a rational (0 for zeros).
    Rational to_rational() const;
    /// Value modulo p^N as an integer in [0, p^N); requires valuation >= 0.
    Integer residue(std::int64_t n) const;

    /// a - b is zero to the common precision.
    friend bool congruent(const PadicScalar& a, const PadicScalar& b);

    /// e.g. "59003*11^-1 + O(11^4)" or "0".
    std::string to_string() const;

private:
    static PadicScalar make(std::uint64_t p, Integer x, std::int64_t v, std::int64_t n);
    std::int64_t base_valuation() const { return unit_ == 0 ? prec_ : val_; }

    std::uint64_t p_ = 0;
    Integer unit_{0};
    std::int64_t val_ = 0;
    std::int64_t prec_ = kExact;
};

}  // namespace pcartan
