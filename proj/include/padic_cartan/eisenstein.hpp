// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic_cartan/padic_scalar.hpp"

namespace pcartan {

/// Element of L = Q_p(pi) with pi^e = -p, stored as sum c_i pi^i, 0 <= i < e.
///
/// e = 1 is accepted and gives Q_p itself (pi = -p).  Precision is counted in
/// powers of pi: an element is known modulo pi^P with P = min_i(e*N_i + i),
/// N_i being the absolute precision of c_i.
class EisensteinElement {
public:
    static constexpr std::int64_t kExact = PadicScalar::kExact;

    EisensteinElement() = default;

    static EisensteinElement exact_zero(std::uint64_t p, int e);
    /// O(pi^P).
    static EisensteinElement zero(std::uint64_t p, int e, std::int64_t pi_precision);
    static EisensteinElement one(std::uint64_t p, int e, std::int64_t pi_precision);
    static EisensteinElement uniformizer(std::uint64_t p, int e, std::int64_t pi_precision);
    static EisensteinElement from_scalar(int e, const PadicScalar& c);
    /// x known mod pi^P.  Only zero is ever exact.
    static EisensteinElement from_rational(std::uint64_t p, int e, const Rational& x,
                                           std::int64_t pi_precision);
    static EisensteinElement from_coords(std::uint64_t p, std::vector<PadicScalar> coords);

    std::uint64_t prime() const { return p_; }
    int ram_index() const { return static_cast<int>(coords_.size()); }
    const std::vector<PadicScalar>& coords() const { return coords_; }
    const PadicScalar& coord(int i) const { return coords_.at(static_cast<std::size_t>(i)); }

    /// The element is known modulo pi^P; kExact when every coordinate is exact.
    std::int64_t pi_precision() const;
    /// Zero to the carried precision (includes the exact zero).
    bool is_zero() const;
    bool is_exact_zero() const;
    /// Exact when nonzero, infinite for the exact zero, and the lower bound
    /// P/e for a zero known only mod pi^P.
    Valuation valuation() const;
    /// Valuation times e, as an integer; same conventions as valuation().
    std::int64_t pi_valuation() const;

    EisensteinElement operator-() const;
    friend EisensteinElement operator+(const EisensteinElement& a, const EisensteinElement& b);
    friend EisensteinElement operator-(const EisensteinElement& a, const EisensteinElement& b);
    friend EisensteinElement operator*(const EisensteinElement& a, const EisensteinElement& b);
    friend EisensteinElement operator/(const EisensteinElement& a, const EisensteinElement& b);

    EisensteinElement scaled(const PadicScalar& s) const;
    EisensteinElement mul_exact(const Integer& x) const;
    EisensteinElement div_exact(const Integer& x) const;
    /// Multiplication by pi^k, k of either sign.  Exact.
    EisensteinElement mul_pi_power(std::int64_t k) const;
    EisensteinElement pow(std::uint64_t n) const;
    /// Throws DivisionByZero for elements that are zero to precision.
    EisensteinElement inverse() const;

    /// Forget everything at and beyond pi^P.
    EisensteinElement with_pi_precision(std::int64_t pi_precision) const;

    /// The element as a scalar of Q_p; throws InconsistencyError if a higher
    /// coordinate is nonzero to precision.
    PadicScalar to_scalar() const;

    /// a == b mod pi^m.  Throws PrecisionError when either side is not known
    /// that far.
    friend bool congruent_mod_pi(const EisensteinElement& a, const EisensteinElement& b,
                                 std::int64_t m);

    /// e.g. "20*11^0*pi^2 + O(pi^12)".
    std::string to_string() const;

private:
    void check_compatible(const EisensteinElement& other) const;

    std::uint64_t p_ = 0;
    std::vector<PadicScalar> coords_;
};

/// c * pi^r with c an exact rational; how models over L are produced.
struct PiMonomial {
    Rational c{0};
    std::int64_t r = 0;

    bool is_zero() const { return c == 0; }
    /// v(c) + r/e.
    Valuation valuation(std::uint64_t p, int e) const;
    /// Value known mod pi^P.
    EisensteinElement to_element(std::uint64_t p, int e, std::int64_t pi_precision) const;
    std::string to_string() const;
};

}  // namespace pcartan
