// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/padic_scalar.hpp"

#include <algorithm>

#include "padic_cartan/errors.hpp"

namespace pcartan {

Integer prime_power(std::uint64_t p, std::int64_t k)
{
    if (k < 0)
        throw DomainError("negative exponent in prime_power");
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k));
    return r;
}

namespace {

void check_prime(std::uint64_t p)
{
    if (p < 2)
        throw DomainError("PadicScalar needs a prime");
}

void check_same_prime(const PadicScalar& a, const PadicScalar& b)
{
    if (a.prime() != b.prime())
        throw DomainError("p-adic operands over different primes");
}

// Saturating addition for precisions.
std::int64_t add_prec(std::int64_t a, std::int64_t b)
{
    if (a == PadicScalar::kExact || b == PadicScalar::kExact)
        return PadicScalar::kExact;
    return a + b;
}

Integer inverse_mod(const Integer& u, const Integer& m)
{
    Integer r;
    if (mpz_invert(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DivisionByZero("unit is not invertible");
    return r;
}

}  // namespace

PadicScalar PadicScalar::make(std::uint64_t p, Integer x, std::int64_t v, std::int64_t n)
{
    PadicScalar r;
    r.p_ = p;
    if (v >= n) {
        r.prec_ = n;
        return r;
    }
    Integer mod = prime_power(p, n - v);
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    if (x == 0) {
        r.prec_ = n;
        return r;
    }
    Integer pp(static_cast<unsigned long>(p));
    long k = static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
    r.unit_ = x;
    r.val_ = v + k;
    r.prec_ = n;
    return r;
}

PadicScalar PadicScalar::exact_zero(std::uint64_t p)
{
    check_prime(p);
    PadicScalar r;
    r.p_ = p;
    return r;
}

PadicScalar PadicScalar::zero(std::uint64_t p, std::int64_t absolute_precision)
{
    check_prime(p);
    PadicScalar r;
    r.p_ = p;
    r.prec_ = absolute_precision;
    return r;
}

PadicScalar PadicScalar::from_integer(std::uint64_t p, const Integer& x,
                                      std::int64_t absolute_precision)
{
    check_prime(p);
    return make(p, x, 0, absolute_precision);
}

PadicScalar PadicScalar::from_rational(std::uint64_t p, const Rational& x,
                                       std::int64_t absolute_precision)
{
    check_prime(p);
    if (x == 0)
        return zero(p, absolute_precision);
    Integer pp(static_cast<unsigned long>(p));
    Integer num = x.get_num(), den = x.get_den();
    long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()));
    std::int64_t v = vn - vd;
    if (v >= absolute_precision)
        return zero(p, absolute_precision);
    Integer mod = prime_power(p, absolute_precision - v);
    Integer u = num * inverse_mod(den, mod);
    return make(p, u, v, absolute_precision);
}

PadicScalar PadicScalar::from_rational_relative(std::uint64_t p, const Rational& x,
                                                std::int64_t relative_precision)
{
    check_prime(p);
    if (x == 0)
        return exact_zero(p);
    std::int64_t v = padic_valuation(x, p).to_int();
    return from_rational(p, x, v + relative_precision);
}

PadicScalar PadicScalar::from_unit(std::uint64_t p, const Integer& unit, std::int64_t valuation,
                                   std::int64_t relative_precision)
{
    check_prime(p);
    return make(p, unit, valuation, valuation + relative_precision);
}

Valuation PadicScalar::valuation() const
{
    if (is_exact_zero())
        return Valuation::infinity();
    return Valuation(static_cast<long>(base_valuation()));
}

std::int64_t PadicScalar::int_valuation() const
{
    if (is_exact_zero())
        throw DomainError("valuation of exact zero is infinite");
    return base_valuation();
}

std::int64_t PadicScalar::relative_precision() const
{
    return unit_ == 0 ? 0 : prec_ - val_;
}

PadicScalar PadicScalar::operator-() const
{
    if (is_zero())
        return *this;
    return make(p_, -unit_, val_, prec_);
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b)
{
    if (a.is_exact_zero())
        return b;
    if (b.is_exact_zero())
        return a;
    check_same_prime(a, b);
    std::int64_t n = std::min(a.prec_, b.prec_);
    std::int64_t va = a.base_valuation(), vb = b.base_valuation();
    std::int64_t v0 = std::min(va, vb);
    if (v0 >= n)
        return PadicScalar::zero(a.p_, n);
    Integer x = a.unit_;
    if (va > v0 && a.unit_ != 0)
        x *= prime_power(a.p_, va - v0);
    Integer y = b.unit_;
    if (vb > v0 && b.unit_ != 0)
        y *= prime_power(b.p_, vb - v0);
    return PadicScalar::make(a.p_, x + y, v0, n);
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b)
{
    return a + (-b);
}

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b)
{
    if (a.is_exact_zero())
        return a;
    if (b.is_exact_zero())
        return b;
    check_same_prime(a, b);
    std::int64_t v = a.base_valuation() + b.base_valuation();
    std::int64_t rel = std::min(a.relative_precision(), b.relative_precision());
    if (a.is_zero() || b.is_zero())
        return PadicScalar::zero(a.p_, v + rel);
    return PadicScalar::make(a.p_, a.unit_ * b.unit_, v, v + rel);
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b)
{
    check_same_prime(a, b);
    if (b.is_zero())
        throw DivisionByZero("p-adic division by " + b.to_string());
    if (a.is_exact_zero())
        return a;
    std::int64_t v = a.base_valuation() - b.val_;
    std::int64_t rel = std::min(a.relative_precision(), b.relative_precision());
    if (a.is_zero())
        return PadicScalar::zero(a.p_, v);
    Integer mod = prime_power(a.p_, rel);
    return PadicScalar::make(a.p_, a.unit_ * inverse_mod(b.unit_, mod), v, v + rel);
}

PadicScalar PadicScalar::inverse() const
{
    return from_unit(p_, Integer(1), 0, relative_precision() + 1) / *this;
}

PadicScalar PadicScalar::pow(std::uint64_t n) const
{
    if (n == 0) {
        if (is_zero())
            throw DomainError("0^0");
        return from_unit(p_, Integer(1), 0, relative_precision());
    }
    if (is_exact_zero())
        return *this;
    if (is_zero())
        return zero(p_, prec_ * static_cast<std::int64_t>(n));
    std::int64_t rel = relative_precision();
    Integer mod = prime_power(p_, rel);
    Integer u;
    mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), n, mod.get_mpz_t());
    std::int64_t v = val_ * static_cast<std::int64_t>(n);
    return make(p_, u, v, v + rel);
}

PadicScalar PadicScalar::shifted(std::int64_t k) const
{
    if (is_exact_zero())
        return *this;
    PadicScalar r = *this;
    r.prec_ += k;
    if (unit_ != 0)
        r.val_ += k;
    return r;
}

PadicScalar PadicScalar::mul_exact(const Integer& x) const
{
    if (is_exact_zero())
        return *this;
    if (x == 0)
        return exact_zero(p_);
    Integer u = x;
    Integer pp(static_cast<unsigned long>(p_));
    long k = static_cast<long>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), pp.get_mpz_t()));
    if (unit_ == 0)
        return zero(p_, add_prec(prec_, k));
    return make(p_, unit_ * u, val_ + k, prec_ + k);
}

PadicScalar PadicScalar::div_exact(const Integer& x) const
{
    if (x == 0)
        throw DivisionByZero("division by exact zero integer");
    if (is_exact_zero())
        return *this;
    Integer u = x;
    Integer pp(static_cast<unsigned long>(p_));
    long k = static_cast<long>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), pp.get_mpz_t()));
    if (unit_ == 0)
        return zero(p_, prec_ - k);
    std::int64_t rel = relative_precision();
    Integer mod = prime_power(p_, rel);
    return make(p_, unit_ * inverse_mod(u, mod), val_ - k, prec_ - k);
}

PadicScalar PadicScalar::with_precision_cap(std::int64_t absolute_precision) const
{
    if (absolute_precision >= prec_)
        return *this;
    if (unit_ == 0)
        return zero(p_, absolute_precision);
    return make(p_, unit_, val_, absolute_precision);
}

Rational PadicScalar::to_rational() const
{
    if (unit_ == 0)
        return Rational(0);
    Rational r(unit_);
    if (val_ >= 0)
        r *= Rational(prime_power(p_, val_));
    else
        r /= Rational(prime_power(p_, -val_));
    r.canonicalize();
    return r;
}

Integer PadicScalar::residue(std::int64_t n) const
{
    if (n <= 0)
        return Integer(0);
    if (unit_ == 0) {
        if (prec_ < n)
            throw PrecisionError("residue mod p^" + std::to_string(n) + " of " + to_string());
        return Integer(0);
    }
    if (val_ < 0)
        throw DomainError("residue of a non-integral p-adic number");
    if (prec_ < n)
        throw PrecisionError("residue mod p^" + std::to_string(n) + " of " + to_string());
    Integer mod = prime_power(p_, n);
    Integer r = unit_ * prime_power(p_, val_);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool congruent(const PadicScalar& a, const PadicScalar& b)
{
    return (a - b).is_zero();
}

std::string PadicScalar::to_string() const
{
    if (is_exact_zero())
        return "0";
    std::string ps = std::to_string(p_);
    std::string big_o = "O(" + ps + "^" + std::to_string(prec_) + ")";
    if (unit_ == 0)
        return big_o;
    std::string s = unit_.get_str();
    if (val_ != 0)
        s += "*" + ps + "^" + std::to_string(val_);
    return s + " + " + big_o;
}

}  // namespace pcartan
