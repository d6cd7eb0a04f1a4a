// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/eisenstein.hpp"

#include <algorithm>

#include "padic_cartan/errors.hpp"

namespace pcartan {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

void check_e(int e)
{
    if (e < 1)
        throw DomainError("ramification index must be positive");
}

}  // namespace

EisensteinElement EisensteinElement::exact_zero(std::uint64_t p, int e)
{
    check_e(e);
    EisensteinElement r;
    r.p_ = p;
    r.coords_.assign(static_cast<std::size_t>(e), PadicScalar::exact_zero(p));
    return r;
}

EisensteinElement EisensteinElement::zero(std::uint64_t p, int e, std::int64_t pi_precision)
{
    return exact_zero(p, e).with_pi_precision(pi_precision);
}

EisensteinElement EisensteinElement::one(std::uint64_t p, int e, std::int64_t pi_precision)
{
    return from_rational(p, e, Rational(1), pi_precision);
}

EisensteinElement EisensteinElement::uniformizer(std::uint64_t p, int e, std::int64_t pi_precision)
{
    return one(p, e, pi_precision - 1).mul_pi_power(1);
}

EisensteinElement EisensteinElement::from_scalar(int e, const PadicScalar& c)
{
    EisensteinElement r = exact_zero(c.prime(), e);
    r.coords_[0] = c;
    return r;
}

EisensteinElement EisensteinElement::from_rational(std::uint64_t p, int e, const Rational& x,
                                                   std::int64_t pi_precision)
{
    if (x == 0)
        return exact_zero(p, e);
    if (pi_precision == kExact)
        throw PrecisionError("nonzero rationals need a finite precision");
    EisensteinElement r = exact_zero(p, e);
    r.coords_[0] = PadicScalar::from_rational(p, x, ceil_div(pi_precision, e));
    return r.with_pi_precision(pi_precision);
}

EisensteinElement EisensteinElement::from_coords(std::uint64_t p, std::vector<PadicScalar> coords)
{
    if (coords.empty())
        throw DomainError("EisensteinElement needs at least one coordinate");
    for (const auto& c : coords)
        if (c.prime() != p)
            throw DomainError("coordinate over the wrong prime");
    EisensteinElement r;
    r.p_ = p;
    r.coords_ = std::move(coords);
    return r;
}

void EisensteinElement::check_compatible(const EisensteinElement& other) const
{
    if (p_ != other.p_ || coords_.size() != other.coords_.size())
        throw DomainError("elements of different Eisenstein extensions");
}

std::int64_t EisensteinElement::pi_precision() const
{
    const std::int64_t e = ram_index();
    std::int64_t best = kExact;
    for (std::int64_t i = 0; i < e; ++i) {
        std::int64_t n = coords_[static_cast<std::size_t>(i)].absolute_precision();
        if (n != kExact)
            best = std::min(best, e * n + i);
    }
    return best;
}

bool EisensteinElement::is_exact_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const PadicScalar& c) { return c.is_exact_zero(); });
}

std::int64_t EisensteinElement::pi_valuation() const
{
    const std::int64_t e = ram_index();
    const std::int64_t prec = pi_precision();
    std::int64_t best = prec;
    for (std::int64_t i = 0; i < e; ++i) {
        const PadicScalar& c = coords_[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        best = std::min(best, e * c.int_valuation() + i);
    }
    return best;
}

bool EisensteinElement::is_zero() const
{
    if (is_exact_zero())
        return true;
    return pi_valuation() >= pi_precision();
}

Valuation EisensteinElement::valuation() const
{
    if (is_exact_zero())
        return Valuation::infinity();
    return Valuation(Rational(pi_valuation(), ram_index()));
}

EisensteinElement EisensteinElement::operator-() const
{
    EisensteinElement r = *this;
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

EisensteinElement operator+(const EisensteinElement& a, const EisensteinElement& b)
{
    a.check_compatible(b);
    EisensteinElement r = a;
    for (std::size_t i = 0; i < r.coords_.size(); ++i)
        r.coords_[i] = a.coords_[i] + b.coords_[i];
    return r;
}

EisensteinElement operator-(const EisensteinElement& a, const EisensteinElement& b)
{
    return a + (-b);
}

EisensteinElement operator*(const EisensteinElement& a, const EisensteinElement& b)
{
    a.check_compatible(b);
    const std::size_t e = a.coords_.size();
    EisensteinElement r = EisensteinElement::exact_zero(a.p_, static_cast<int>(e));
    const Integer minus_p = -Integer(static_cast<unsigned long>(a.p_));
    for (std::size_t i = 0; i < e; ++i) {
        if (a.coords_[i].is_exact_zero())
            continue;
        for (std::size_t j = 0; j < e; ++j) {
            if (b.coords_[j].is_exact_zero())
                continue;
            PadicScalar t = a.coords_[i] * b.coords_[j];
            if (i + j < e)
                r.coords_[i + j] = r.coords_[i + j] + t;
            else
                r.coords_[i + j - e] = r.coords_[i + j - e] + t.mul_exact(minus_p);
        }
    }
    return r;
}

EisensteinElement operator/(const EisensteinElement& a, const EisensteinElement& b)
{
    return a * b.inverse();
}

EisensteinElement EisensteinElement::scaled(const PadicScalar& s) const
{
    EisensteinElement r = *this;
    for (auto& c : r.coords_)
        c = c * s;
    return r;
}

EisensteinElement EisensteinElement::mul_exact(const Integer& x) const
{
    EisensteinElement r = *this;
    for (auto& c : r.coords_)
        c = c.mul_exact(x);
    return r;
}

EisensteinElement EisensteinElement::div_exact(const Integer& x) const
{
    EisensteinElement r = *this;
    for (auto& c : r.coords_)
        c = c.div_exact(x);
    return r;
}

EisensteinElement EisensteinElement::mul_pi_power(std::int64_t k) const
{
    const std::int64_t e = ram_index();
    const std::int64_t q = floor_div(k, e);
    const std::int64_t s = k - q * e;
    const Integer minus_p = -Integer(static_cast<unsigned long>(p_));
    EisensteinElement r = exact_zero(p_, static_cast<int>(e));
    for (std::int64_t i = 0; i < e; ++i) {
        const PadicScalar& c = coords_[static_cast<std::size_t>(i)];
        if (i + s < e)
            r.coords_[static_cast<std::size_t>(i + s)] = c;
        else
            r.coords_[static_cast<std::size_t>(i + s - e)] = c.mul_exact(minus_p);
    }
    // (-p)^q
    for (auto& c : r.coords_) {
        c = c.shifted(q);
        if (q % 2 != 0)
            c = -c;
    }
    return r;
}

EisensteinElement EisensteinElement::pow(std::uint64_t n) const
{
    if (n == 0) {
        if (is_zero())
            throw DomainError("0^0 in L");
        return one(p_, ram_index(), pi_precision() - pi_valuation());
    }
    EisensteinElement base = *this;
    EisensteinElement acc;
    bool have = false;
    while (n > 0) {
        if (n & 1U) {
            acc = have ? acc * base : base;
            have = true;
        }
        n >>= 1U;
        if (n > 0)
            base = base * base;
    }
    return acc;
}

EisensteinElement EisensteinElement::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of " + to_string());
    const std::int64_t s = pi_valuation();
    const EisensteinElement z = mul_pi_power(-s);
    const std::int64_t prec = z.pi_precision();
    const int e = ram_index();

    EisensteinElement x = from_scalar(e, z.coords_[0].inverse());
    const EisensteinElement unit = one(p_, e, prec == kExact ? 1 : prec);
    for (int iter = 0; iter < 80; ++iter) {
        EisensteinElement delta = z * x - unit;
        if (delta.is_zero()) {
            std::int64_t cap = std::min(prec, delta.pi_precision());
            return x.with_pi_precision(cap).mul_pi_power(-s);
        }
        x = x - x * delta;
    }
    throw PrecisionError("Newton inversion in L did not converge");
}

EisensteinElement EisensteinElement::with_pi_precision(std::int64_t pi_precision) const
{
    if (pi_precision == kExact)
        return *this;
    const std::int64_t e = ram_index();
    EisensteinElement r = *this;
    for (std::int64_t i = 0; i < e; ++i) {
        auto& c = r.coords_[static_cast<std::size_t>(i)];
        std::int64_t n = ceil_div(pi_precision - i, e);
        if (c.is_exact_zero())
            c = PadicScalar::zero(p_, n);
        else
            c = c.with_precision_cap(n);
    }
    return r;
}

PadicScalar EisensteinElement::to_scalar() const
{
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero())
            throw InconsistencyError("element " + to_string() + " does not lie in Q_p");
    std::int64_t prec = pi_precision();
    if (prec == kExact)
        return coords_[0];
    return coords_[0].with_precision_cap(ceil_div(prec, ram_index()));
}

bool congruent_mod_pi(const EisensteinElement& a, const EisensteinElement& b, std::int64_t m)
{
    EisensteinElement d = a - b;
    if (d.pi_precision() < m) {
        if (!d.is_zero() && d.pi_valuation() < m)
            return false;
        throw PrecisionError("congruence mod pi^" + std::to_string(m) +
                             " needs more precision than " + d.to_string());
    }
    return d.with_pi_precision(m).is_zero();
}

std::string EisensteinElement::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const PadicScalar& c = coords_[i];
        if (c.is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        s += c.to_rational().get_str();
        if (i > 0)
            s += "*pi^" + std::to_string(i);
    }
    std::int64_t prec = pi_precision();
    if (prec == kExact)
        return s.empty() ? "0" : s;
    if (!s.empty())
        s += " + ";
    return s + "O(pi^" + std::to_string(prec) + ")";
}

Valuation PiMonomial::valuation(std::uint64_t p, int e) const
{
    if (c == 0)
        return Valuation::infinity();
    return padic_valuation(c, p) + Valuation(Rational(r, e));
}

EisensteinElement PiMonomial::to_element(std::uint64_t p, int e, std::int64_t pi_precision) const
{
    if (c == 0)
        return EisensteinElement::exact_zero(p, e);
    return EisensteinElement::from_rational(p, e, c, pi_precision - r).mul_pi_power(r);
}

std::string PiMonomial::to_string() const
{
    if (c == 0)
        return "0";
    std::string s = c.get_str();
    if (r != 0)
        s += "*pi^" + std::to_string(r);
    return s;
}

}  // namespace pcartan
