// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/valuation.hpp"

#include "padic_cartan/errors.hpp"

namespace pcartan {

Valuation Valuation::infinity()
{
    Valuation v;
    v.infinite_ = true;
    return v;
}

const Rational& Valuation::value() const
{
    if (infinite_)
        throw DomainError("valuation is infinite");
    return value_;
}

bool Valuation::is_integer() const
{
    return !infinite_ && value_.get_den() == 1;
}

std::int64_t Valuation::to_int() const
{
    if (!is_integer())
        throw DomainError("valuation " + to_string() + " is not an integer");
    return value_.get_num().get_si();
}

Valuation operator+(const Valuation& a, const Valuation& b)
{
    if (a.infinite_ || b.infinite_)
        return Valuation::infinity();
    return Valuation(Rational(a.value_ + b.value_));
}

Valuation operator-(const Valuation& a, const Rational& b)
{
    if (a.infinite_)
        return a;
    return Valuation(Rational(a.value_ - b));
}

bool operator==(const Valuation& a, const Valuation& b)
{
    if (a.infinite_ || b.infinite_)
        return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b)
{
    if (a.infinite_ && b.infinite_)
        return std::strong_ordering::equal;
    if (a.infinite_)
        return std::strong_ordering::greater;
    if (b.infinite_)
        return std::strong_ordering::less;
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Valuation::to_string() const
{
    return infinite_ ? std::string("inf") : value_.get_str();
}

Valuation min(const Valuation& a, const Valuation& b)
{
    return b < a ? b : a;
}

Valuation padic_valuation(const Integer& x, std::uint64_t p)
{
    if (x == 0)
        return Valuation::infinity();
    Integer pp(static_cast<unsigned long>(p));
    Integer t = x;
    long v = static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t()));
    return Valuation(v);
}

Valuation padic_valuation(const Rational& x, std::uint64_t p)
{
    if (x == 0)
        return Valuation::infinity();
    auto num = padic_valuation(x.get_num(), p);
    auto den = padic_valuation(x.get_den(), p);
    return Valuation(Rational(num.value() - den.value()));
}

int valuation_u64(std::uint64_t x, std::uint64_t p)
{
    int v = 0;
    while (x != 0 && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

Integer floor(const Rational& x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

}  // namespace pcartan
