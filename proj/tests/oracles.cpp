// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

Exact Exact::zero(std::uint64_t p, int e)
{
    return Exact{p, std::vector<Rational>(static_cast<std::size_t>(e), Rational(0))};
}

Exact Exact::rational(std::uint64_t p, int e, const Rational& x)
{
    Exact z = zero(p, e);
    z.c[0] = x;
    return z;
}

Exact Exact::monomial(std::uint64_t p, int e, const pcartan::PiMonomial& m)
{
    if (m.r < 0 || m.r >= e)
        throw std::invalid_argument("monomial exponent out of range");
    Exact z = zero(p, e);
    z.c[static_cast<std::size_t>(m.r)] = m.c;
    return z;
}

bool Exact::is_zero() const
{
    for (const auto& x : c)
        if (x != 0)
            return false;
    return true;
}

Exact operator+(const Exact& a, const Exact& b)
{
    Exact z = a;
    for (std::size_t i = 0; i < z.c.size(); ++i)
        z.c[i] += b.c[i];
    return z;
}

Exact operator*(const Exact& a, const Exact& b)
{
    const std::size_t e = a.c.size();
    Exact z = Exact::zero(a.p, static_cast<int>(e));
    const Rational minus_p(-Integer(static_cast<unsigned long>(a.p)));
    for (std::size_t i = 0; i < e; ++i) {
        if (a.c[i] == 0)
            continue;
        for (std::size_t j = 0; j < e; ++j) {
            if (b.c[j] == 0)
                continue;
            Rational t = a.c[i] * b.c[j];
            if (i + j >= e)
                z.c[i + j - e] += t * minus_p;
            else
                z.c[i + j] += t;
        }
    }
    return z;
}

Exact Exact::scaled(const Rational& s) const
{
    Exact z = *this;
    for (auto& x : z.c)
        x *= s;
    return z;
}

pcartan::EisensteinElement Exact::to_element(std::int64_t pi_precision) const
{
    const int e = static_cast<int>(c.size());
    std::vector<pcartan::PadicScalar> coords;
    for (int i = 0; i < e; ++i) {
        // pi^i c_i known mod pi^P needs c_i mod p^ceil((P - i) / e).
        std::int64_t n = (pi_precision - i + e - 1) / e;
        coords.push_back(pcartan::PadicScalar::from_rational(p, c[static_cast<std::size_t>(i)], n));
    }
    return pcartan::EisensteinElement::from_coords(p, coords);
}

std::vector<Exact> exact_log(const Exact& a, const Exact& b, std::size_t n)
{
    const std::uint64_t p = a.p;
    const int e = static_cast<int>(a.c.size());
    const std::size_t len = n + 4;
    // w[i] = coefficient of t^i.
    std::vector<Exact> w(len, Exact::zero(p, e)), sq(len, Exact::zero(p, e)),
        cube(len, Exact::zero(p, e));
    w[3] = Exact::rational(p, e, 1);
    for (std::size_t m = 4; m < len; ++m) {
        // sq[m - 1] needs w up to index m - 4; cube[m] needs sq up to m - 3.
        for (std::size_t i = 3; i + 3 <= m - 1; ++i)
            sq[m - 1] = sq[m - 1] + w[i] * w[m - 1 - i];
        for (std::size_t i = 6; i + 3 <= m; ++i)
            cube[m] = cube[m] + sq[i] * w[m - i];
        w[m] = a * sq[m - 1] + b * cube[m];
    }
    for (std::size_t i = 3; i + 3 <= len - 1; ++i)
        sq[len - 1] = sq[len - 1] + w[i] * w[len - 1 - i];
    // omega/dt = w' / (3 t^2 + A w^2); divide top and bottom by t^2.
    std::vector<Exact> num(len, Exact::zero(p, e)), den(len, Exact::zero(p, e));
    for (std::size_t i = 0; i + 3 < len; ++i)
        num[i] = w[i + 3].scaled(Rational(static_cast<unsigned long>(i + 3)));
    den[0] = Exact::rational(p, e, 3);
    for (std::size_t i = 1; i + 2 < len; ++i)
        den[i] = a * sq[i + 2];
    // Series quotient q with den[0] = 3 rational.
    std::vector<Exact> q(n, Exact::zero(p, e));
    for (std::size_t i = 0; i < n; ++i) {
        Exact s = num[i];
        for (std::size_t j = 1; j <= i; ++j)
            s = s + (den[j] * q[i - j]).scaled(Rational(-1));
        q[i] = s.scaled(Rational(1, 3));
    }
    std::vector<Exact> d(n + 1, Exact::zero(p, e));
    for (std::size_t r = 1; r <= n; ++r)
        d[r] = q[r - 1].scaled(Rational(1, static_cast<unsigned long>(r)));
    return d;
}

Integer gl2_order(std::uint64_t p, unsigned n)
{
    Integer P(static_cast<unsigned long>(p)), k;
    mpz_pow_ui(k.get_mpz_t(), P.get_mpz_t(), 4 * (n - 1));
    return (P * P - 1) * (P * P - P) * k;
}

Integer cns_plus_order(std::uint64_t p, unsigned n)
{
    Integer P(static_cast<unsigned long>(p)), k;
    mpz_pow_ui(k.get_mpz_t(), P.get_mpz_t(), 2 * (n - 1));
    // F_{p^2}^* extended by Frobenius, times the kernel of reduction.
    return 2 * (P * P - 1) * k;
}

int index_from_characters(std::uint64_t p, int e, bool v_alpha_at_most_zero)
{
    const std::int64_t q = static_cast<std::int64_t>((p * p - 1) / static_cast<std::uint64_t>(e));
    const std::int64_t s = v_alpha_at_most_zero ? -1 : 1;
    const std::int64_t x = 1 + s * q;
    const std::int64_t y = static_cast<std::int64_t>(p) - s * q;
    return (x % 3 == 0 && y % 3 == 0) ? 3 : 1;
}

bool supersingular_by_count(std::int64_t a, std::int64_t b, std::uint64_t p)
{
    const std::int64_t P = static_cast<std::int64_t>(p);
    std::vector<int> squares(p, 0);
    for (std::int64_t y = 0; y < P; ++y)
        squares[static_cast<std::size_t>(y * y % P)]++;
    std::int64_t count = 1;
    for (std::int64_t x = 0; x < P; ++x) {
        std::int64_t r = ((x * x % P * x + a % P * x + b) % P + P) % P;
        count += squares[static_cast<std::size_t>(r)];
    }
    const std::int64_t trace = P + 1 - count;
    return trace % P == 0;
}

ExactModel random_unit_model(std::mt19937_64& rng, std::uint64_t p, int e)
{
    for (;;) {
        Exact a = Exact::zero(p, e), b = Exact::zero(p, e);
        for (std::size_t i = 0; i < static_cast<std::size_t>(e); ++i) {
            a.c[i] = Rational(static_cast<long>(rng() % 4000) - 2000);
            b.c[i] = Rational(static_cast<long>(rng() % 4000) - 2000);
        }
        if (rng() % 4 == 0)
            a = Exact::zero(p, e);
        Exact disc = (a * a * a).scaled(4) + (b * b).scaled(27);
        if (!disc.is_zero() && disc.to_element(4 * e).valuation() == pcartan::Valuation(0L))
            return {a, b};
    }
}

pcartan::WeierstrassCurve random_lift(std::mt19937_64& rng, std::uint64_t p, int e)
{
    const Integer pp(static_cast<unsigned long>(p));
    auto unit = [&] {
        Integer u;
        do {
            u = random_below(rng, pp * pp * pp);
        } while (u % pp == 0);
        return rng() % 2 ? u : Integer(-u);
    };
    for (;;) {
        const unsigned i = static_cast<unsigned>(rng() % 10);
        const unsigned j = static_cast<unsigned>(rng() % 12);
        Rational a(unit() * pcartan::prime_power(p, i)), b(unit() * pcartan::prime_power(p, j));
        if (4 * a * a * a + 27 * b * b == 0)
            continue;
        pcartan::WeierstrassCurve c(p, a, b);
        pcartan::ReductionData r = pcartan::semistability_defect(c);
        if (r.e == e && r.potential_type == pcartan::ReductionType::good_supersingular)
            return c;
    }
}

Integer random_below(std::mt19937_64& rng, const Integer& bound)
{
    Integer out = 0;
    Integer scale = 1;
    while (scale < bound * 1024) {
        out = out * Integer(4294967296.0) + Integer(static_cast<unsigned long>(rng() & 0xffffffffu));
        scale *= Integer(4294967296.0);
    }
    return Integer(out % bound);
}

}  // namespace oracle
