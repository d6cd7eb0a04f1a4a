// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/curve.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "padic_cartan/errors.hpp"

namespace pcartan {

bool is_prime(std::uint64_t n)
{
    Integer z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

void require_supported_prime(std::uint64_t p)
{
    if (p <= 3 || !is_prime(p))
        throw DomainError("p must be an odd prime > 3");
}

namespace {

Rational rpow(const Rational& x, long k)
{
    Rational r(1);
    Rational b = k >= 0 ? x : Rational(1) / x;
    for (long i = 0; i < std::abs(k); ++i)
        r *= b;
    r.canonicalize();
    return r;
}

// p^k as a rational, k of either sign.
Rational ppow(std::uint64_t p, std::int64_t k)
{
    return rpow(Rational(static_cast<unsigned long>(p)), static_cast<long>(k));
}

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

// c * pi^r with 0 <= r < e, absorbing pi^e = -p into c.
PiMonomial normalized(Rational c, std::int64_t r, std::uint64_t p, int e)
{
    std::int64_t q = floor_div(r, e);
    Rational f = ppow(p, q);
    if (q % 2 != 0)
        f = -f;
    c *= f;
    c.canonicalize();
    return PiMonomial{c, r - q * e};
}

}  // namespace

CurveInvariants invariants(const WeierstrassCurve& curve)
{
    const Rational& a = curve.a();
    const Rational& b = curve.b();
    const std::uint64_t p = curve.prime();
    CurveInvariants inv;
    inv.discriminant = -16 * (4 * a * a * a + 27 * b * b);
    inv.discriminant.canonicalize();
    if (inv.discriminant == 0)
        throw SingularCurve("singular curve: discriminant is zero");
    Rational four_a = 4 * a;
    inv.j = -1728 * four_a * four_a * four_a / inv.discriminant;
    inv.j.canonicalize();
    inv.j_minus_1728 = Rational(1728 * 16 * 27) * b * b / inv.discriminant;
    inv.j_minus_1728.canonicalize();
    inv.v_disc = padic_valuation(inv.discriminant, p);
    inv.v_j = padic_valuation(inv.j, p);
    inv.v_j1728 = padic_valuation(inv.j_minus_1728, p);
    return inv;
}

WeierstrassCurve::WeierstrassCurve(std::uint64_t p, Rational a, Rational b)
    : p_(p), a_(std::move(a)), b_(std::move(b))
{
    require_supported_prime(p);
    a_.canonicalize();
    b_.canonicalize();
    inv_ = pcartan::invariants(*this);
}

WeierstrassCurve WeierstrassCurve::scaled(const Rational& u) const
{
    Rational u2 = u * u;
    Rational u4 = u2 * u2;
    return WeierstrassCurve(p_, u4 * a_, u4 * u2 * b_);
}

std::string WeierstrassCurve::to_string() const
{
    return "y^2 = x^3 + (" + a_.get_str() + ")x + (" + b_.get_str() + ") over Q_" +
           std::to_string(p_);
}

WeierstrassCurve minimal_model(const WeierstrassCurve& curve)
{
    const std::uint64_t p = curve.prime();
    Valuation va = padic_valuation(curve.a(), p);
    Valuation vb = padic_valuation(curve.b(), p);
    // Smallest k for which u = p^k makes both coefficients integral.
    std::int64_t k = std::numeric_limits<std::int64_t>::min();
    auto need = [&](const Valuation& v, std::int64_t w) {
        if (v.is_finite())
            k = std::max(k, ceil_div(-v.to_int(), w));
    };
    need(va, 4);
    need(vb, 6);
    return curve.scaled(ppow(p, k));
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& curve, const Integer& d)
{
    if (d == 0)
        throw DomainError("twist by zero");
    Rational dd(d);
    return WeierstrassCurve(curve.prime(), dd * dd * curve.a(), dd * dd * dd * curve.b());
}

std::string to_string(ReductionType t)
{
    switch (t) {
    case ReductionType::good_ordinary:
        return "good_ordinary";
    case ReductionType::good_supersingular:
        return "good_supersingular";
    case ReductionType::multiplicative:
        return "multiplicative";
    }
    return "unknown";
}

std::uint64_t hasse_invariant_mod_p(const Rational& a, const Rational& b, std::uint64_t p)
{
    // Sum over i + j + k = N, 3i + j = p - 1 of N!/(i! j! k!) a^j b^k mod p.
    Integer mod(static_cast<unsigned long>(p));
    auto reduce = [&](const Rational& x) {
        if (padic_valuation(x, p) < Valuation(0L))
            throw DomainError("hasse_invariant_mod_p needs p-integral coefficients");
        Integer inv;
        Integer den = x.get_den();
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
        Integer r = x.get_num() * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
        return static_cast<std::uint64_t>(r.get_ui());
    };
    const std::uint64_t am = reduce(a), bm = reduce(b);
    const std::uint64_t n = (p - 1) / 2;
    auto mul = [&](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };
    auto powm = [&](std::uint64_t x, std::uint64_t e) {
        std::uint64_t r = 1 % p;
        while (e) {
            if (e & 1U)
                r = mul(r, x);
            x = mul(x, x);
            e >>= 1U;
        }
        return r;
    };
    std::vector<std::uint64_t> fact(n + 1, 1);
    for (std::uint64_t i = 1; i <= n; ++i)
        fact[i] = mul(fact[i - 1], i);
    auto inv = [&](std::uint64_t x) { return powm(x, p - 2); };
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; 3 * i <= p - 1; ++i) {
        std::uint64_t j = p - 1 - 3 * i;
        if (i + j > n)
            continue;
        std::uint64_t k = n - i - j;
        std::uint64_t term = mul(fact[n], inv(mul(fact[i], mul(fact[j], fact[k]))));
        term = mul(term, mul(powm(am, j), powm(bm, k)));
        total = (total + term) % p;
    }
    return total;
}

ReductionData semistability_defect(const WeierstrassCurve& curve)
{
    const std::uint64_t p = curve.prime();
    WeierstrassCurve m = minimal_model(curve);
    const CurveInvariants& inv = m.invariants();
    const std::int64_t vd = inv.v_disc.to_int();
    ReductionData r{1, ReductionType::good_ordinary, m, vd, m};
    if (inv.v_j.is_finite() && inv.v_j < Valuation(0L)) {
        r.potential_type = ReductionType::multiplicative;
        r.e = (vd == -inv.v_j.to_int()) ? 1 : 2;
        return r;
    }
    r.e = static_cast<int>(12 / std::gcd<std::int64_t>(12, vd));
    if (r.e >= 3) {
        r.potential_type = (p + 1) % static_cast<std::uint64_t>(r.e) == 0
                               ? ReductionType::good_supersingular
                               : ReductionType::good_ordinary;
        return r;
    }
    if (r.e == 2)
        r.good_fibre = minimal_model(quadratic_twist(m, Integer(static_cast<unsigned long>(p))));
    r.potential_type = hasse_invariant_mod_p(r.good_fibre.a(), r.good_fibre.b(), p) == 0
                           ? ReductionType::good_supersingular
                           : ReductionType::good_ordinary;
    return r;
}

Valuation ModelOverL::v_disc() const
{
    // 4A^3 + 27B^2 as a sum of two monomials; equal pi-exponents combine.
    std::vector<PiMonomial> terms;
    if (!a.is_zero())
        terms.push_back(normalized(4 * a.c * a.c * a.c, 3 * a.r, p, e));
    if (!b.is_zero())
        terms.push_back(normalized(27 * b.c * b.c, 2 * b.r, p, e));
    if (terms.size() == 2 && terms[0].r == terms[1].r) {
        PiMonomial sum{terms[0].c + terms[1].c, terms[0].r};
        sum.c.canonicalize();
        return sum.valuation(p, e);
    }
    Valuation best = Valuation::infinity();
    for (const auto& t : terms)
        best = min(best, t.valuation(p, e));
    return best;
}

ModelOverL good_model_over_L(const WeierstrassCurve& curve, int e)
{
    if (e != 3 && e != 4 && e != 6)
        throw DomainError("good model over L needs e in {3, 4, 6}");
    const std::uint64_t p = curve.prime();
    ReductionData red = semistability_defect(curve);
    if (red.potential_type == ReductionType::multiplicative || red.e != e)
        throw DomainError("curve is not a potential " + std::to_string(e) + "-lift (defect " +
                          std::to_string(red.e) + ")");
    if ((p + 1) % static_cast<std::uint64_t>(e) != 0)
        throw DomainError("e does not divide p + 1");
    ModelOverL model;
    model.p = p;
    model.e = e;
    model.v_min_disc = red.v_min_disc;
    model.s = e * red.v_min_disc / 12;
    model.a = red.min_model.a() == 0 ? PiMonomial{}
                                     : normalized(red.min_model.a(), -4 * model.s, p, e);
    model.b = red.min_model.b() == 0 ? PiMonomial{}
                                     : normalized(red.min_model.b(), -6 * model.s, p, e);
    const Valuation zero(0L);
    bool ok = (e == 4) ? model.v_a() == zero : model.v_b() == zero;
    if (!ok || model.v_disc() != zero)
        throw DomainError("no good model over L with the required normalization");
    if (model.v_a() < zero || model.v_b() < zero)
        throw DomainError("model over L is not integral");
    return model;
}

}  // namespace pcartan
