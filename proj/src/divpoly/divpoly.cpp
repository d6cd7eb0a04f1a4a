// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/divpoly.hpp"

#include "padic_cartan/errors.hpp"

namespace pcartan {

std::int64_t SparsePolynomialL::degree() const
{
    return terms.empty() ? 0 : terms.rbegin()->first;
}

EisensteinElement SparsePolynomialL::coefficient(std::int64_t exponent) const
{
    auto it = terms.find(exponent);
    if (it == terms.end())
        return EisensteinElement::exact_zero(p, e);
    return it->second;
}

SparsePolynomialL build_gk(std::uint64_t p, int e, const PadicScalar& alpha_inv, unsigned k,
                           std::int64_t pi_precision)
{
    if (k < 1)
        throw DomainError("g_k needs k >= 1");
    if (e < 1 || (p + 1) % static_cast<std::uint64_t>(e) != 0)
        throw DomainError("g_k needs e | p + 1");
    if (alpha_inv.prime() != p)
        throw DomainError("alpha^-1 over the wrong prime");
    if (!alpha_inv.is_exact_zero()) {
        if (alpha_inv.is_zero())
            throw PrecisionError("alpha^-1 is zero only to its precision");
        if (alpha_inv.int_valuation() < 0)
            throw DomainError("g_k needs v(alpha^-1) >= 0");
    }
    // Exponents p^i for i <= 2k must fit comfortably.
    Integer top = prime_power(p, 2 * k);
    if (!top.fits_slong_p())
        throw DomainError("p^(2k) does not fit in 64 bits");

    SparsePolynomialL g;
    g.p = p;
    g.e = e;
    auto expo = [&](unsigned i) { return static_cast<std::int64_t>(prime_power(p, i).get_si()); };
    g.terms.emplace(expo(2 * k), EisensteinElement::one(p, e, pi_precision));
    const EisensteinElement pi_sq_alpha =
        alpha_inv.is_exact_zero()
            ? EisensteinElement::exact_zero(p, e)
            : EisensteinElement::from_scalar(e, alpha_inv).mul_pi_power(2);
    for (unsigned n = 1; n <= k; ++n) {
        Integer c = prime_power(p, n);
        if (n % 2 == 1)
            c = -c;
        EisensteinElement lo = EisensteinElement::from_rational(p, e, Rational(c), pi_precision);
        g.terms.emplace(expo(2 * k - 2 * n), lo);
        if (!alpha_inv.is_exact_zero())
            g.terms.emplace(expo(2 * k + 1 - 2 * n), pi_sq_alpha.mul_exact(c));
    }
    return g;
}

std::vector<std::pair<std::int64_t, Valuation>> coefficient_valuations(const SparsePolynomialL& g)
{
    std::vector<std::pair<std::int64_t, Valuation>> out;
    for (const auto& [x, c] : g.terms) {
        if (c.is_zero() && !c.is_exact_zero())
            throw PrecisionError("coefficient of x^" + std::to_string(x) + " vanishes to precision");
        out.emplace_back(x, c.valuation());
    }
    return out;
}

NewtonPolygon polygon_of(const SparsePolynomialL& g)
{
    std::vector<PolygonPoint> pts;
    if (!g.terms.count(0))
        pts.push_back({0, Valuation::infinity()});
    for (const auto& [x, v] : coefficient_valuations(g))
        pts.push_back({x, v});
    return newton_polygon(std::move(pts));
}

std::vector<RootClass> root_valuation_partition(const SparsePolynomialL& g)
{
    return polygon_of(g).root_valuations();
}

void dump_valuations(std::ostream& out, const SparsePolynomialL& g)
{
    for (const auto& [x, v] : coefficient_valuations(g))
        out << x << ' ' << v.to_string() << '\n';
}

}  // namespace pcartan
