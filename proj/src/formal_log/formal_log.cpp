// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/formal_log.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "padic_cartan/errors.hpp"

namespace pcartan {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0)))
        ++q;
    return q;
}

// A^m B^n with at least `relative` pi-digits of relative precision.
using PowerFn = std::function<EisensteinElement(std::uint64_t, std::uint64_t, std::int64_t)>;

// Pi-valuation of a coefficient, nullopt for the exact zero.
std::optional<std::int64_t> coefficient_valuation(const EisensteinElement& x, const char* name)
{
    if (x.is_exact_zero())
        return std::nullopt;
    if (x.is_zero())
        throw PrecisionError(std::string("coefficient ") + name + " is zero to its precision");
    return x.pi_valuation();
}

EisensteinElement yasuda_core(std::uint64_t p, int e, std::optional<std::int64_t> va,
                              std::optional<std::int64_t> vb, std::uint64_t r,
                              std::int64_t target, const YasudaOptions& opt, YasudaStats* stats,
                              const PowerFn& power)
{
    if (r == 0 || r % 2 == 0)
        throw DomainError("Yasuda coefficients are indexed by odd r");
    if (!va && !vb)
        throw SingularCurve("A = B = 0");
    YasudaStats local;
    YasudaStats& st = stats ? *stats : local;
    st = YasudaStats{};

    const std::uint64_t big_n = (r - 1) / 2;
    const std::int64_t s = target + e * valuation_u64(r, p);

    // Candidate m values (n follows from 2m + 3n = N).
    std::vector<std::uint64_t> ms;
    auto add_m = [&](std::uint64_t m) {
        if (2 * m <= big_n && (big_n - 2 * m) % 3 == 0)
            ms.push_back(m);
    };
    auto add_n = [&](std::uint64_t n) {
        if (3 * n <= big_n && (big_n - 3 * n) % 2 == 0)
            ms.push_back((big_n - 3 * n) / 2);
    };
    if (!va) {
        add_m(0);
    } else if (!vb) {
        add_n(0);
    } else if (*va > 0 && *vb >= 0) {
        std::int64_t bound = std::max<std::int64_t>(ceil_div(s, *va) - 1, -1) + opt.guard;
        std::uint64_t lim = std::min<std::uint64_t>(big_n / 2, bound < 0 ? 0 : bound);
        st.truncated = bound < 0 || lim < big_n / 2;
        if (bound >= 0)
            for (std::uint64_t m = 0; m <= lim; ++m)
                add_m(m);
    } else if (*vb > 0 && *va >= 0) {
        std::int64_t bound = std::max<std::int64_t>(ceil_div(s, *vb) - 1, -1) + opt.guard;
        std::uint64_t lim = std::min<std::uint64_t>(big_n / 3, bound < 0 ? 0 : bound);
        st.truncated = bound < 0 || lim < big_n / 3;
        if (bound >= 0)
            for (std::uint64_t n = 0; n <= lim; ++n)
                add_n(n);
    } else {
        if (big_n / 2 + 1 > opt.max_terms)
            throw PrecisionError("Yasuda sum for r = " + std::to_string(r) +
                                 " has too many terms to evaluate without truncation");
        for (std::uint64_t m = 0; m <= big_n / 2; ++m)
            add_m(m);
    }
    if (ms.size() > opt.max_terms)
        throw PrecisionError("Yasuda sum for r = " + std::to_string(r) + " exceeds the term limit");

    const std::int64_t vf_n = static_cast<std::int64_t>(val_factorial(big_n, p));
    EisensteinElement sum = EisensteinElement::exact_zero(p, e);
    for (std::uint64_t m : ms) {
        ++st.candidates;
        const std::uint64_t n = (big_n - 2 * m) / 3;
        const std::uint64_t top = m + 2 * n;
        std::int64_t vmult = vf_n - static_cast<std::int64_t>(val_factorial(top, p) +
                                                              val_factorial(m, p) +
                                                              val_factorial(n, p));
        std::int64_t lambda = e * vmult;
        if (m > 0)
            lambda += static_cast<std::int64_t>(m) * *va;
        if (n > 0)
            lambda += static_cast<std::int64_t>(n) * *vb;
        if (lambda >= s) {
            ++st.dropped;
            continue;
        }
        ++st.computed;
        unsigned digits = static_cast<unsigned>(std::max<std::int64_t>(1, ceil_div(s - lambda, e)) + 1);
        PadicScalar mult = multinomial(big_n, {top, m, n}, p, digits, opt.backend);
        EisensteinElement term = EisensteinElement::from_scalar(e, mult);
        if (m > 0 || n > 0)
            term = term * power(m, n, s - lambda + e);
        sum = sum + term;
    }
    if (st.computed == 0 && st.dropped == 0 && !st.truncated)
        return EisensteinElement::exact_zero(p, e);
    sum = sum.with_pi_precision(s);
    return sum.div_exact(Integer(static_cast<unsigned long>(r)));
}

}  // namespace

EisensteinElement yasuda_coefficient(const EisensteinElement& a, const EisensteinElement& b,
                                     std::uint64_t r, std::int64_t target_precision,
                                     const YasudaOptions& options, YasudaStats* stats)
{
    if (a.prime() != b.prime() || a.ram_index() != b.ram_index())
        throw DomainError("A and B live in different fields");
    const std::uint64_t p = a.prime();
    const int e = a.ram_index();
    auto power = [&](std::uint64_t m, std::uint64_t n, std::int64_t) {
        if (m == 0)
            return b.pow(n);
        if (n == 0)
            return a.pow(m);
        return a.pow(m) * b.pow(n);
    };
    return yasuda_core(p, e, coefficient_valuation(a, "A"), coefficient_valuation(b, "B"), r,
                       target_precision, options, stats, power);
}

EisensteinElement yasuda_coefficient(const ModelOverL& model, std::uint64_t r,
                                     std::int64_t target_precision, const YasudaOptions& options,
                                     YasudaStats* stats)
{
    const std::uint64_t p = model.p;
    const int e = model.e;
    auto pi_val = [&](const PiMonomial& x) -> std::optional<std::int64_t> {
        if (x.is_zero())
            return std::nullopt;
        return e * padic_valuation(x.c, p).to_int() + x.r;
    };
    auto power = [&](std::uint64_t m, std::uint64_t n, std::int64_t relative) {
        std::int64_t digits = ceil_div(relative, e) + 1;
        PadicScalar c = PadicScalar::from_unit(p, Integer(1), 0, digits);
        if (m > 0)
            c = c * PadicScalar::from_rational_relative(p, model.a.c, digits).pow(m);
        if (n > 0)
            c = c * PadicScalar::from_rational_relative(p, model.b.c, digits).pow(n);
        std::int64_t shift = static_cast<std::int64_t>(m) * model.a.r +
                             static_cast<std::int64_t>(n) * model.b.r;
        return EisensteinElement::from_scalar(e, c).mul_pi_power(shift);
    };
    return yasuda_core(p, e, pi_val(model.a), pi_val(model.b), r, target_precision, options,
                       stats, power);
}

std::string to_string(LogMethod m)
{
    return m == LogMethod::yasuda ? "yasuda" : "series_inversion";
}

const EisensteinElement& FormalLogPrefix::at(std::uint64_t r) const
{
    auto it = coeffs.find(r);
    if (it == coeffs.end())
        throw DomainError("coefficient d_" + std::to_string(r) + " not in this prefix");
    return it->second;
}

namespace {

std::int64_t working_precision(const EisensteinElement& a, const EisensteinElement& b)
{
    std::int64_t prec = std::min(a.pi_precision(), b.pi_precision());
    if (prec == EisensteinElement::kExact)
        throw PrecisionError("series inversion needs A or B at finite precision");
    return prec;
}

}  // namespace

FormalLogPrefix series_inversion_logarithm(const EisensteinElement& a,
                                           const EisensteinElement& b, std::uint64_t n_terms)
{
    if (n_terms < 2)
        throw DomainError("series inversion needs at least two terms");
    if (a.prime() != b.prime() || a.ram_index() != b.ram_index())
        throw DomainError("A and B live in different fields");
    const std::uint64_t p = a.prime();
    const int e = a.ram_index();
    const std::size_t len = n_terms;  // W_0 .. W_{n-1} feed d_1 .. d_n
    const EisensteinElement one = EisensteinElement::one(p, e, working_precision(a, b));
    const EisensteinElement zero = EisensteinElement::exact_zero(p, e);

    std::vector<EisensteinElement> w(len, zero), w2(len, zero), w3(len, zero);
    w[0] = w2[0] = w3[0] = one;
    auto conv = [&](const std::vector<EisensteinElement>& x, const std::vector<EisensteinElement>& y,
                    std::size_t n) {
        EisensteinElement acc = zero;
        for (std::size_t i = 0; i <= n; ++i) {
            if (x[i].is_exact_zero() || y[n - i].is_exact_zero())
                continue;
            acc = acc + x[i] * y[n - i];
        }
        return acc;
    };
    for (std::size_t n = 1; n < len; ++n) {
        EisensteinElement v = zero;
        if (n >= 4 && !a.is_exact_zero() && !w2[n - 4].is_exact_zero())
            v = v + a * w2[n - 4];
        if (n >= 6 && !b.is_exact_zero() && !w3[n - 6].is_exact_zero())
            v = v + b * w3[n - 6];
        w[n] = v;
        w2[n] = conv(w, w, n);
        w3[n] = conv(w, w2, n);
    }

    // 1/W, then g = 1 + t W' / (2W).
    std::vector<EisensteinElement> inv(len, zero);
    inv[0] = one;
    for (std::size_t n = 1; n < len; ++n) {
        EisensteinElement acc = zero;
        for (std::size_t i = 1; i <= n; ++i) {
            if (w[i].is_exact_zero() || inv[n - i].is_exact_zero())
                continue;
            acc = acc + w[i] * inv[n - i];
        }
        inv[n] = -acc;
    }

    FormalLogPrefix out;
    out.p = p;
    out.e = e;
    out.a = a;
    out.b = b;
    out.method = LogMethod::series_inversion;
    for (std::size_t n = 0; n < len; ++n) {
        EisensteinElement g = n == 0 ? one : zero;
        EisensteinElement acc = zero;
        for (std::size_t i = 1; i <= n; ++i) {
            if (w[i].is_exact_zero() || inv[n - i].is_exact_zero())
                continue;
            acc = acc + (w[i] * inv[n - i]).mul_exact(Integer(static_cast<unsigned long>(i)));
        }
        if (!acc.is_exact_zero())
            g = g + acc.div_exact(Integer(2));
        out.coeffs.emplace(n + 1, g.div_exact(Integer(static_cast<unsigned long>(n + 1))));
    }
    return out;
}

FormalLogPrefix yasuda_logarithm(const EisensteinElement& a, const EisensteinElement& b,
                                 std::uint64_t n_terms, std::int64_t target_precision,
                                 const YasudaOptions& options)
{
    FormalLogPrefix out;
    out.p = a.prime();
    out.e = a.ram_index();
    out.a = a;
    out.b = b;
    out.method = LogMethod::yasuda;
    for (std::uint64_t r = 1; r <= n_terms; ++r) {
        if (r % 2 == 0)
            out.coeffs.emplace(r, EisensteinElement::exact_zero(out.p, out.e));
        else
            out.coeffs.emplace(r, yasuda_coefficient(a, b, r, target_precision, options));
    }
    return out;
}

EisensteinElement hasse_invariant(const EisensteinElement& a, const EisensteinElement& b,
                                  std::uint64_t p)
{
    require_supported_prime(p);
    if (a.prime() != p || b.prime() != p || a.ram_index() != b.ram_index())
        throw DomainError("hasse_invariant: coefficients over the wrong field");
    const int e = a.ram_index();
    const EisensteinElement zero = EisensteinElement::exact_zero(p, e);
    // Only degrees <= p - 1 are ever needed.
    std::vector<EisensteinElement> poly(p, zero);
    poly[0] = EisensteinElement::one(p, e, working_precision(a, b));
    for (std::uint64_t step = 0; step < (p - 1) / 2; ++step) {
        std::vector<EisensteinElement> next(p, zero);
        for (std::size_t i = 0; i < p; ++i) {
            if (poly[i].is_exact_zero())
                continue;
            if (i + 3 < p)
                next[i + 3] = next[i + 3] + poly[i];
            if (i + 1 < p && !a.is_exact_zero())
                next[i + 1] = next[i + 1] + poly[i] * a;
            if (!b.is_exact_zero())
                next[i] = next[i] + poly[i] * b;
        }
        poly = std::move(next);
    }
    return poly[p - 1];
}

Valuation odd_coefficient_valuation(const ModelOverL& model, std::uint64_t k)
{
    const std::uint64_t e = static_cast<std::uint64_t>(model.e);
    if ((model.p + 1) % e != 0 || e + 1 >= model.p)
        throw DomainError("odd_coefficient_valuation needs e | p + 1 and e < p - 1");
    const Valuation zero(0L);
    const Valuation shift(-static_cast<long>(k) - 1);
    if (model.e == 4) {
        if (model.v_a() != zero)
            throw DomainError("model over L is not normalized: v(A_L) != 0");
        return shift + model.v_b();
    }
    if (model.v_b() != zero)
        throw DomainError("model over L is not normalized: v(B_L) != 0");
    return shift + model.v_a();
}

}  // namespace pcartan
