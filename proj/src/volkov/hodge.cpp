// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/volkov.hpp"

#include <algorithm>

#include "padic_cartan/errors.hpp"

namespace pcartan {

const PadicScalar& Alpha::value() const
{
    if (kind_ != Kind::finite)
        throw DomainError("alpha is " + to_string() + ", not a finite value");
    return value_;
}

Valuation Alpha::inverse_valuation() const
{
    if (kind_ == Kind::infinity)
        return Valuation::infinity();
    if (kind_ == Kind::unresolved)
        throw PrecisionError("alpha is not resolved at this precision");
    if (value_.is_exact_zero())
        throw DomainError("alpha = 0 has no finite inverse");
    return Valuation(-static_cast<long>(value_.int_valuation()));
}

std::string Alpha::to_string() const
{
    switch (kind_) {
    case Kind::infinity:
        return "inf";
    case Kind::unresolved:
        return "unresolved";
    case Kind::finite:
        break;
    }
    return value_.to_string();
}

namespace {

std::uint64_t checked_prime_power(std::uint64_t p, std::uint64_t k)
{
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        acc *= p;
        if (acc > (static_cast<unsigned __int128>(1) << 62))
            throw PrecisionError("p^" + std::to_string(k) + " is beyond reach");
    }
    return static_cast<std::uint64_t>(acc);
}

void require_lift_field(const ModelOverL& model)
{
    const auto e = static_cast<std::uint64_t>(model.e);
    if ((model.p + 1) % e != 0 || e + 1 >= model.p)
        throw DomainError("beta needs e | p + 1 and e < p - 1");
}

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

EisensteinElement beta_from_logarithm(const ModelOverL& model, std::uint64_t k,
                                      std::int64_t precision, const YasudaOptions& options)
{
    require_lift_field(model);
    const std::int64_t e = model.e;
    const std::int64_t ki = static_cast<std::int64_t>(k);
    const std::int64_t certified = ki * e + 1;
    if (precision < certified)
        throw PrecisionError("beta at level k = " + std::to_string(k) + " needs precision >= " +
                             std::to_string(certified));
    const std::uint64_t p = model.p;
    const std::uint64_t r_even = checked_prime_power(p, 2 * k);
    const std::uint64_t r_odd = checked_prime_power(p, 2 * k + 1);

    EisensteinElement d_even = yasuda_coefficient(model, r_even, precision - ki * e, options);
    EisensteinElement d_odd =
        yasuda_coefficient(model, r_odd, precision - (ki + 1) * e + 1, options);

    EisensteinElement a_prime = d_even.mul_exact(prime_power(p, ki));
    EisensteinElement b_prime = d_odd.mul_exact(prime_power(p, ki + 1)).mul_pi_power(-1);
    if (a_prime.is_zero() || a_prime.pi_valuation() != 0)
        throw InconsistencyError("p^k d_{p^2k} is not a unit: " + a_prime.to_string());
    if (b_prime.is_exact_zero())
        return EisensteinElement::exact_zero(p, model.e);
    if (b_prime.valuation() < Valuation(0L) && !b_prime.is_zero())
        throw InconsistencyError("p^(k+1)/pi d_{p^(2k+1)} is not integral: " + b_prime.to_string());
    return (-(b_prime / a_prime)).with_pi_precision(certified);
}

Valuation v_beta_closed_form(const Valuation& v_j, const Valuation& v_j1728, int e)
{
    if (e != 3 && e != 4 && e != 6)
        throw DomainError("v(beta) needs e in {3, 4, 6}");
    const Valuation& v = (e == 4) ? v_j1728 : v_j;
    if (v.is_infinite())
        return Valuation::infinity();
    Rational out = v.value() / (e == 4 ? 2 : 3) - Rational(1, e);
    out.canonicalize();
    return Valuation(out);
}

Valuation v_beta_from_coefficient(const ModelOverL& model, std::uint64_t k,
                                  std::int64_t precision, const YasudaOptions& options)
{
    require_lift_field(model);
    const std::int64_t e = model.e;
    const std::int64_t ki = static_cast<std::int64_t>(k);
    EisensteinElement d = yasuda_coefficient(model, checked_prime_power(model.p, 2 * k + 1),
                                             precision - (ki + 1) * e + 1, options);
    if (d.is_exact_zero())
        return Valuation::infinity();
    if (d.is_zero())
        throw PrecisionError("d_{p^" + std::to_string(2 * k + 1) + "} vanishes to its precision");
    Rational shift = Rational(ki + 1) - Rational(1, e);
    shift.canonicalize();
    return d.valuation() + Valuation(shift);
}

int epsilon_sign(std::int64_t v_min_disc)
{
    switch (v_min_disc) {
    case 2:
    case 3:
    case 4:
        return 1;
    case 8:
    case 9:
    case 10:
        return -1;
    default:
        throw DomainError("epsilon is undefined for v(Delta) = " + std::to_string(v_min_disc));
    }
}

Alpha alpha_from_beta(const EisensteinElement& beta, int epsilon, int e)
{
    if (epsilon != 1 && epsilon != -1)
        throw DomainError("epsilon must be +1 or -1");
    if (beta.ram_index() != e)
        throw DomainError("beta lives in the wrong extension");
    if (beta.is_exact_zero())
        return epsilon == 1 ? Alpha::infinity()
                            : Alpha::finite(PadicScalar::exact_zero(beta.prime()));
    if (beta.is_zero())
        throw PrecisionError("beta vanishes to its precision; alpha is undetermined");
    const std::int64_t shift = epsilon == 1 ? 1 : e - 3;
    const PadicScalar gamma = beta.mul_pi_power(-shift).to_scalar();
    const Integer minus_p = -Integer(static_cast<unsigned long>(beta.prime()));
    if (epsilon == 1)
        return Alpha::finite(gamma.inverse().mul_exact(minus_p));
    return Alpha::finite(gamma.mul_exact(minus_p));
}

std::int64_t v_alpha_table(int e, std::int64_t v_min_disc, const Valuation& v_j,
                           const Valuation& v_j1728)
{
    if (v_j.is_infinite() || v_j1728.is_infinite())
        throw DomainError("v(alpha) is not finite for j in {0, 1728}");
    if (v_min_disc == 6 || v_min_disc <= 0 || v_min_disc >= 12)
        throw DomainError("v(alpha) table needs v(Delta) in (0, 12) minus {6}");
    const bool small = v_min_disc < 6;
    long num = 0;
    long den = 1;
    switch (e) {
    case 3:
        num = small ? 5 - v_j.to_int() : 2 + v_j.to_int();
        den = 3;
        break;
    case 4:
        num = small ? 3 - v_j1728.to_int() : 1 + v_j1728.to_int();
        den = 2;
        break;
    case 6:
        num = small ? 4 - v_j.to_int() : 1 + v_j.to_int();
        den = 3;
        break;
    default:
        throw DomainError("v(alpha) table needs e in {3, 4, 6}");
    }
    if (num % den != 0)
        throw InconsistencyError("v(alpha) table gives a non-integer; the curve is not a potential " +
                                 std::to_string(e) + "-lift");
    return num / den;
}

bool has_canonical_subgroup(int e, const Valuation& v_j, const Valuation& v_j1728)
{
    if (e == 4)
        return v_j1728 == Valuation(1L);
    return v_j == Valuation(1L) || v_j == Valuation(2L);
}

std::int64_t stabilization_level(int e, const Valuation& v_j, const Valuation& v_j1728)
{
    if (e != 3 && e != 4 && e != 6)
        throw DomainError("n0 needs e in {3, 4, 6}");
    if (has_canonical_subgroup(e, v_j, v_j1728))
        throw DomainError("n0 is undefined: canonical subgroup present");
    const Valuation& v = e == 4 ? v_j1728 : v_j;
    if (v.is_infinite())
        throw DomainError("n0 is undefined for j in {0, 1728}");
    return floor_div(static_cast<long>(v.to_int()), e == 4 ? 2 : 3);
}

HodgeParameters hodge_parameters(const WeierstrassCurve& curve, const HodgeOptions& options)
{
    const std::uint64_t p = curve.prime();
    ReductionData red = semistability_defect(curve);
    if (red.potential_type == ReductionType::multiplicative)
        throw DomainError("potentially multiplicative reduction");
    const int e = red.e;
    if (e < 3)
        throw DomainError("defect e = " + std::to_string(e) + " has no beta parameter");
    if ((p + 1) % static_cast<std::uint64_t>(e) != 0)
        throw DomainError("potentially ordinary reduction: e does not divide p + 1");
    if (static_cast<std::uint64_t>(e) + 1 >= p)
        throw DomainError("e < p - 1 fails");

    const ModelOverL model = good_model_over_L(curve, e);
    const CurveInvariants& inv = red.min_model.invariants();
    const std::int64_t prec = options.precision > 0 ? options.precision : 4 * e;

    HodgeParameters h;
    h.e = e;
    h.epsilon = epsilon_sign(red.v_min_disc);
    h.v_beta_closed = v_beta_closed_form(inv.v_j, inv.v_j1728, e);

    std::optional<EisensteinElement> prev;
    std::int64_t prev_prec = 0;
    for (std::uint64_t k = 0; k <= options.k_max; ++k) {
        unsigned __int128 r = 1;
        for (std::uint64_t i = 0; i < 2 * k + 1; ++i)
            r *= p;
        if (r > options.max_log_index)
            break;
        const std::int64_t cert = static_cast<std::int64_t>(k) * e + 1;
        EisensteinElement b = beta_from_logarithm(model, k, std::max(prec, cert), options.yasuda);
        if (prev && !congruent_mod_pi(b, *prev, prev_prec))
            throw InconsistencyError("beta at k = " + std::to_string(k) +
                                     " disagrees with the previous level");
        prev = b;
        prev_prec = cert;
        h.k_used.push_back(k);
    }
    if (prev) {
        h.beta = *prev;
        h.beta_precision = prev_prec;
    } else {
        h.beta = EisensteinElement::zero(p, e, 0);
        h.beta_precision = 0;
    }
    h.beta_certified_nonzero = prev && !h.beta.is_zero();

    // Route through the odd coefficient itself (k = 0); independent of the
    // congruence and of the closed form.
    // Precision is raised until d_p is seen to be nonzero; once it exceeds
    // what the closed form says is needed, vanishing is a contradiction.
    std::optional<Valuation> v_coeff;
    if (p <= options.max_log_index) {
        const std::int64_t enough =
            h.v_beta_closed.is_finite()
                ? prec + e * (floor(h.v_beta_closed.value()).get_si() + 2)
                : prec;
        for (std::int64_t working = prec;; working *= 2) {
            try {
                v_coeff = v_beta_from_coefficient(model, 0, working, options.yasuda);
                break;
            } catch (const PrecisionError&) {
                if (working >= enough)
                    throw InconsistencyError("d_p vanishes mod pi^" + std::to_string(working) +
                                             " but v(beta) = " + h.v_beta_closed.to_string());
            }
        }
    }
    if (v_coeff && *v_coeff != h.v_beta_closed)
        throw InconsistencyError("v(beta) from d_p is " + v_coeff->to_string() +
                                 ", closed form gives " + h.v_beta_closed.to_string());

    if (h.beta_certified_nonzero) {
        h.v_beta = h.beta.valuation();
        if (h.v_beta != h.v_beta_closed)
            throw InconsistencyError("v(beta) from the congruence is " + h.v_beta.to_string() +
                                     ", closed form gives " + h.v_beta_closed.to_string());
        h.alpha = alpha_from_beta(h.beta, h.epsilon, e);
    } else if (prev && h.beta.is_exact_zero()) {
        h.v_beta = Valuation::infinity();
        if (!h.v_beta_closed.is_infinite())
            throw InconsistencyError("beta vanishes exactly but j is not 0 or 1728");
        h.alpha = alpha_from_beta(h.beta, h.epsilon, e);
    } else {
        // Only a lower bound from the congruence; it must not contradict.
        h.v_beta = h.v_beta_closed;
        if (h.v_beta_closed < Valuation(Rational(h.beta_precision, e)))
            throw InconsistencyError("beta vanishes mod pi^" + std::to_string(h.beta_precision) +
                                     " but v(beta) = " + h.v_beta_closed.to_string());
    }

    h.canonical_subgroup = has_canonical_subgroup(e, inv.v_j, inv.v_j1728);
    if (inv.v_j.is_finite() && inv.v_j1728.is_finite()) {
        const std::int64_t va = v_alpha_table(e, red.v_min_disc, inv.v_j, inv.v_j1728);
        h.v_alpha = va;
        if (h.alpha.is_finite() && h.alpha.value().int_valuation() != va)
            throw InconsistencyError("v(alpha) from beta is " +
                                     std::to_string(h.alpha.value().int_valuation()) +
                                     ", table gives " + std::to_string(va));
        h.twist_applied = va >= 2;
        h.v_alpha_inv_normalized = h.twist_applied ? va - 2 : -va;
        if (!h.canonical_subgroup) {
            h.n0 = stabilization_level(e, inv.v_j, inv.v_j1728);
            if (*h.n0 != *h.v_alpha_inv_normalized + 1)
                throw InconsistencyError("n0 = " + std::to_string(*h.n0) +
                                         " but v(alpha^-1) + 1 = " +
                                         std::to_string(*h.v_alpha_inv_normalized + 1));
        }
    }
    return h;
}

}  // namespace pcartan
