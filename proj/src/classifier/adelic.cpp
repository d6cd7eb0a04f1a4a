// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <cmath>

#include "padic_cartan/classifier.hpp"
#include "padic_cartan/errors.hpp"

namespace pcartan {

Rational excluded_j_invariant()
{
    Integer j = 16 * 9;
    j *= prime_power(5, 7);
    j *= prime_power(23, 3);
    return Rational(j);
}

Rational per_prime_index_bound(std::uint64_t p, unsigned n, const std::optional<Rational>& j)
{
    if (n < 1)
        throw DomainError("per-prime index needs n >= 1");
    if (p < 3 || !is_prime(p))
        throw DomainError("per-prime index needs an odd prime");
    if (j && *j == excluded_j_invariant())
        throw DomainError("j = 2^4 3^2 5^7 23^3 is excluded");
    auto pp = [&](unsigned k) { return Rational(prime_power(p, k)); };
    Rational out;
    switch (p) {
    case 3:
        out = pp(2 * n);
        break;
    case 5:
        out = std::max<Rational>(Rational(2) * pp(2 * n - 1), Rational(30));
        break;
    case 7:
        out = std::max<Rational>(Rational(3) * pp(2 * n - 1), Rational(147));
        break;
    default:
        out = Rational(static_cast<unsigned long>(p - 1), static_cast<unsigned long>(2 * p)) *
              pp(2 * n);
        break;
    }
    out.canonicalize();
    return out;
}

double adelic_delta(double x)
{
    return 1.0 / (std::log(std::log(x + 40.0) + 7.6) - 0.903);
}

AdelicBound adelic_bound(double h)
{
    if (!(h >= 0.0))
        throw DomainError("height must be nonnegative");
    AdelicBound b;
    b.bound_a = 1.6e17 * std::pow(h + 480.0, 3.11);
    b.bound_b = 7e17 * std::pow(h + 270.0, 2.0 + 3.251 * adelic_delta(12.0 * h));
    return b;
}

}  // namespace pcartan
