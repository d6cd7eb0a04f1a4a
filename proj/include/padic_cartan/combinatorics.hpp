// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <vector>

#include "padic_cartan/padic_scalar.hpp"

namespace pcartan {

/// Legendre: sum over i >= 1 of floor(n / p^i).
std::uint64_t val_factorial(std::uint64_t n, std::uint64_t p);

/// v_p of binomial(p^j, a) for 1 <= a <= p^j, which is j - v_p(a).
std::uint64_t val_binomial_prime_power(unsigned j, std::uint64_t a, std::uint64_t p);

/// n! with every factor of p removed, modulo p^m.
Integer factorial_unit(std::uint64_t n, std::uint64_t p, unsigned m);

/// n! / prod(parts_i!) as unit * p^v with the unit known mod p^m.
///
/// Never forms the factorials: the valuation comes from Legendre and the
/// unit from the p-free factorial recursion.  Cheap for n in the tens of
/// millions.
PadicScalar multinomial_padic(std::uint64_t n, const std::vector<std::uint64_t>& parts,
                              std::uint64_t p, unsigned m);

/// The same coefficient as an exact integer.  Only sensible for small n.
Integer multinomial_exact(std::uint64_t n, const std::vector<std::uint64_t>& parts);

enum class MultinomialBackend { automatic, exact, padic };

/// Bound below which `automatic` uses the exact integer path.
inline constexpr std::uint64_t kExactMultinomialLimit = 10000;

/// Dispatches on the backend; the exact path is reduced to the same shape
/// as multinomial_padic.
PadicScalar multinomial(std::uint64_t n, const std::vector<std::uint64_t>& parts,
                        std::uint64_t p, unsigned m,
                        MultinomialBackend backend = MultinomialBackend::automatic);

}  // namespace pcartan
