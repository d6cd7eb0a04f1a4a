// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "padic_cartan/combinatorics.hpp"
#include "padic_cartan/curve.hpp"
#include "padic_cartan/eisenstein.hpp"

namespace pcartan {

// Coefficients d_r of log(t) = sum d_r t^r for y^2 = x^3 + A x + B, t = -x/y.

struct YasudaOptions {
    MultinomialBackend backend = MultinomialBackend::automatic;
    /// Extra summation indices kept past the truncation bound.
    std::int64_t guard = 1;
    /// Refuse sums with more candidate terms than this.
    std::uint64_t max_terms = 20'000'000;
};

struct YasudaStats {
    std::uint64_t candidates = 0;  // (m, n) pairs inspected
    std::uint64_t computed = 0;    // terms actually evaluated
    std::uint64_t dropped = 0;     // provably zero mod pi^S
    bool truncated = false;        // enumeration stopped at the m (or n) bound
};

/// d_r from the closed multinomial sum over 2m + 3n = (r - 1)/2, known mod
/// pi^target_precision (absolute).  A and B must each be exact zero or
/// nonzero to their precision.
EisensteinElement yasuda_coefficient(const EisensteinElement& a, const EisensteinElement& b,
                                     std::uint64_t r, std::int64_t target_precision,
                                     const YasudaOptions& options = {},
                                     YasudaStats* stats = nullptr);

/// Same, for the exact monomial coefficients of a model over L.  Each term
/// is built at exactly the precision it needs.
EisensteinElement yasuda_coefficient(const ModelOverL& model, std::uint64_t r,
                                     std::int64_t target_precision,
                                     const YasudaOptions& options = {},
                                     YasudaStats* stats = nullptr);

enum class LogMethod { yasuda, series_inversion };

std::string to_string(LogMethod m);

struct FormalLogPrefix {
    std::uint64_t p = 0;
    int e = 1;
    EisensteinElement a;
    EisensteinElement b;
    LogMethod method = LogMethod::yasuda;
    std::map<std::uint64_t, EisensteinElement> coeffs;

    const EisensteinElement& at(std::uint64_t r) const;
};

/// d_1 .. d_n from the Weierstrass equation itself: with w = -1/y = t^3 W(t),
/// W = 1 + A t^4 W^2 + B t^6 W^3 is solved coefficient by coefficient, and
/// dx/(2y) = 1 + t W'/(2W) is integrated termwise.  O(n^2).
FormalLogPrefix series_inversion_logarithm(const EisensteinElement& a,
                                           const EisensteinElement& b, std::uint64_t n_terms);

/// Yasuda coefficients for every r <= n_terms, same shape as above.
FormalLogPrefix yasuda_logarithm(const EisensteinElement& a, const EisensteinElement& b,
                                 std::uint64_t n_terms, std::int64_t target_precision,
                                 const YasudaOptions& options = {});

/// Coefficient of x^(p-1) in (x^3 + A x + B)^((p-1)/2), by expanding the
/// power directly.
EisensteinElement hasse_invariant(const EisensteinElement& a, const EisensteinElement& b,
                                  std::uint64_t p);

/// -(k+1) + v(A_L) for e in {3, 6}, -(k+1) + v(B_L) for e = 4.  Requires
/// e | p + 1, e < p - 1 and the good-model normalization.
Valuation odd_coefficient_valuation(const ModelOverL& model, std::uint64_t k);

}  // namespace pcartan
