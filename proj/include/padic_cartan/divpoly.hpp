// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "padic_cartan/eisenstein.hpp"
#include "padic_cartan/newton_polygon.hpp"

namespace pcartan {

/// Polynomial over L kept by exponent; degrees reach p^(2k) with only
/// 2k + 1 terms, so nothing dense is ever built.
struct SparsePolynomialL {
    std::uint64_t p = 0;
    int e = 1;
    std::map<std::int64_t, EisensteinElement> terms;

    std::int64_t degree() const;
    /// Exact zero for exponents outside the support.
    EisensteinElement coefficient(std::int64_t exponent) const;
};

/// x^(p^2k) + sum_{n=1..k} (-1)^n p^n (x^(p^(2k-2n)) + alpha_inv pi^2 x^(p^(2k+1-2n))).
///
/// alpha_inv = 0 (the exact zero) gives the CM polynomial.  Integer
/// coefficients are carried at `pi_precision`.
SparsePolynomialL build_gk(std::uint64_t p, int e, const PadicScalar& alpha_inv, unsigned k,
                           std::int64_t pi_precision = 64);

/// (exponent, valuation) over the support, increasing exponent.
std::vector<std::pair<std::int64_t, Valuation>> coefficient_valuations(const SparsePolynomialL& g);

/// Newton polygon of g with the missing constant term as a point at infinity.
NewtonPolygon polygon_of(const SparsePolynomialL& g);

/// Root valuations with multiplicities, the root 0 reported at infinity.
std::vector<RootClass> root_valuation_partition(const SparsePolynomialL& g);

/// "exponent valuation" lines, for plotting.
void dump_valuations(std::ostream& out, const SparsePolynomialL& g);

}  // namespace pcartan
