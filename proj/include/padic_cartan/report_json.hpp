// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <string>

#include <json.hpp>

#include "padic_cartan/classifier.hpp"
#include "padic_cartan/divpoly.hpp"

namespace pcartan {

// Field order is fixed and exact values travel as strings, so a parse and
// re-dump reproduces the same bytes.  Layout is described in docs/schema.md.
using Json = nlohmann::ordered_json;

Json to_json(const Valuation& v);
Json to_json(const PadicScalar& x);
Json to_json(const EisensteinElement& x);
Json to_json(const Alpha& a);
Json to_json(const HodgeParameters& h);
Json to_json(const ImageReport& r);
Json to_json(const SparsePolynomialL& g);
Json to_json(const std::vector<RootClass>& roots);

/// Two-space indented dump.
std::string dump(const Json& j);

}  // namespace pcartan
