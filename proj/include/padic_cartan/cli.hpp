// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <ostream>
#include <string>

#include "padic_cartan/valuation.hpp"

namespace pcartan {

/// Exit codes: 0 for any classification, 2 for bad input, 3 when the
/// independent routes disagree, 1 for failed regression checks.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitInput = 2,
    kExitInconsistent = 3,
};

/// "num/den" or an integer, optional sign; throws DomainError otherwise.
Rational parse_rational(const std::string& text);

/// Entry point of the padic-cartan tool, with argv[0] the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pcartan
