// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pcartan {

/// Deliberate corruptions, used to show that the checks can fail.
struct RegressionFaults {
    bool corrupt_v_alpha_table = false;
};

struct CheckOutcome {
    bool pass = false;
    std::string detail;
};

struct RegressionCheck {
    std::string name;
    std::string description;
    std::function<CheckOutcome(const RegressionFaults&)> run;
};

/// The worked examples (p = 11, 19, 23, 29) and the CM curve y^2 = x^3 + 1.
const std::vector<RegressionCheck>& regression_checks();

struct NamedOutcome {
    std::string name;
    CheckOutcome outcome;
};

/// Runs every check; exceptions count as failures with their message.
std::vector<NamedOutcome> run_regressions(const RegressionFaults& faults = {});

}  // namespace pcartan
