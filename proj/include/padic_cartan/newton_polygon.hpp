// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padic_cartan/valuation.hpp"

namespace pcartan {

struct PolygonPoint {
    std::int64_t index = 0;
    Valuation valuation;
};

struct PolygonSegment {
    Rational slope;
    std::int64_t length = 0;
};

/// Root valuation and how many roots carry it.
struct RootClass {
    Valuation valuation;
    std::int64_t multiplicity = 0;

    friend bool operator==(const RootClass&, const RootClass&) = default;
};

/// Lower convex hull of (index, valuation) points.  Points at infinity only
/// contribute through `zero_roots`: the lowest finite index counts the roots
/// equal to zero.
struct NewtonPolygon {
    std::vector<PolygonPoint> points;
    std::vector<PolygonPoint> vertices;
    std::vector<PolygonSegment> segments;

    std::int64_t degree() const;
    std::int64_t zero_roots() const;
    /// {-slope, length} per segment, then the infinite class when zero_roots > 0.
    std::vector<RootClass> root_valuations() const;
    /// True when no point lies strictly below the hull.
    bool dominates_points() const;
};

/// Points may be sparse and in any order; the highest index must be finite.
NewtonPolygon newton_polygon(std::vector<PolygonPoint> points);

/// Dense form: valuations[i] belongs to x^i.
NewtonPolygon newton_polygon(const std::vector<Valuation>& valuations);

}  // namespace pcartan
