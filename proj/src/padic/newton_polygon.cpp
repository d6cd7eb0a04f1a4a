// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/newton_polygon.hpp"

#include <algorithm>

#include "padic_cartan/errors.hpp"

namespace pcartan {

namespace {

// Sign of the turn o->a->b; <= 0 means a is not strictly below the chord.
int turn(const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b)
{
    Rational ax(a.index - o.index), bx(b.index - o.index);
    Rational ay = a.valuation.value() - o.valuation.value();
    Rational by = b.valuation.value() - o.valuation.value();
    return sgn(Rational(ax * by - ay * bx));
}

}  // namespace

NewtonPolygon newton_polygon(std::vector<PolygonPoint> points)
{
    std::sort(points.begin(), points.end(),
              [](const PolygonPoint& a, const PolygonPoint& b) { return a.index < b.index; });
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].index == points[i - 1].index)
            throw DomainError("duplicate index in Newton polygon input");
    if (points.empty() || points.back().valuation.is_infinite())
        throw DomainError("Newton polygon needs a finite top coefficient");
    if (points.front().index < 0)
        throw DomainError("negative index in Newton polygon input");

    NewtonPolygon np;
    np.points = points;
    std::vector<PolygonPoint> finite;
    for (const auto& pt : points)
        if (pt.valuation.is_finite())
            finite.push_back(pt);

    // Lower hull by monotone chain; collinear points are dropped.
    std::vector<PolygonPoint> hull;
    for (const auto& pt : finite) {
        while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    np.vertices = hull;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        PolygonSegment s;
        s.length = hull[i].index - hull[i - 1].index;
        s.slope = (hull[i].valuation.value() - hull[i - 1].valuation.value()) / Rational(s.length);
        s.slope.canonicalize();
        np.segments.push_back(s);
    }
    return np;
}

NewtonPolygon newton_polygon(const std::vector<Valuation>& valuations)
{
    std::vector<PolygonPoint> pts;
    pts.reserve(valuations.size());
    for (std::size_t i = 0; i < valuations.size(); ++i)
        pts.push_back({static_cast<std::int64_t>(i), valuations[i]});
    return newton_polygon(std::move(pts));
}

std::int64_t NewtonPolygon::degree() const
{
    return points.empty() ? 0 : points.back().index;
}

std::int64_t NewtonPolygon::zero_roots() const
{
    return vertices.empty() ? 0 : vertices.front().index;
}

std::vector<RootClass> NewtonPolygon::root_valuations() const
{
    std::vector<RootClass> out;
    for (const auto& s : segments)
        out.push_back({Valuation(Rational(-s.slope)), s.length});
    if (zero_roots() > 0)
        out.push_back({Valuation::infinity(), zero_roots()});
    return out;
}

bool NewtonPolygon::dominates_points() const
{
    for (const auto& pt : points) {
        if (pt.valuation.is_infinite())
            continue;
        for (std::size_t i = 1; i < vertices.size(); ++i) {
            const auto& a = vertices[i - 1];
            const auto& b = vertices[i];
            if (pt.index < a.index || pt.index > b.index)
                continue;
            Rational t(pt.index - a.index, b.index - a.index);
            t.canonicalize();
            Rational line = a.valuation.value() + t * (b.valuation.value() - a.valuation.value());
            if (pt.valuation.value() < line)
                return false;
        }
    }
    return true;
}

}  // namespace pcartan
