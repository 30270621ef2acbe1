#pragma once

// Internal helpers shared by the constructors and the extremal machinery.

#include <optional>
#include <span>
#include <vector>

#include "obst/arrangement.hpp"
#include "obst/caps.hpp"

namespace obst::detail {

/// An interior point of the given source segment that lies on no other
/// source (midpoint of its first subdivision edge).
Point interior_point_on_source(const Arrangement& A, int src);

/// A point where `src` touches the boundary of face `f`: the midpoint of its
/// first boundary run, nudged to a subedge midpoint if that lands on a
/// subdivision vertex.
Point touch_point_on_face(const Arrangement& A, int f, int src);

/// Bounded face incident to every listed source. Prefers the face just below
/// the cap polyline (located through a cap piece midpoint) and falls back to
/// the incidence-set intersection.
std::optional<int> cap_good_face(const Cap& cap, const Arrangement& A, std::span<const int> srcs);

/// Bounded face incident to all sources, by incidence intersection alone.
std::optional<int> common_bounded_face(const Arrangement& A, std::span<const int> srcs);

/// A point strictly inside segment s avoiding every segment in `avoid`
/// (dyadic parameter search; the avoided set must not cover s).
Point dodge_point_on(const Segment& s, std::span<const Segment> avoid);

}  // namespace obst::detail
