#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "obst/arrangement.hpp"
#include "obst/geom.hpp"

namespace obst {

/// One connected component of a lower envelope: an x-monotone polyline with
/// a source index per linear piece.
struct EnvelopeComponent {
    std::vector<Point> pts;       // piece k runs pts[k] -> pts[k+1]
    std::vector<int> piece_src;   // size pts.size()-1
};

/// Pointwise minimum of the segments (as partial linear functions of x) over
/// the union of their x-projections, split into maximal connected components,
/// left to right. Throws on vertical segments.
std::vector<EnvelopeComponent> lower_envelope(std::span<const Segment> segments);

struct Cap {
    std::vector<Segment> edges;     // e_1..e_l, slopes strictly decreasing
    std::vector<Point> vertices;    // r_1..r_{l-1}, x strictly increasing
    EnvelopeComponent polyline;     // the envelope component containing all r_i
    std::vector<Segment> pieces;    // e_i visited on the component, one entry per edge
};

enum class CapFail {
    TooShort,
    Vertical,
    NoIntersection,   // consecutive pair does not meet in a single point
    XOrder,
    SlopeOrder,
    Disconnected,     // some r_i off the envelope component of the others
};

std::string to_string(CapFail f);

struct CapResult {
    std::optional<Cap> cap;
    CapFail fail = CapFail::TooShort;
    explicit operator bool() const { return cap.has_value(); }
};

/// Validates the cap conditions for an ordered tuple and assembles the cap.
CapResult form_cap(std::span<const Segment> ordered);

/// True iff the cap has one edge, or some bounded face of A is incident to
/// every cap edge. Cap edges must be source segments of A.
bool is_good(const Cap& cap, const Arrangement& A);

/// The bounded face certifying goodness, if any (single-edge caps get the
/// first bounded face incident to their edge).
std::optional<int> good_face(const Cap& cap, const Arrangement& A);

}  // namespace obst
