#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "obst/geom.hpp"
#include "obst/parallel.hpp"

namespace obst {

struct ArrangementOptions {
    // Overlapping collinear source segments are rejected unless set; the
    // drawing constructions never produce them.
    bool allow_collinear_overlap = false;
    Exec exec = Exec::Parallel;
};

/// Planar subdivision induced by a set of line segments.
///
/// Vertices are segment endpoints plus pairwise intersection points, edges
/// are the maximal crossing-free subsegments, faces are traversed with the
/// face-on-the-left half-edge convention. Half-edge 2e runs v0(e)->v1(e),
/// half-edge 2e+1 is its twin.
class Arrangement {
public:
    struct SubEdge {
        int v0, v1;                 // vertex ids, v0 lexicographically smaller
        std::vector<int> sources;   // source segment ids carrying this edge
    };
    struct Face {
        bool bounded = false;
        std::vector<int> cycles;     // one representative half-edge per boundary cycle
        std::vector<int> incident;   // sorted source ids sharing >= 1 edge with the boundary
    };

    std::vector<Segment> source;
    std::vector<Point> vertex;
    std::vector<SubEdge> edge;
    std::vector<Face> face;
    int unbounded_face = -1;
    int components = 0;

    // half-edge tables
    std::vector<int> he_next, he_face;

    int he_tail(int h) const { return (h & 1) ? edge[h >> 1].v1 : edge[h >> 1].v0; }
    int he_head(int h) const { return (h & 1) ? edge[h >> 1].v0 : edge[h >> 1].v1; }
    static int he_twin(int h) { return h ^ 1; }

    int n_vertices() const { return static_cast<int>(vertex.size()); }
    int n_edges() const { return static_cast<int>(edge.size()); }
    int n_faces() const { return static_cast<int>(face.size()); }
    int n_bounded_faces() const { return n_faces() - 1; }

    // per-source lookups
    const std::vector<int>& cuts_of(int src) const { return src_cuts_[src]; }
    const std::vector<int>& edges_of(int src) const { return src_edges_[src]; }
    const std::vector<int>& faces_of(int src) const { return src_faces_[src]; }

    int face_complexity(int f) const;
    int faceset_complexity(std::span<const int> faces) const;

    /// Face adjoining the given source segment from below at an interior
    /// point of one of its subdivision edges. The segment must not be
    /// vertical and the point must not be a subdivision vertex.
    int face_right_below(int src, const Point& p) const;
    /// Mirrored call: the face adjoining the segment from above.
    int face_left_above(int src, const Point& p) const;

    /// Maximal runs of consecutive subdivision edges of `src` on the boundary
    /// of face `f`, each returned as the subsegment between run extremes.
    std::vector<Segment> pieces_of(int f, int src) const;

    /// An interior point of the run that is never a subdivision vertex.
    Point piece_interior_point(int f, int src) const;

    /// Exact source index of a segment given by endpoints (unordered), or
    /// nullopt.
    std::optional<int> source_index(const Segment& s) const;

    /// V - E + F == 1 + C, with F counting bounded faces plus one unbounded.
    bool euler_check() const;

    /// All bounded-face boundary cycles turn consistently (convex faces).
    bool bounded_faces_convex() const;

    int vertex_index(const Point& p) const;  // -1 if absent

private:
    friend Arrangement build(std::vector<Segment>, const ArrangementOptions&);
    std::vector<std::vector<int>> src_cuts_;   // vertex ids along each source
    std::vector<std::vector<int>> src_edges_;  // subedge ids along each source
    std::vector<std::vector<int>> src_faces_;  // sorted face ids per source
    int locate_subedge(int src, const Point& p) const;
};

/// Builds the full subdivision. Throws std::invalid_argument on duplicate
/// sources, degenerate segments, or (by default) collinear overlaps.
Arrangement build(std::vector<Segment> segments, const ArrangementOptions& opt = {});

struct ArrangementStats {
    int segments, vertices, edges, faces, bounded_faces;
    int max_face_complexity;
    long long total_complexity;
};

ArrangementStats stats(const Arrangement& a);

}  // namespace obst
