#include "obst/drawing.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>

namespace obst {

std::vector<Segment> BipartiteDrawing::all_edges() const {
    std::vector<Segment> out;
    out.reserve(static_cast<size_t>(m) * n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) out.push_back(edge({i, j}));
    return out;
}

void BipartiteDrawing::validate() const {
    if (m < 1 || n < 1 || static_cast<int>(P.size()) != m || static_cast<int>(Q.size()) != n)
        throw std::invalid_argument("BipartiteDrawing: bad sizes");
    if (!(w > Scalar(0))) throw std::invalid_argument("BipartiteDrawing: width must be positive");
    if (!(P[0] == Point{Scalar(0), Scalar(0)}) || !(Q[0] == Point{w, Scalar(0)}))
        throw std::invalid_argument("BipartiteDrawing: p_1 must be (0,0) and q_1 (w,0)");
    for (int i = 0; i < m; ++i) {
        if (!(P[i].x == Scalar(0))) throw std::invalid_argument("BipartiteDrawing: P off its line");
        if (i && !(P[i - 1].y < P[i].y)) throw std::invalid_argument("BipartiteDrawing: P not y-increasing");
    }
    for (int j = 0; j < n; ++j) {
        if (!(Q[j].x == w)) throw std::invalid_argument("BipartiteDrawing: Q off its line");
        if (j && !(Q[j - 1].y < Q[j].y)) throw std::invalid_argument("BipartiteDrawing: Q not y-increasing");
    }
    if (epsilon) {
        Scalar lim = (Scalar(1) + *epsilon);
        for (int i = 1; i + 1 <= m - 1; ++i)
            if (!(d(i) < d(i + 1))) throw std::invalid_argument("BipartiteDrawing: d steps not increasing");
        if (m >= 2 && !(d(m - 1) < lim * d(1)))
            throw std::invalid_argument("BipartiteDrawing: d_{m-1} >= (1+eps) d_1");
        for (int j = 1; j + 1 <= n - 1; ++j)
            if (!(h(j) < h(j + 1))) throw std::invalid_argument("BipartiteDrawing: h steps not increasing");
        if (n >= 2 && !(h(n - 1) < lim * h(1)))
            throw std::invalid_argument("BipartiteDrawing: h_{n-1} >= (1+eps) h_1");
    }
}

namespace {

void require_positive(int m, int n, const Scalar& w, const Scalar& d1, const Scalar& h1) {
    if (m < 1 || n < 1) throw std::invalid_argument("drawing: m, n must be >= 1");
    if (!(w > Scalar(0)) || !(d1 > Scalar(0)) || !(h1 > Scalar(0)))
        throw std::invalid_argument("drawing: w, d1, h1 must be positive");
}

}  // namespace

BipartiteDrawing regular_drawing(int m, int n, const Scalar& w, const Scalar& d1, const Scalar& h1) {
    require_positive(m, n, w, d1, h1);
    BipartiteDrawing D;
    D.m = m;
    D.n = n;
    D.w = w;
    for (int i = 0; i < m; ++i) D.P.push_back({Scalar(0), Scalar(i) * d1});
    for (int j = 0; j < n; ++j) D.Q.push_back({w, Scalar(j) * h1});
    return D;
}

BipartiteDrawing dilated_drawing(int m, int n, const Scalar& w, const Scalar& d1, const Scalar& h1,
                                 const Scalar& eps) {
    require_positive(m, n, w, d1, h1);
    if (!(eps > Scalar(0))) throw std::invalid_argument("dilated_drawing: eps must be positive");
    BipartiteDrawing D;
    D.m = m;
    D.n = n;
    D.w = w;
    D.epsilon = eps;
    // step schedule d_i = d1 (1 + eps (i-1)/(m-1)); tops out strictly below (1+eps) d1
    Scalar y(0);
    D.P.push_back({Scalar(0), y});
    for (int i = 1; i < m; ++i) {
        y += d1 * (Scalar(1) + eps * Scalar(i - 1) / Scalar(m - 1));
        D.P.push_back({Scalar(0), y});
    }
    y = Scalar(0);
    D.Q.push_back({w, y});
    for (int j = 1; j < n; ++j) {
        y += h1 * (Scalar(1) + eps * Scalar(j - 1) / Scalar(n - 1));
        D.Q.push_back({w, y});
    }
    D.validate();
    return D;
}

std::vector<EdgeId> level_edges(const BipartiteDrawing& D, int k) {
    if (k < 1 || k > D.m + D.n - 1) throw std::invalid_argument("level_edges: k out of range");
    std::vector<EdgeId> out;
    // increasing i means decreasing j, hence strictly decreasing slope
    for (int i = std::max(1, k + 1 - D.n); i <= std::min(D.m, k); ++i) out.push_back({i, k + 1 - i});
    return out;
}

bool is_uniformly_crossing(const BipartiteDrawing& D, std::span<const EdgeId> t) {
    if (t.size() < 2) throw std::invalid_argument("is_uniformly_crossing: tuple length must be >= 2");
    for (const auto& e : t)
        if (e.i < 1 || e.i > D.m || e.j < 1 || e.j > D.n)
            throw std::invalid_argument("is_uniformly_crossing: edge index out of range");
    int di = t[1].i - t[0].i, dj = t[1].j - t[0].j;
    if (di <= 0 || dj >= 0) return false;
    for (size_t k = 1; k + 1 < t.size(); ++k)
        if (t[k + 1].i - t[k].i != di || t[k + 1].j - t[k].j != dj) return false;
    return true;
}

BipartiteDrawing regularize(const BipartiteDrawing& D) {
    Scalar d1 = D.m >= 2 ? D.d(1) : Scalar(1);
    Scalar h1 = D.n >= 2 ? D.h(1) : Scalar(1);
    return regular_drawing(D.m, D.n, D.w, d1, h1);
}

Point meeting_point(const BipartiteDrawing& D, std::span<const EdgeId> tuple) {
    if (!is_uniformly_crossing(D, tuple))
        throw std::invalid_argument("meeting_point: tuple is not uniformly crossing");
    BipartiteDrawing R = regularize(D);
    SegIntersection r = seg_intersection(R.edge(tuple[0]), R.edge(tuple[1]));
    if (r.kind != HitKind::Point) throw std::logic_error("meeting_point: edges do not cross");
    for (size_t k = 2; k < tuple.size(); ++k)
        if (!on_segment(r.p, R.edge(tuple[k])))
            throw std::logic_error("meeting_point: tuple not concurrent in the regularization");
    return r.p;
}

std::vector<ConcurrentFamily> concurrent_families(const BipartiteDrawing& R) {
    struct PointLess {
        bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
    };
    // Crossing pairs are exactly (i,j),(i',j') with (i-i')(j-j') < 0; group
    // the meeting points by exact coordinates.
    std::map<Point, ConcurrentFamily, PointLess> fam;
    for (int i = 1; i <= R.m; ++i)
        for (int j = 1; j <= R.n; ++j)
            for (int i2 = i + 1; i2 <= R.m; ++i2)
                for (int j2 = 1; j2 < j; ++j2) {
                    SegIntersection r = seg_intersection(R.edge({i, j}), R.edge({i2, j2}));
                    if (r.kind != HitKind::Point) throw std::logic_error("regular drawing: missing crossing");
                    auto& f = fam[r.p];
                    if (f.edges.empty()) f.meeting = r.p;
                    f.edges.push_back({i, j});
                    f.edges.push_back({i2, j2});
                }
    std::vector<ConcurrentFamily> out;
    out.reserve(fam.size());
    for (auto& [k, f] : fam) {
        std::sort(f.edges.begin(), f.edges.end(),
                  [](const EdgeId& a, const EdgeId& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
        f.edges.erase(std::unique(f.edges.begin(), f.edges.end()),
                      f.edges.end());
        // increasing i within one concurrent family means decreasing slope
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

bool y_less(const Point& a, const Point& b) { return a.y < b.y || (a.y == b.y && a.x < b.x); }

// Divide-and-conquer closest pair on squared distances, exact throughout.
// p[lo..hi) is x-sorted on entry and y-sorted on exit. Requires hi-lo >= 2.
Scalar closest_rec(std::vector<Point>& p, std::vector<Point>& tmp, size_t lo, size_t hi) {
    const size_t n = hi - lo;
    if (n <= 3) {
        Scalar best = dist_sq(p[lo], p[lo + 1]);
        for (size_t i = lo; i < hi; ++i)
            for (size_t j = i + 1; j < hi; ++j) {
                Scalar d = dist_sq(p[i], p[j]);
                if (d < best) best = d;
            }
        std::sort(p.begin() + lo, p.begin() + hi, y_less);
        return best;
    }
    size_t mid = lo + n / 2;
    Scalar xm = p[mid].x;
    Scalar d = min(closest_rec(p, tmp, lo, mid), closest_rec(p, tmp, mid, hi));
    std::merge(p.begin() + lo, p.begin() + mid, p.begin() + mid, p.begin() + hi,
               tmp.begin() + lo, y_less);
    std::copy(tmp.begin() + lo, tmp.begin() + hi, p.begin() + lo);
    std::vector<const Point*> strip;
    for (size_t i = lo; i < hi; ++i) {
        Scalar dx = p[i].x - xm;
        if (dx * dx < d) strip.push_back(&p[i]);
    }
    for (size_t i = 0; i < strip.size(); ++i)
        for (size_t j = i + 1; j < strip.size(); ++j) {
            Scalar dy = strip[j]->y - strip[i]->y;
            if (!(dy * dy < d)) break;
            Scalar dd = dist_sq(*strip[i], *strip[j]);
            if (dd < d) d = dd;
        }
    return d;
}

Scalar closest_pair_sq(std::vector<Point> pts) {
    std::vector<Point> tmp(pts.size());
    return closest_rec(pts, tmp, 0, pts.size());
}

}  // namespace

Scalar min_intersection_gap_sq(const BipartiteDrawing& D) {
    for (int i = 2; i < D.m; ++i)
        if (!(D.d(i) == D.d(1))) throw std::invalid_argument("min_intersection_gap: drawing not regular");
    for (int j = 2; j < D.n; ++j)
        if (!(D.h(j) == D.h(1))) throw std::invalid_argument("min_intersection_gap: drawing not regular");
    std::vector<Point> pts;
    for (const auto& f : concurrent_families(D)) pts.push_back(f.meeting);
    if (pts.size() < 2)
        throw std::domain_error("min_intersection_gap: fewer than two intersection points");
    std::sort(pts.begin(), pts.end(), lex_less);
    return closest_pair_sq(std::move(pts)) / Scalar(4);
}

Cap level_cap(const BipartiteDrawing& D, int k, const Arrangement& A) {
    auto ids = level_edges(D, k);
    if (ids.size() == 1) {
        Cap c;
        c.edges = {D.edge(ids[0])};
        c.polyline.pts = {c.edges[0].a, c.edges[0].b};
        c.polyline.piece_src = {0};
        c.pieces = {c.edges[0]};
        return c;
    }
    std::vector<Segment> segs;
    for (const auto& e : ids) segs.push_back(D.edge(e));
    CapResult r = form_cap(segs);
    if (!r) throw std::logic_error("level_cap: level does not form a cap (" + to_string(r.fail) + ")");
    if (!is_good(*r.cap, A)) throw std::logic_error("level_cap: level-cap is not good");
    return std::move(*r.cap);
}

namespace {

std::optional<CertifiedDrawing> attempt_eps(int m, int n, const Scalar& w, const Scalar& d1,
                                            const Scalar& h1, const Scalar& delta_sq,
                                            const Scalar& eps,
                                            const std::vector<ConcurrentFamily>& families,
                                            Exec exec) {
    BipartiteDrawing D = dilated_drawing(m, n, w, d1, h1, eps);

    // (a) proximity: each dilated crossing within delta of its regular spot
    struct PairCross {
        EdgeId e1, e2;
        const Point* at;
    };
    std::vector<PairCross> pairs;
    for (const auto& f : families)
        for (size_t a = 0; a < f.edges.size(); ++a)
            for (size_t b = a + 1; b < f.edges.size(); ++b)
                pairs.push_back({f.edges[a], f.edges[b], &f.meeting});
    std::atomic<bool> ok{true};
    parallel_for(exec, pairs.size(), [&](size_t idx) {
        if (!ok.load(std::memory_order_relaxed)) return;
        const auto& pc = pairs[idx];
        SegIntersection r = seg_intersection(D.edge(pc.e1), D.edge(pc.e2));
        if (r.kind != HitKind::Point || !(dist_sq(r.p, *pc.at) < delta_sq))
            ok.store(false, std::memory_order_relaxed);
    });
    if (!ok.load()) return std::nullopt;

    // (b) each maximal concurrent family forms a cap, its vertices stay
    // delta-close to the meeting point, and the cap is good in the full
    // arrangement
    auto arr = std::make_shared<Arrangement>(build(D.all_edges(), {false, exec}));
    std::atomic<bool> good{true};
    parallel_for(exec, families.size(), [&](size_t idx) {
        if (!good.load(std::memory_order_relaxed)) return;
        const auto& fam = families[idx];
        std::vector<Segment> segs;
        for (const auto& e : fam.edges) segs.push_back(D.edge(e));
        CapResult cr = form_cap(segs);
        if (!cr) {
            good.store(false, std::memory_order_relaxed);
            return;
        }
        for (const auto& v : cr.cap->vertices)
            if (!(dist_sq(v, fam.meeting) < delta_sq)) {
                good.store(false, std::memory_order_relaxed);
                return;
            }
        // cap edges are sources by construction: source id = (i-1)*n + (j-1)
        std::vector<int> src;
        for (const auto& e : fam.edges) src.push_back((e.i - 1) * n + (e.j - 1));
        std::vector<int> common = arr->faces_of(src[0]);
        for (size_t s = 1; s < src.size() && !common.empty(); ++s) {
            std::vector<int> next;
            const auto& fs = arr->faces_of(src[s]);
            std::set_intersection(common.begin(), common.end(), fs.begin(), fs.end(),
                                  std::back_inserter(next));
            common = std::move(next);
        }
        bool has_bounded = false;
        for (int f : common)
            if (arr->face[f].bounded) has_bounded = true;
        if (!has_bounded) good.store(false, std::memory_order_relaxed);
    });
    if (!good.load()) return std::nullopt;

    CertifiedDrawing out;
    out.drawing = std::move(D);
    out.cert = {eps, delta_sq, {"proximity", "good-caps"}};
    out.arr = std::move(arr);
    return out;
}

}  // namespace

Scalar effective_delta_sq(int m, int n, const Scalar& w, const Scalar& d1, const Scalar& h1,
                          std::optional<Scalar> delta_override) {
    require_positive(m, n, w, d1, h1);
    BipartiteDrawing R = regular_drawing(m, n, w, d1, h1);
    Scalar delta_sq;
    try {
        delta_sq = min_intersection_gap_sq(R);
    } catch (const std::domain_error&) {
        // at most one intersection point: any separation works
        Scalar f = min(w, min(d1, h1)) / Scalar(2);
        delta_sq = f * f;
    }
    if (delta_override) {
        if (!(*delta_override > Scalar(0)))
            throw std::invalid_argument("certify_epsilon: delta override must be positive");
        delta_sq = min(delta_sq, *delta_override * *delta_override);
    }
    return delta_sq;
}

std::optional<CertifiedDrawing> try_epsilon(int m, int n, const Scalar& w, const Scalar& d1,
                                            const Scalar& h1, const Scalar& delta_sq,
                                            const Scalar& eps, Exec exec) {
    require_positive(m, n, w, d1, h1);
    auto families = concurrent_families(regular_drawing(m, n, w, d1, h1));
    return attempt_eps(m, n, w, d1, h1, delta_sq, eps, families, exec);
}

CertifiedDrawing certify_epsilon(int m, int n, const Scalar& w, const Scalar& d1, const Scalar& h1,
                                 std::optional<Scalar> delta_override, Exec exec) {
    require_positive(m, n, w, d1, h1);
    static std::mutex mu;
    static std::map<std::string, CertifiedDrawing> cache;
    std::string key = std::to_string(m) + "," + std::to_string(n) + "," + w.str() + "," + d1.str() +
                      "," + h1.str() + "," + (delta_override ? delta_override->str() : "-");
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    Scalar delta_sq = effective_delta_sq(m, n, w, d1, h1, delta_override);
    auto families = concurrent_families(regular_drawing(m, n, w, d1, h1));

    Scalar eps(1, 2);
    const int kMaxHalvings = 256;
    for (int it = 0; it < kMaxHalvings; ++it, eps /= Scalar(2)) {
        auto got = attempt_eps(m, n, w, d1, h1, delta_sq, eps, families, exec);
        if (!got) continue;
        std::lock_guard<std::mutex> lk(mu);
        cache.emplace(key, *got);
        return *got;
    }
    throw std::runtime_error("certify_epsilon: no passing epsilon after 256 halvings");
}

}  // namespace obst
