#include "obst/svg.hpp"

#include <gmpxx.h>

#include <sstream>

namespace obst {

namespace {

// Fixed 6-decimal rendering computed by exact integer division (round half
// away from zero); the only place rationals leave exact arithmetic.
std::string dec(const Scalar& s) {
    mpq_class q = s.raw();
    mpz_class num = q.get_num(), den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class scaled = num * 1000000;
    mpz_class quot = scaled / den, rem = scaled % den;
    if (rem * 2 >= den) quot += 1;
    mpz_class ip = quot / 1000000, fp = quot % 1000000;
    std::string f = fp.get_str();
    f.insert(f.begin(), 6 - f.size(), '0');
    return (neg && (ip != 0 || fp != 0) ? "-" : "") + ip.get_str() + "." + f;
}

std::string pt(const Point& p) { return dec(p.x) + "," + dec(p.y); }

}  // namespace

std::string rep_to_svg(const ObstacleRepresentation& rep, const Scalar& inflate) {
    // bounding box over vertices and obstacle vertices, padded by 1+inflate
    Scalar xmin, xmax, ymin, ymax;
    bool first = true;
    auto grow = [&](const Point& p) {
        if (first) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            first = false;
        } else {
            xmin = min(xmin, p.x);
            xmax = max(xmax, p.x);
            ymin = min(ymin, p.y);
            ymax = max(ymax, p.y);
        }
    };
    for (const auto& p : rep.placement) grow(p);
    for (const auto& o : rep.obstacles)
        for (const auto& v : o.vertices) grow(v);
    if (first) grow({Scalar(0), Scalar(0)});
    Scalar pad = Scalar(1) + inflate;
    xmin -= pad; ymin -= pad; xmax += pad; ymax += pad;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << dec(xmin) << " " << dec(ymin)
        << " " << dec(xmax - xmin) << " " << dec(ymax - ymin) << "\">\n";
    // flip y so increasing y points up
    out << "<g transform=\"translate(0," << dec(ymin + ymax) << ") scale(1,-1)\">\n";

    // edges: pairs whose segment avoids every obstacle
    const int n = static_cast<int>(rep.placement.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Segment s{rep.placement[u], rep.placement[v]};
            bool blocked = false;
            for (const auto& o : rep.obstacles)
                if (seg_hits_obstacle(s, o)) {
                    blocked = true;
                    break;
                }
            if (blocked) continue;
            out << "<line x1=\"" << dec(s.a.x) << "\" y1=\"" << dec(s.a.y) << "\" x2=\""
                << dec(s.b.x) << "\" y2=\"" << dec(s.b.y)
                << "\" stroke=\"black\" stroke-width=\"0.02\"/>\n";
        }

    for (const auto& o : rep.obstacles) {
        if (o.rank == 0) {
            out << "<circle cx=\"" << dec(o.vertices[0].x) << "\" cy=\"" << dec(o.vertices[0].y)
                << "\" r=\"" << dec(inflate) << "\" fill=\"crimson\"/>\n";
        } else if (o.rank == 1) {
            out << "<line x1=\"" << dec(o.vertices[0].x) << "\" y1=\"" << dec(o.vertices[0].y)
                << "\" x2=\"" << dec(o.vertices[1].x) << "\" y2=\"" << dec(o.vertices[1].y)
                << "\" stroke=\"crimson\" stroke-width=\"" << dec(inflate)
                << "\" stroke-linecap=\"round\"/>\n";
        } else {
            out << "<polygon points=\"";
            for (size_t k = 0; k < o.vertices.size(); ++k)
                out << (k ? " " : "") << pt(o.vertices[k]);
            out << "\" fill=\"crimson\" fill-opacity=\"0.6\"/>\n";
        }
    }

    for (const auto& p : rep.placement)
        out << "<circle cx=\"" << dec(p.x) << "\" cy=\"" << dec(p.y)
            << "\" r=\"0.06\" fill=\"black\"/>\n";

    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace obst
