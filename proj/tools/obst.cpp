// Command-line front end: constructors, verifier, arrangement statistics,
// extremal experiments, SVG export, and a serial-vs-parallel benchmark.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "obst/construct.hpp"
#include "obst/extremal.hpp"
#include "obst/json_io.hpp"
#include "obst/svg.hpp"

using nlohmann::json;
using namespace obst;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run_construct(const std::string& input, const std::string& method, const std::string& assignment,
                  const std::string& out_path) {
    Graph g = graph_from_json(load_json(input));
    ObstacleRepresentation rep;
    json meta{{"method", method}};

    if (method == "cobipartite" || method == "bipartite") {
        std::vector<int> side;
        if (!bipartition(g, side)) {
            std::cerr << "input graph is not bipartite\n";
            return 2;
        }
        rep = method == "cobipartite" ? represent_cobipartite(g, side) : represent_bipartite(g, side);
        if (method == "cobipartite") meta["target"] = "complement-of-input";
        int m = 0;
        for (int s : side) m += s == 0;
        if (m >= 1 && g.n() - m >= 1) {
            CertifiedDrawing cd = certify_epsilon(m, g.n() - m, Scalar(1), Scalar(1), Scalar(1));
            meta["epsilon"] = cd.cert.eps.str();
            meta["deltaSq"] = cd.cert.delta_sq.str();
        }
    } else if (method == "split") {
        std::vector<int> clique, indep;
        if (!split_partition(g, clique, indep)) {
            std::cerr << "input graph is not a split graph\n";
            return 2;
        }
        rep = represent_split(g, clique, indep);
    } else if (method == "general") {
        std::vector<int> assign;
        const std::vector<int>* ap = nullptr;
        if (!assignment.empty()) {
            assign = load_json(assignment).get<std::vector<int>>();
            ap = &assign;
        }
        rep = represent_general(g, ap);
        if (g.n() >= 2) {
            CertifiedDrawing cd =
                certify_epsilon(g.n(), g.n(), Scalar(1), Scalar(1), Scalar(1), Scalar(1, 9));
            meta["epsilon"] = cd.cert.eps.str();
            meta["deltaSq"] = cd.cert.delta_sq.str();
        }
    } else if (method == "subcolor") {
        Subcoloring c = greedy_subcoloring(g);
        rep = represent_subcolored(g, c);
        meta["colors"] = c.num_colors();
    } else {
        std::cerr << "unknown method " << method << "\n";
        return 2;
    }

    json j = rep_to_json(rep);
    j["meta"] = meta;
    save_text(out_path, j.dump(2) + "\n");
    return 0;
}

int run_bench(std::ostream& out) {
    out << "op,size,millis\n";
    for (int m : {4, 6, 8, 10, 12}) {
        auto t0 = std::chrono::steady_clock::now();
        CertifiedDrawing cd = certify_epsilon(m, m, Scalar(1), Scalar(1), Scalar(1));
        out << "certify_epsilon," << m << "," << ms_since(t0) << "\n";
        auto edges = cd.drawing.all_edges();
        t0 = std::chrono::steady_clock::now();
        Arrangement as = build(edges, {false, Exec::Serial});
        out << "arrangement_build_serial," << m << "," << ms_since(t0) << "\n";
        t0 = std::chrono::steady_clock::now();
        Arrangement ap = build(edges, {false, Exec::Parallel});
        out << "arrangement_build_parallel," << m << "," << ms_since(t0) << "\n";
        if (as.n_vertices() != ap.n_vertices() || as.n_faces() != ap.n_faces())
            throw std::runtime_error("bench: serial and parallel builds disagree");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"obstacle representations, segment arrangements, and their verification"};
    app.require_subcommand(1);

    std::string input, method, assignment, out_path, graph_path, rep_path, drawing_path;
    std::string inflate = "1/4";
    bool want_stats = false;
    int n = 0, h = 0, seed = 0;
    long long M = 0;

    auto* c = app.add_subcommand("construct", "build an obstacle representation");
    c->add_option("--input", input, "graph JSON")->required();
    c->add_option("--method", method, "cobipartite|bipartite|split|general|subcolor")->required();
    c->add_option("--assignment", assignment, "vertex-to-row bijection JSON (general only)");
    c->add_option("--out", out_path, "output representation JSON")->required();

    auto* v = app.add_subcommand("verify", "check a representation against a target graph");
    v->add_option("--graph", graph_path, "graph JSON")->required();
    v->add_option("--rep", rep_path, "representation JSON")->required();

    auto* a = app.add_subcommand("arrangement", "arrangement statistics for a drawing");
    a->add_option("--drawing", drawing_path, "drawing JSON")->required();
    a->add_flag("--stats", want_stats, "print statistics JSON");

    auto* e = app.add_subcommand("extremal", "extremal constructions");
    e->require_subcommand(1);
    auto* e4 = e->add_subcommand("thm4", "middle-cap face family counts");
    e4->set_help_flag("--help", "print help");  // frees -h for the face count
    e4->add_option("--n", n)->required();
    e4->add_option("--h", h)->required();
    auto* e5 = e->add_subcommand("thm5", "uniform-crossing face family report");
    e5->add_option("--n", n)->required();
    e5->add_option("--M", M)->required();
    auto* eg = e->add_subcommand("g1", "single-obstacle family representation");
    eg->add_option("--n", n)->required();
    eg->add_option("--seed", seed)->required();
    eg->add_option("--out", out_path, "output representation JSON")->required();

    auto* s = app.add_subcommand("export-svg", "render a representation");
    s->add_option("--rep", rep_path)->required();
    s->add_option("--out", out_path)->required();
    s->add_option("--inflate", inflate, "display radius for degenerate obstacles (rational)");

    auto* b = app.add_subcommand("bench", "serial vs parallel kernel timings (CSV)");
    b->add_option("--out", out_path, "CSV output path (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (c->parsed()) return run_construct(input, method, assignment, out_path);

        if (v->parsed()) {
            Graph g = graph_from_json(load_json(graph_path));
            ObstacleRepresentation rep = rep_from_json(load_json(rep_path));
            VerifyReport r = verify(g, rep);
            std::cout << report_to_json(r).dump(2) << "\n";
            return r.pass ? 0 : 1;
        }

        if (a->parsed()) {
            BipartiteDrawing d = drawing_from_json(load_json(drawing_path));
            Arrangement arr = build(d.all_edges());
            if (want_stats) std::cout << stats_to_json(stats(arr)).dump(2) << "\n";
            return 0;
        }

        if (e4->parsed()) {
            EOfHResult r = e_of_h(n, h);
            json j{{"n", r.n},
                   {"h", r.h},
                   {"faces", static_cast<int>(r.faces.size())},
                   {"incidentEdges", r.incident_edges},
                   {"lowerBound", r.lower_bound}};
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (e5->parsed()) {
            FaceFamilyReport r = thm5_construction(n, M);
            json pp = json::array();
            for (const auto& st : r.per_pair)
                pp.push_back(json{{"i", st.i},
                                  {"k", st.k},
                                  {"crossings", st.crossings},
                                  {"faces", st.faces},
                                  {"complexity", st.complexity},
                                  {"lower", st.lower}});
            json j{{"n", r.n},          {"M", r.M},
                   {"K", r.K},          {"faces", r.face_count},
                   {"facesDistinct", r.faces_distinct},
                   {"complexity", r.complexity},
                   {"exactLower", r.exact_lower},
                   {"asymptoticRef", r.asymptotic_ref},
                   {"ratio", r.ratio},  {"perPair", pp},
                   {"topFaces", r.top_faces},
                   {"topComplexity", r.top_complexity}};
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (eg->parsed()) {
            std::mt19937 rng(static_cast<unsigned>(seed));
            std::vector<int> f;
            for (int i = 0; i < n / 2; ++i) f.push_back((n + 1) / 2 + i);
            std::shuffle(f.begin(), f.end(), rng);
            ObstacleRepresentation rep = single_obstacle_family(n, f);
            save_text(out_path, rep_to_json(rep).dump(2) + "\n");
            return 0;
        }

        if (s->parsed()) {
            ObstacleRepresentation rep = rep_from_json(load_json(rep_path));
            save_text(out_path, rep_to_svg(rep, Scalar::parse(inflate)));
            return 0;
        }

        if (b->parsed()) {
            if (out_path.empty()) return run_bench(std::cout);
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot write " + out_path);
            return run_bench(out);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
