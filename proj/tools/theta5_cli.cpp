#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "theta5/analysis.hpp"
#include "theta5/constructions.hpp"
#include "theta5/io.hpp"
#include "theta5/routing.hpp"
#include "theta5/spanning_path.hpp"

using namespace theta5;

namespace {

// Common graph-input options: either a prebuilt --graph file or --points
// with --k (and optionally --tolerance).
struct GraphInput {
    std::string graph_file;
    std::string points_file;
    int k = 5;
    std::optional<double> tolerance;

    void attach(CLI::App* cmd) {
        auto* gf = cmd->add_option("--graph", graph_file, "theta-graph file (from `build`)");
        auto* pf = cmd->add_option("--points", points_file, "point file (x,y per line)");
        cmd->add_option("--k", k, "cone count")->check(CLI::Range(4, 1024));
        cmd->add_option("--tolerance", tolerance,
                        "absolute tolerance (default 1e-9 * bounding-box diagonal)");
        gf->excludes(pf);
    }

    ThetaGraph load() const {
        if (!graph_file.empty()) return load_graph_file(graph_file);
        if (points_file.empty()) throw Error("need --graph or --points");
        std::vector<Point> pts = load_points_file(points_file);
        GeomConfig cfg = config_for_points(k, pts, tolerance);
        return build_theta_graph(cfg, std::move(pts));
    }
};

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw Error("cannot open output file: " + path);
    return file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta_k-graph construction, spanning-ratio measurement, and theta-routing"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "build a theta-graph and write it to a file");
    GraphInput build_in;
    std::string build_points, build_out;
    build->add_option("--k", build_in.k, "cone count")->check(CLI::Range(4, 1024));
    build->add_option("--points", build_points, "point file")->required();
    build->add_option("--out", build_out, "output graph file")->required();
    build->add_option("--tolerance", build_in.tolerance, "absolute tolerance");

    // ratio
    auto* ratio = app.add_subcommand("ratio", "measure the exact spanning ratio");
    GraphInput ratio_in;
    ratio_in.attach(ratio);
    bool ratio_matrix = false;
    ratio->add_flag("--matrix", ratio_matrix, "also print the full per-pair ratio matrix");

    // path
    auto* path = app.add_subcommand("path", "constructive spanning path or exact shortest path");
    GraphInput path_in;
    path_in.attach(path);
    int path_src = 0, path_dst = 0;
    bool want_constructive = false, want_shortest = false;
    path->add_option("--source", path_src, "source vertex id")->required();
    path->add_option("--dest", path_dst, "destination vertex id")->required();
    auto* fc = path->add_flag("--constructive", want_constructive,
                              "constructive spanning path with case trace (default)");
    auto* fs = path->add_flag("--shortest", want_shortest, "exact Euclidean shortest path");
    fc->excludes(fs);

    // route
    auto* route = app.add_subcommand("route", "greedy theta-routing between two vertices");
    GraphInput route_in;
    route_in.attach(route);
    int route_src = 0, route_dst = 0, step_cap = 0;
    route->add_option("--source", route_src, "source vertex id")->required();
    route->add_option("--dest", route_dst, "destination vertex id")->required();
    route->add_option("--step-cap", step_cap, "hop limit (default 10*n)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a lower-bound or adversary point set");
    std::string gen_kind, gen_out;
    double gen_eps = 1e-6;
    int gen_cycles = 3;
    gen->add_option("kind", gen_kind, "theorem3 | appendix | adversary")->required();
    gen->add_option("--epsilon", gen_eps, "placement offset (default 1e-6)");
    gen->add_option("--cycles", gen_cycles, "adversary cycles (default 3)");
    gen->add_option("--out", gen_out, "output point file (default stdout)");

    // export
    auto* exp = app.add_subcommand("export", "write the graph as edge-list, dot, or svg");
    GraphInput exp_in;
    exp_in.attach(exp);
    std::string exp_format = "edge-list", exp_out, exp_overlay;
    int exp_src = 0, exp_dst = 0;
    exp->add_option("--format", exp_format, "edge-list | dot | svg");
    exp->add_option("--out", exp_out, "output file (default stdout)");
    exp->add_option("--overlay", exp_overlay,
                    "svg only: highlight a path, 'shortest' or 'constructive'");
    exp->add_option("--source", exp_src, "overlay path source");
    exp->add_option("--dest", exp_dst, "overlay path destination");

    // verify
    auto* verify = app.add_subcommand("verify", "check the construction guarantees; exit 0 iff all pass");
    GraphInput verify_in;
    std::string verify_points;
    verify->add_option("--points", verify_points, "point file")->required();
    verify->add_option("--k", verify_in.k, "cone count")->check(CLI::Range(4, 1024));
    verify->add_option("--tolerance", verify_in.tolerance, "absolute tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            std::vector<Point> pts = load_points_file(build_points);
            GeomConfig cfg = config_for_points(build_in.k, pts, build_in.tolerance);
            ThetaGraph g = build_theta_graph(cfg, std::move(pts));
            save_graph_file(build_out, g);
            std::cout << "built k=" << g.config.k << " graph: " << g.n() << " vertices, "
                      << g.edges.size() << " edges -> " << build_out << "\n";
        } else if (*ratio) {
            ThetaGraph g = ratio_in.load();
            RatioReport r = spanning_ratio(g, ratio_matrix);
            std::cout << render_ratio_report(r, ratio_matrix);
        } else if (*path) {
            ThetaGraph g = path_in.load();
            if (path_src < 0 || path_src >= g.n() || path_dst < 0 || path_dst >= g.n())
                throw Error("vertex id out of range");
            if (want_shortest) {
                auto p = shortest_path(g, path_src, path_dst);
                if (!p) {
                    std::cout << "disconnected\n";
                    return 1;
                }
                std::cout << render_path_result(*p);
            } else {
                std::cout << render_path_result(spanning_path(g, path_src, path_dst));
            }
        } else if (*route) {
            ThetaGraph g = route_in.load();
            if (route_src < 0 || route_src >= g.n() || route_dst < 0 || route_dst >= g.n())
                throw Error("vertex id out of range");
            int cap = step_cap > 0 ? step_cap : 10 * g.n();
            std::cout << render_routing_outcome(theta_route(g, route_src, route_dst, cap));
        } else if (*gen) {
            std::ofstream file;
            std::ostream& out = open_out(file, gen_out);
            if (gen_kind == "theorem3") {
                save_points(out, theorem3_path(gen_eps).points);
            } else if (gen_kind == "appendix") {
                save_points(out, appendix_instance(gen_eps).points);
            } else if (gen_kind == "adversary") {
                save_points(out, adversary_instance(gen_cycles, gen_eps).points);
            } else {
                throw Error("unknown gen kind: " + gen_kind);
            }
        } else if (*exp) {
            ThetaGraph g = exp_in.load();
            std::ofstream file;
            std::ostream& out = open_out(file, exp_out);
            std::optional<PathResult> overlay;
            if (!exp_overlay.empty()) {
                if (exp_src < 0 || exp_src >= g.n() || exp_dst < 0 || exp_dst >= g.n())
                    throw Error("overlay vertex id out of range");
                if (exp_overlay == "shortest") {
                    auto p = shortest_path(g, exp_src, exp_dst);
                    if (!p) throw Error("overlay pair is disconnected");
                    overlay = *p;
                } else if (exp_overlay == "constructive") {
                    overlay = spanning_path(g, exp_src, exp_dst);
                } else {
                    throw Error("unknown overlay kind: " + exp_overlay);
                }
            }
            export_graph(out, g, parse_export_format(exp_format),
                         overlay ? &*overlay : nullptr);
        } else if (*verify) {
            std::vector<Point> pts = load_points_file(verify_points);
            GeomConfig cfg = config_for_points(verify_in.k, pts, verify_in.tolerance);
            ThetaGraph g = build_theta_graph(cfg, std::move(pts));
            BoundsReport r = verify_bounds(g);
            std::cout << render_bounds_report(r);
            return r.all_pass() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line << ", column " << e.column
                  << ")\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
