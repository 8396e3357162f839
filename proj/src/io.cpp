#include "theta5/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace theta5 {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

std::string g17(double v) { return fmt("%.17g", v); }

std::string trimmed(std::string s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double parse_coord(const std::string& token, int line, int column) {
    const std::string t = trimmed(token);
    if (t.empty()) throw ParseError("missing coordinate", line, column);
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw ParseError("cannot parse coordinate '" + t + "'", line, column);
    return v;
}

}  // namespace

std::vector<Point> load_points(std::istream& in) {
    std::vector<Point> pts;
    std::map<std::pair<double, double>, int> seen;
    std::string raw;
    int line = 0;
    bool first_record = true;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trimmed(raw);
        if (s.empty() || s[0] == '#') continue;
        if (first_record) {
            first_record = false;
            std::string lowered = s;
            std::transform(lowered.begin(), lowered.end(), lowered.begin(), ::tolower);
            if (lowered == "x,y" || lowered == "x y") continue;  // optional header
        }
        size_t comma = s.find(',');
        std::string xs, ys;
        int ycol;
        if (comma != std::string::npos) {
            xs = s.substr(0, comma);
            ys = s.substr(comma + 1);
            ycol = static_cast<int>(comma) + 2;
        } else {
            size_t ws = s.find_first_of(" \t");
            if (ws == std::string::npos)
                throw ParseError("expected two delimited coordinates", line, 1);
            xs = s.substr(0, ws);
            ys = s.substr(ws + 1);
            ycol = static_cast<int>(ws) + 2;
        }
        Point p{parse_coord(xs, line, 1), parse_coord(ys, line, ycol)};
        if (!is_finite(p)) throw ParseError("non-finite coordinate", line, 1);
        auto [it, inserted] = seen.emplace(std::make_pair(p.x, p.y), line);
        if (!inserted)
            throw DuplicatePointError("duplicate point at line " + std::to_string(line) +
                                          " (first seen at line " + std::to_string(it->second) +
                                          ")",
                                      line);
        pts.push_back(p);
    }
    return pts;
}

std::vector<Point> load_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open points file: " + path);
    return load_points(in);
}

void save_points(std::ostream& out, std::span<const Point> pts) {
    for (const Point& p : pts) out << g17(p.x) << "," << g17(p.y) << "\n";
}

void save_points_file(const std::string& path, std::span<const Point> pts) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    save_points(out, pts);
}

void save_graph(std::ostream& out, const ThetaGraph& g) {
    out << "theta-graph 1\n";
    out << "k " << g.config.k << "\n";
    out << "tolerance " << g17(g.config.tolerance) << "\n";
    out << "points " << g.n() << "\n";
    save_points(out, g.vertices);
    out << "edges " << g.edges.size() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
}

ThetaGraph load_graph(std::istream& in) {
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "theta-graph" || version != 1)
        throw Error("not a theta-graph file (bad header)");
    std::string key;
    int k = 0, n = 0;
    double tolerance = 0.0;
    in >> key >> k;
    if (key != "k") throw Error("graph file: expected 'k'");
    in >> key >> tolerance;
    if (key != "tolerance") throw Error("graph file: expected 'tolerance'");
    in >> key >> n;
    if (key != "points") throw Error("graph file: expected 'points'");
    std::vector<Point> pts(n);
    for (int i = 0; i < n; ++i) {
        char comma;
        if (!(in >> pts[i].x >> comma >> pts[i].y) || comma != ',')
            throw Error("graph file: bad point record " + std::to_string(i));
    }
    size_t m = 0;
    in >> key >> m;
    if (key != "edges") throw Error("graph file: expected 'edges'");
    std::vector<std::pair<int, int>> stored(m);
    for (size_t i = 0; i < m; ++i)
        if (!(in >> stored[i].first >> stored[i].second))
            throw Error("graph file: bad edge record " + std::to_string(i));

    ThetaGraph g = build_theta_graph(GeomConfig(k, tolerance), std::move(pts));
    std::sort(stored.begin(), stored.end());
    if (stored != g.edges)
        throw GraphIntegrityError(
            "graph file edges do not match the reconstruction from its points");
    return g;
}

void save_graph_file(const std::string& path, const ThetaGraph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    save_graph(out, g);
}

ThetaGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    return load_graph(in);
}

ExportFormat parse_export_format(const std::string& name) {
    if (name == "edge-list") return ExportFormat::EdgeList;
    if (name == "dot") return ExportFormat::Dot;
    if (name == "svg") return ExportFormat::Svg;
    throw Error("unknown export format: " + name + " (want edge-list, dot, or svg)");
}

namespace {

void export_edge_list(std::ostream& out, const ThetaGraph& g) {
    out << "# u v length\n";
    for (auto [u, v] : g.edges)
        out << u << " " << v << " " << fmt("%.12f", g.edge_length(u, v)) << "\n";
}

void export_dot(std::ostream& out, const ThetaGraph& g) {
    out << "graph theta {\n  node [shape=point];\n";
    for (int i = 0; i < g.n(); ++i)
        out << "  " << i << " [pos=\"" << g17(g.vertices[i].x) << ","
            << g17(g.vertices[i].y) << "!\"];\n";
    for (auto [u, v] : g.edges)
        out << "  " << u << " -- " << v << " [len=" << fmt("%.12f", g.edge_length(u, v))
            << "];\n";
    out << "}\n";
}

void export_svg(std::ostream& out, const ThetaGraph& g, const PathResult* overlay) {
    const double view = 800.0, margin = 40.0;
    double lox = g.vertices[0].x, hix = lox, loy = g.vertices[0].y, hiy = loy;
    for (const Point& p : g.vertices) {
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
    }
    double span = std::max({hix - lox, hiy - loy, 1e-9});
    auto sx = [&](double x) { return margin + (x - lox) / span * view; };
    auto sy = [&](double y) { return margin + (hiy - y) / span * view; };

    double w = 2.0 * margin + view;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << w
        << "\" viewBox=\"0 0 " << w << " " << w << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (auto [u, v] : g.edges)
        out << "<line x1=\"" << fmt("%.3f", sx(g.vertices[u].x)) << "\" y1=\""
            << fmt("%.3f", sy(g.vertices[u].y)) << "\" x2=\"" << fmt("%.3f", sx(g.vertices[v].x))
            << "\" y2=\"" << fmt("%.3f", sy(g.vertices[v].y))
            << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    if (overlay && overlay->vertices.size() >= 2) {
        out << "<polyline fill=\"none\" stroke=\"#e07000\" stroke-width=\"2.5\" points=\"";
        for (size_t i = 0; i < overlay->vertices.size(); ++i) {
            const Point& p = g.vertices[overlay->vertices[i]];
            out << (i ? " " : "") << fmt("%.3f", sx(p.x)) << "," << fmt("%.3f", sy(p.y));
        }
        out << "\"/>\n";
    }
    for (const Point& p : g.vertices)
        out << "<circle cx=\"" << fmt("%.3f", sx(p.x)) << "\" cy=\"" << fmt("%.3f", sy(p.y))
            << "\" r=\"3\" fill=\"#222222\"/>\n";
    out << "</svg>\n";
}

}  // namespace

void export_graph(std::ostream& out, const ThetaGraph& g, ExportFormat format,
                  const PathResult* overlay) {
    switch (format) {
        case ExportFormat::EdgeList: export_edge_list(out, g); return;
        case ExportFormat::Dot: export_dot(out, g); return;
        case ExportFormat::Svg: export_svg(out, g, overlay); return;
    }
    throw Error("unknown export format");
}

std::string render_ratio_report(const RatioReport& r, bool with_matrix) {
    std::ostringstream os;
    os << "worst_pair " << r.worst_pair.first << " " << r.worst_pair.second << "\n";
    os << "connected " << (r.connected ? "true" : "false") << "\n";
    if (r.connected) {
        os << "graph_distance " << fmt("%.12f", r.graph_distance) << "\n";
        os << "euclidean_distance " << fmt("%.12f", r.euclidean_distance) << "\n";
        os << "ratio " << fmt("%.12f", r.ratio) << "\n";
    } else {
        os << "graph_distance infinity\n";
        os << "euclidean_distance " << fmt("%.12f", r.euclidean_distance) << "\n";
        os << "ratio infinity\n";
    }
    if (r.bound_checked)
        os << "bound_checked " << fmt("%.12f", *r.bound_checked) << "\n";
    else
        os << "bound_checked none\n";
    os << "bound_satisfied " << (r.bound_satisfied ? "true" : "false") << "\n";
    if (with_matrix && !r.per_pair_ratios.empty()) {
        size_t n = static_cast<size_t>(std::lround(std::sqrt(double(r.per_pair_ratios.size()))));
        os << "per_pair_ratios " << n << "\n";
        for (size_t s = 0; s < n; ++s) {
            for (size_t t = 0; t < n; ++t) {
                double v = r.per_pair_ratios[s * n + t];
                os << (t ? " " : "") << (std::isfinite(v) ? fmt("%.6f", v) : "infinity");
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string render_bounds_report(const BoundsReport& r) {
    std::ostringstream os;
    for (const BoundsCheck& c : r.checks)
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    os << (r.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
    return os.str();
}

std::string render_path_result(const PathResult& p) {
    std::ostringstream os;
    os << "vertices";
    for (int v : p.vertices) os << " " << v;
    os << "\nlength " << fmt("%.12f", p.length) << "\n";
    if (!p.case_trace.empty()) {
        os << "case_trace";
        for (const CaseStep& s : p.case_trace)
            os << " " << to_string(s.label) << (s.near_boundary ? "!" : "");
        os << "\n";
    }
    return os.str();
}

std::string render_routing_outcome(const RoutingOutcome& o) {
    std::ostringstream os;
    os << "reached " << (o.reached ? "true" : "false") << "\n";
    os << "steps " << o.steps << "\n";
    os << "length " << fmt("%.12f", o.path.length) << "\n";
    os << "competitiveness " << fmt("%.12f", o.competitiveness) << "\n";
    os << "vertices";
    for (int v : o.path.vertices) os << " " << v;
    os << "\n";
    return os.str();
}

std::string render_sweep(const SweepTable& t) {
    std::ostringstream os;
    os << "pairs " << t.entries.size() << "\n";
    os << "max_competitiveness " << fmt("%.12f", t.max_competitiveness) << "\n";
    os << "mean_competitiveness " << fmt("%.12f", t.mean_competitiveness) << "\n";
    os << "unreached " << t.unreached.size() << "\n";
    for (auto [s, tt] : t.unreached) os << s << " " << tt << "\n";
    return os.str();
}

}  // namespace theta5
