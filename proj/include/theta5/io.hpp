#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "theta5/analysis.hpp"
#include "theta5/graph.hpp"
#include "theta5/routing.hpp"

namespace theta5 {

struct DuplicatePointError : Error {
    DuplicatePointError(const std::string& msg, int line_) : Error(msg), line(line_) {}
    int line;
};

// Comma-delimited "x,y" records, one per line. Blank lines and '#' comments
// are skipped and an optional "x,y" header is tolerated. Duplicate points and
// non-finite values are rejected with line-numbered diagnostics.
std::vector<Point> load_points(std::istream& in);
std::vector<Point> load_points_file(const std::string& path);

// 17 significant digits, so export/import round-trips bit-identically.
void save_points(std::ostream& out, std::span<const Point> pts);
void save_points_file(const std::string& path, std::span<const Point> pts);

// Self-contained graph file: k, tolerance, points, and the edge list. Loading
// rebuilds the graph from the stored points and verifies the stored edges
// against the reconstruction.
void save_graph(std::ostream& out, const ThetaGraph& g);
ThetaGraph load_graph(std::istream& in);
void save_graph_file(const std::string& path, const ThetaGraph& g);
ThetaGraph load_graph_file(const std::string& path);

enum class ExportFormat { EdgeList, Dot, Svg };
ExportFormat parse_export_format(const std::string& name);

// edge-list: "u v length" lines sorted by ids; dot: undirected graph with
// position attributes; svg: point/edge rendering with an optional highlighted
// path overlay.
void export_graph(std::ostream& out, const ThetaGraph& g, ExportFormat format,
                  const PathResult* overlay = nullptr);

std::string render_ratio_report(const RatioReport& r, bool with_matrix = false);
std::string render_bounds_report(const BoundsReport& r);
std::string render_path_result(const PathResult& p);
std::string render_routing_outcome(const RoutingOutcome& o);
std::string render_sweep(const SweepTable& t);

}  // namespace theta5
