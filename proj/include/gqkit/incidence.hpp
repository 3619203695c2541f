#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gqkit/graph.hpp"

namespace gqkit {

class structural_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class gqi_parse_error : public std::runtime_error {
public:
  gqi_parse_error(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Points 0..n_points-1 and lines given as sorted point sets.
///
/// Construction enforces that every line has at least two points and that two
/// distinct points share at most one line.
class IncidenceStructure {
public:
  IncidenceStructure() = default;
  IncidenceStructure(int n_points, std::vector<std::vector<int>> lines);

  int n_points() const { return n_points_; }
  int n_lines() const { return static_cast<int>(lines_.size()); }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::vector<int>& line(int l) const { return lines_.at(l); }
  const std::vector<int>& lines_through(int p) const { return point_lines_.at(p); }

  bool incident(int p, int l) const;
  /// Distinct points on a common line.
  bool collinear(int a, int b) const;
  std::optional<int> joining_line(int a, int b) const;
  /// Index of the line with exactly this point set.
  std::optional<int> find_line(std::vector<int> pts) const;
  long long n_flags() const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.n_points_ == b.n_points_ && a.lines_ == b.lines_;
  }

private:
  int n_points_ = 0;
  std::vector<std::vector<int>> lines_;
  std::vector<std::vector<int>> point_lines_;
  std::vector<std::uint64_t> collinear_bits_;
};

struct GqParameters {
  long long s = 0;
  long long t = 0;
  long long n_points = 0;
  long long n_lines = 0;
  long long n_flags = 0;

  bool thick() const { return s >= 2 && t >= 2; }
  static GqParameters from_order(long long s, long long t);
  friend bool operator==(const GqParameters&, const GqParameters&) = default;
};

struct GqViolation {
  enum class Kind { empty, line_size, point_degree, axiom };
  Kind kind = Kind::empty;
  int point = -1;
  int line = -1;
  /// Number of points on the line collinear with the point, for axiom failures.
  int collinear_count = -1;
  std::string message;
};

struct GqVerification {
  std::optional<GqParameters> params;
  std::optional<GqViolation> violation;

  bool ok() const { return params.has_value(); }
};

GqVerification verify_gq_axiom(const IncidenceStructure& inc);

/// Points collinear with every member of pts, a point counting as collinear with itself.
std::vector<int> perp(const IncidenceStructure& inc, std::span<const int> pts);

/// Vertices 0..n_points-1 are points, n_points+l is line l.
Graph incidence_graph(const IncidenceStructure& inc);

struct CertifiedIncidenceGraph {
  Graph graph;
  GraphMetrics metrics;
};

/// Throws structural_error unless the incidence graph has diameter 4 and girth 8.
CertifiedIncidenceGraph certify_incidence_graph(const IncidenceStructure& inc);

enum class BlockClass { trivial, st_plus_1, s_plus_1, invalid };
std::string to_string(BlockClass c);

struct BlockReport {
  int block_size = 0;
  /// Common count of block points collinear with a point of P-perp minus P; -1 if not uniform.
  int b = -1;
  BlockClass classification = BlockClass::invalid;
  std::optional<std::pair<int, int>> witness;
  std::string reason;
};

/// One report per block, in input order. Throws std::invalid_argument when
/// blocks do not partition the points or inc is not a GQ.
std::vector<BlockReport> check_point_partition(const IncidenceStructure& inc,
                                               const std::vector<std::vector<int>>& blocks);

struct SetCheck {
  bool ok = false;
  std::string reason;
  /// Offending points or lines.
  std::vector<int> witness;
};

enum class SetKind { points, lines };

SetCheck check_ovoid(const IncidenceStructure& inc, const std::vector<int>& pts);
SetCheck check_spread(const IncidenceStructure& inc, const std::vector<int>& lines);
SetCheck detect_ovoid_spread(const IncidenceStructure& inc, SetKind kind, const std::vector<int>& members);

struct OvoidSearch {
  std::optional<std::vector<int>> ovoid;
  /// Largest pairwise non-collinear set met during the search.
  int largest_partial = 0;
  long long nodes = 0;
  bool exhausted = false;
};

/// Exhaustive backtracking: an ovoid meets every line in exactly one point, so
/// the search branches on the points of the first line not yet met.
/// Stops after node_budget nodes; exhausted reports whether the tree was completed.
OvoidSearch find_ovoid(const IncidenceStructure& inc, long long node_budget = 50'000'000);

/// Point i of the result is line i of inc; line j of the result is the pencil of point j.
IncidenceStructure dualize(const IncidenceStructure& inc);

void write_gqi(std::ostream& out, const IncidenceStructure& inc);
std::string to_gqi(const IncidenceStructure& inc);
IncidenceStructure read_gqi(std::istream& in);
IncidenceStructure parse_gqi(const std::string& text);

}  // namespace gqkit
