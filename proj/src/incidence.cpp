#include "gqkit/incidence.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gqkit {

namespace {

std::size_t bit_words(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

}  // namespace

IncidenceStructure::IncidenceStructure(int n_points, std::vector<std::vector<int>> lines)
    : n_points_(n_points), lines_(std::move(lines)), point_lines_(n_points) {
  if (n_points < 0) throw std::invalid_argument("negative point count");
  const std::size_t words = bit_words(n_points);
  collinear_bits_.assign(words * n_points, 0);
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    auto& pts = lines_[l];
    std::sort(pts.begin(), pts.end());
    if (pts.size() < 2) throw std::invalid_argument("line " + std::to_string(l) + " has fewer than 2 points");
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
      throw std::invalid_argument("line " + std::to_string(l) + " repeats a point");
    if (pts.front() < 0 || pts.back() >= n_points)
      throw std::invalid_argument("line " + std::to_string(l) + " has a point index out of range");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      point_lines_[pts[i]].push_back(static_cast<int>(l));
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const int a = pts[i], b = pts[j];
        auto& word = collinear_bits_[a * words + b / 64];
        const std::uint64_t mask = std::uint64_t{1} << (b % 64);
        if (word & mask) {
          throw std::invalid_argument("points " + std::to_string(a) + " and " + std::to_string(b) +
                                      " lie on more than one line");
        }
        word |= mask;
        collinear_bits_[b * words + a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
  }
}

bool IncidenceStructure::incident(int p, int l) const {
  const auto& pts = lines_.at(l);
  return std::binary_search(pts.begin(), pts.end(), p);
}

bool IncidenceStructure::collinear(int a, int b) const {
  if (a == b) return false;
  const std::size_t words = bit_words(n_points_);
  return (collinear_bits_[a * words + b / 64] >> (b % 64)) & 1;
}

std::optional<int> IncidenceStructure::joining_line(int a, int b) const {
  if (a == b) return std::nullopt;
  for (int l : point_lines_.at(a))
    if (incident(b, l)) return l;
  return std::nullopt;
}

std::optional<int> IncidenceStructure::find_line(std::vector<int> pts) const {
  std::sort(pts.begin(), pts.end());
  if (pts.size() < 2) return std::nullopt;
  const auto l = joining_line(pts[0], pts[1]);
  if (l && lines_[*l] == pts) return l;
  return std::nullopt;
}

long long IncidenceStructure::n_flags() const {
  long long total = 0;
  for (const auto& l : lines_) total += static_cast<long long>(l.size());
  return total;
}

GqParameters GqParameters::from_order(long long s, long long t) {
  GqParameters p;
  p.s = s;
  p.t = t;
  p.n_points = (s + 1) * (s * t + 1);
  p.n_lines = (t + 1) * (s * t + 1);
  p.n_flags = (s + 1) * (t + 1) * (s * t + 1);
  return p;
}

GqVerification verify_gq_axiom(const IncidenceStructure& inc) {
  GqVerification out;
  auto fail = [&](GqViolation v) {
    out.violation = std::move(v);
    return out;
  };
  if (inc.n_points() == 0 || inc.n_lines() == 0) {
    return fail({GqViolation::Kind::empty, -1, -1, -1, "structure has no points or no lines"});
  }
  const int line_size = static_cast<int>(inc.line(0).size());
  for (int l = 0; l < inc.n_lines(); ++l) {
    if (static_cast<int>(inc.line(l).size()) != line_size) {
      return fail({GqViolation::Kind::line_size, -1, l, -1,
                   "line " + std::to_string(l) + " has " + std::to_string(inc.line(l).size()) + " points, line 0 has " +
                       std::to_string(line_size)});
    }
  }
  const int degree = static_cast<int>(inc.lines_through(0).size());
  for (int p = 0; p < inc.n_points(); ++p) {
    if (static_cast<int>(inc.lines_through(p).size()) != degree) {
      return fail({GqViolation::Kind::point_degree, p, -1, -1,
                   "point " + std::to_string(p) + " is on " + std::to_string(inc.lines_through(p).size()) +
                       " lines, point 0 is on " + std::to_string(degree)});
    }
  }
  if (degree == 0) return fail({GqViolation::Kind::point_degree, 0, -1, -1, "points lie on no lines"});

  for (int p = 0; p < inc.n_points(); ++p) {
    for (int l = 0; l < inc.n_lines(); ++l) {
      if (inc.incident(p, l)) continue;
      int count = 0;
      for (int x : inc.line(l))
        if (inc.collinear(p, x)) ++count;
      if (count != 1) {
        return fail({GqViolation::Kind::axiom, p, l, count,
                     "point " + std::to_string(p) + " is collinear with " + std::to_string(count) +
                         " points of line " + std::to_string(l)});
      }
    }
  }
  out.params = GqParameters::from_order(line_size - 1, degree - 1);
  return out;
}

std::vector<int> perp(const IncidenceStructure& inc, std::span<const int> pts) {
  if (pts.empty()) throw std::invalid_argument("perp of an empty set is undefined");
  for (int p : pts)
    if (p < 0 || p >= inc.n_points()) throw std::invalid_argument("point index out of range");
  std::vector<int> out;
  for (int x = 0; x < inc.n_points(); ++x) {
    bool all = true;
    for (int p : pts) {
      if (x != p && !inc.collinear(x, p)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(x);
  }
  return out;
}

Graph incidence_graph(const IncidenceStructure& inc) {
  Graph g(inc.n_points() + inc.n_lines());
  for (int l = 0; l < inc.n_lines(); ++l) {
    const int lv = inc.n_points() + l;
    for (int p : inc.line(l)) {
      g.adj[p].push_back(lv);
      g.adj[lv].push_back(p);
    }
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

CertifiedIncidenceGraph certify_incidence_graph(const IncidenceStructure& inc) {
  CertifiedIncidenceGraph out{incidence_graph(inc), {}};
  out.metrics = graph_metrics(out.graph);
  if (out.metrics.diameter != 4 || out.metrics.girth != 8) {
    throw structural_error("incidence graph has diameter " + std::to_string(out.metrics.diameter) + " and girth " +
                           std::to_string(out.metrics.girth) + ", expected 4 and 8");
  }
  return out;
}

std::string to_string(BlockClass c) {
  switch (c) {
    case BlockClass::trivial: return "trivial";
    case BlockClass::st_plus_1: return "st_plus_1";
    case BlockClass::s_plus_1: return "s_plus_1";
    case BlockClass::invalid: return "invalid";
  }
  return "invalid";
}

std::vector<BlockReport> check_point_partition(const IncidenceStructure& inc,
                                               const std::vector<std::vector<int>>& blocks) {
  std::vector<int> owner(inc.n_points(), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) throw std::invalid_argument("block " + std::to_string(i) + " is empty");
    for (int p : blocks[i]) {
      if (p < 0 || p >= inc.n_points()) throw std::invalid_argument("point index out of range");
      if (owner[p] >= 0) throw std::invalid_argument("point " + std::to_string(p) + " lies in two blocks");
      owner[p] = static_cast<int>(i);
    }
  }
  for (int p = 0; p < inc.n_points(); ++p)
    if (owner[p] < 0) throw std::invalid_argument("point " + std::to_string(p) + " is in no block");
  const auto verdict = verify_gq_axiom(inc);
  if (!verdict.ok()) throw std::invalid_argument("not a generalized quadrangle: " + verdict.violation->message);
  const long long s = verdict.params->s;
  const long long t = verdict.params->t;

  std::vector<BlockReport> reports;
  reports.reserve(blocks.size());
  for (const auto& block : blocks) {
    BlockReport r;
    r.block_size = static_cast<int>(block.size());
    if (block.size() == 1) {
      r.b = 0;
      r.classification = BlockClass::trivial;
      r.reason = "singleton block";
      reports.push_back(std::move(r));
      continue;
    }
    bool clash = false;
    for (std::size_t i = 0; i < block.size() && !clash; ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (inc.collinear(block[i], block[j])) {
          r.witness = std::make_pair(block[i], block[j]);
          r.reason = "block contains collinear points";
          clash = true;
          break;
        }
      }
    }
    if (clash) {
      reports.push_back(std::move(r));
      continue;
    }
    // Uniformity of b is checked from every member of the block.
    int b = -1;
    bool uniform = true;
    for (int base : block) {
      const int one[] = {base};
      for (int x : perp(inc, one)) {
        if (x == base) continue;
        int count = 0;
        for (int y : block)
          if (y != base && inc.collinear(x, y)) ++count;
        if (b < 0) b = count;
        if (count != b) {
          uniform = false;
          r.witness = std::make_pair(base, x);
          break;
        }
      }
      if (!uniform) break;
    }
    if (!uniform) {
      r.reason = "collinear counts are not uniform";
      reports.push_back(std::move(r));
      continue;
    }
    r.b = b;
    if (static_cast<long long>(block.size()) != b * s + 1) {
      r.reason = "block size differs from b*s + 1";
    } else if (b == t) {
      r.classification = BlockClass::st_plus_1;
    } else if (b == 1 && s % t == 0) {
      r.classification = BlockClass::s_plus_1;
    } else if (b == 1) {
      r.reason = "block size s + 1 requires t to divide s";
    } else {
      r.reason = "block size is neither st + 1 nor s + 1";
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

SetCheck check_ovoid(const IncidenceStructure& inc, const std::vector<int>& pts) {
  const auto verdict = verify_gq_axiom(inc);
  if (!verdict.ok()) return {false, "not a generalized quadrangle", {}};
  const long long want = verdict.params->s * verdict.params->t + 1;
  std::vector<int> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {false, "repeated point", {}};
  for (int p : sorted)
    if (p < 0 || p >= inc.n_points()) return {false, "point index out of range", {p}};
  if (static_cast<long long>(sorted.size()) != want)
    return {false, "size " + std::to_string(sorted.size()) + " differs from st+1 = " + std::to_string(want), {}};
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (inc.collinear(sorted[i], sorted[j])) return {false, "collinear points", {sorted[i], sorted[j]}};
  return {true, "ovoid", {}};
}

SetCheck check_spread(const IncidenceStructure& inc, const std::vector<int>& lines) {
  const auto verdict = verify_gq_axiom(inc);
  if (!verdict.ok()) return {false, "not a generalized quadrangle", {}};
  const long long want = verdict.params->s * verdict.params->t + 1;
  std::vector<int> cover(inc.n_points(), -1);
  for (int l : lines) {
    if (l < 0 || l >= inc.n_lines()) return {false, "line index out of range", {l}};
    for (int p : inc.line(l)) {
      if (cover[p] >= 0) return {false, "lines meet", {cover[p], l}};
      cover[p] = l;
    }
  }
  for (int p = 0; p < inc.n_points(); ++p)
    if (cover[p] < 0) return {false, "point " + std::to_string(p) + " is not covered", {p}};
  if (static_cast<long long>(lines.size()) != want)
    return {false, "size " + std::to_string(lines.size()) + " differs from st+1 = " + std::to_string(want), {}};
  return {true, "spread", {}};
}

SetCheck detect_ovoid_spread(const IncidenceStructure& inc, SetKind kind, const std::vector<int>& members) {
  return kind == SetKind::points ? check_ovoid(inc, members) : check_spread(inc, members);
}

namespace {

struct OvoidSearcher {
  const IncidenceStructure& inc;
  long long budget;
  OvoidSearch result;
  std::vector<int> chosen;
  std::vector<int> met;  // per line: number of chosen points on it

  void run() {
    if (++result.nodes > budget) return;
    result.largest_partial = std::max(result.largest_partial, static_cast<int>(chosen.size()));
    int target = -1;
    for (int l = 0; l < inc.n_lines(); ++l) {
      if (met[l] == 0) {
        target = l;
        break;
      }
    }
    if (target < 0) {
      result.ovoid = chosen;
      return;
    }
    for (int p : inc.line(target)) {
      bool free = true;
      for (int l : inc.lines_through(p)) {
        if (met[l] != 0) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      chosen.push_back(p);
      for (int l : inc.lines_through(p)) ++met[l];
      run();
      for (int l : inc.lines_through(p)) --met[l];
      chosen.pop_back();
      if (result.ovoid || result.nodes > budget) return;
    }
  }
};

}  // namespace

OvoidSearch find_ovoid(const IncidenceStructure& inc, long long node_budget) {
  OvoidSearcher searcher{inc, node_budget, {}, {}, std::vector<int>(inc.n_lines(), 0)};
  searcher.run();
  searcher.result.exhausted = searcher.result.ovoid.has_value() || searcher.result.nodes <= node_budget;
  if (searcher.result.ovoid) std::sort(searcher.result.ovoid->begin(), searcher.result.ovoid->end());
  return searcher.result;
}

IncidenceStructure dualize(const IncidenceStructure& inc) {
  std::vector<std::vector<int>> lines(inc.n_points());
  for (int p = 0; p < inc.n_points(); ++p) lines[p] = inc.lines_through(p);
  return IncidenceStructure(inc.n_lines(), std::move(lines));
}

void write_gqi(std::ostream& out, const IncidenceStructure& inc) {
  out << "gqi 1 " << inc.n_points() << ' ' << inc.n_lines() << '\n';
  for (const auto& l : inc.lines()) {
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (i) out << ' ';
      out << l[i];
    }
    out << '\n';
  }
}

std::string to_gqi(const IncidenceStructure& inc) {
  std::ostringstream out;
  write_gqi(out, inc);
  return out.str();
}

IncidenceStructure read_gqi(std::istream& in) {
  std::string text;
  int line_no = 0;
  if (!std::getline(in, text)) throw gqi_parse_error("missing header", 1);
  ++line_no;
  std::istringstream header(text);
  std::string magic;
  int version = 0;
  long long n_points = -1, n_lines = -1;
  if (!(header >> magic >> version >> n_points >> n_lines) || magic != "gqi")
    throw gqi_parse_error("expected 'gqi 1 <n_points> <n_lines>'", line_no);
  if (version != 1) throw gqi_parse_error("unsupported version " + std::to_string(version), line_no);
  if (std::string extra; header >> extra) throw gqi_parse_error("trailing tokens in header", line_no);
  if (n_points < 0 || n_lines < 0 || n_points > 100'000'000) throw gqi_parse_error("bad counts", line_no);

  std::vector<std::vector<int>> lines;
  lines.reserve(static_cast<std::size_t>(n_lines));
  while (static_cast<long long>(lines.size()) < n_lines) {
    if (!std::getline(in, text)) throw gqi_parse_error("expected " + std::to_string(n_lines) + " lines", line_no + 1);
    ++line_no;
    std::istringstream row(text);
    std::vector<int> pts;
    long long v;
    while (row >> v) {
      if (v < 0 || v >= n_points) throw gqi_parse_error("point index out of range", line_no);
      if (!pts.empty() && v <= pts.back()) throw gqi_parse_error("point indices must be strictly ascending", line_no);
      pts.push_back(static_cast<int>(v));
    }
    if (!row.eof()) throw gqi_parse_error("non-integer token", line_no);
    lines.push_back(std::move(pts));
  }
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") != std::string::npos) throw gqi_parse_error("unexpected trailing data", line_no);
  }
  try {
    return IncidenceStructure(static_cast<int>(n_points), std::move(lines));
  } catch (const std::invalid_argument& e) {
    throw gqi_parse_error(e.what(), line_no);
  }
}

IncidenceStructure parse_gqi(const std::string& text) {
  std::istringstream in(text);
  return read_gqi(in);
}

}  // namespace gqkit
