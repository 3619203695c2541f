#include "gqkit/permgroup.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace gqkit {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(n, 0);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[x]) throw std::invalid_argument("image sequence is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id), unchecked{});
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[x] = rhs.images_[images_[x]];
  return Permutation(std::move(out), unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[images_[x]] = static_cast<int>(x);
  return Permutation(std::move(out), unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

int Permutation::smallest_moved_point() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return static_cast<int>(x);
  return -1;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == static_cast<int>(x)) continue;
    out << '(';
    int y = static_cast<int>(x);
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) out << ',';
      first = false;
      out << y;
      y = images_[y];
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::vector<int> StabChain::base() const {
  std::vector<int> b;
  for (const auto& l : levels) b.push_back(l.base_point);
  return b;
}

std::vector<std::size_t> StabChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.orbit.size());
  return out;
}

BigInt StabChain::order() const {
  BigInt r = 1;
  for (const auto& l : levels) r *= static_cast<unsigned long long>(l.orbit.size());
  return r;
}

Permutation StabChain::sift(const Permutation& g) const {
  Permutation h = g;
  for (const auto& l : levels) {
    const int img = h(l.base_point);
    const int idx = l.transversal_index[img];
    if (idx < 0) return h;
    h = h * l.transversal[idx].inverse();
  }
  return h;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.size() != domain_size) return false;
  return sift(g).is_identity();
}

PermGroup::PermGroup(int domain_size, std::vector<Permutation> generators)
    : domain_size_(domain_size), generators_(std::move(generators)) {
  if (domain_size < 0) throw std::invalid_argument("negative domain size");
  for (const auto& g : generators_)
    if (g.size() != domain_size) throw std::invalid_argument("generator degree differs from domain size");
}

const StabChain& PermGroup::chain() const {
  if (!chain_) chain_ = std::make_shared<const StabChain>(schreier_sims(*this));
  return *chain_;
}

namespace {

void rebuild_level(StabChain::Level& level, int n) {
  level.orbit.clear();
  level.transversal.clear();
  level.transversal_index.assign(n, -1);
  level.orbit.push_back(level.base_point);
  level.transversal.push_back(Permutation::identity(n));
  level.transversal_index[level.base_point] = 0;
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const int x = level.orbit[head];
    for (const auto& s : level.generators) {
      const int y = s(x);
      if (level.transversal_index[y] >= 0) continue;
      level.transversal_index[y] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(level.transversal[level.transversal_index[x]] * s);
    }
  }
}

bool fixes_all(const Permutation& g, const std::vector<int>& points, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (g(points[i]) != points[i]) return false;
  return true;
}

}  // namespace

StabChain schreier_sims(const PermGroup& g, const std::vector<int>& base_prefix) {
  const int n = g.domain_size();
  StabChain chain;
  chain.domain_size = n;
  std::vector<int> base;
  for (int b : base_prefix) {
    if (b < 0 || b >= n) throw std::invalid_argument("base point out of range");
    if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
  }

  std::vector<Permutation> strong;
  for (const auto& s : g.generators()) {
    if (s.is_identity()) continue;
    if (std::find(strong.begin(), strong.end(), s) != strong.end()) continue;
    strong.push_back(s);
    if (fixes_all(s, base, base.size())) base.push_back(s.smallest_moved_point());
  }

  // Strong generators assigned to the deepest level whose prefix they fix.
  auto level_generators = [&](std::size_t i) {
    std::vector<Permutation> out;
    for (const auto& s : strong)
      if (fixes_all(s, base, i)) out.push_back(s);
    return out;
  };

  chain.levels.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    chain.levels[i].base_point = base[i];
    chain.levels[i].generators = level_generators(i);
    rebuild_level(chain.levels[i], n);
  }

  int i = static_cast<int>(base.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    auto& level = chain.levels[i];
    for (std::size_t oi = 0; oi < level.orbit.size() && !restarted; ++oi) {
      const int beta = level.orbit[oi];
      for (std::size_t gi = 0; gi < level.generators.size(); ++gi) {
        const Permutation& x = level.generators[gi];
        const Permutation& u_beta = level.transversal[level.transversal_index[beta]];
        const Permutation& u_img = level.transversal[level.transversal_index[x(beta)]];
        Permutation h = u_beta * x * u_img.inverse();
        if (h.is_identity()) continue;
        // Sift through the levels below i.
        std::size_t j = static_cast<std::size_t>(i) + 1;
        for (; j < chain.levels.size(); ++j) {
          const auto& lj = chain.levels[j];
          const int idx = lj.transversal_index[h(lj.base_point)];
          if (idx < 0) break;
          h = h * lj.transversal[idx].inverse();
        }
        if (j == chain.levels.size() && h.is_identity()) continue;
        strong.push_back(h);
        if (j == chain.levels.size()) {
          base.push_back(h.smallest_moved_point());
          chain.levels.emplace_back();
          chain.levels.back().base_point = base.back();
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          chain.levels[l].generators = level_generators(l);
          rebuild_level(chain.levels[l], n);
        }
        i = static_cast<int>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  return chain;
}

std::vector<int> orbit(const PermGroup& g, int x) {
  if (x < 0 || x >= g.domain_size()) throw std::invalid_argument("point out of range");
  std::vector<char> seen(g.domain_size(), 0);
  std::vector<int> out{x};
  seen[x] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : g.generators()) {
      const int y = s(out[head]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  std::vector<char> seen(g.domain_size(), 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < g.domain_size(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(g, x);
    for (int y : o) seen[y] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<std::vector<int>> orbit_on_tuples(const PermGroup& g, const std::vector<int>& tuple) {
  for (int x : tuple)
    if (x < 0 || x >= g.domain_size()) throw std::invalid_argument("tuple entry out of range");
  std::set<std::vector<int>> seen{tuple};
  std::vector<std::vector<int>> queue{tuple};
  std::vector<int> img(tuple.size());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : g.generators()) {
      for (std::size_t k = 0; k < tuple.size(); ++k) img[k] = s(queue[head][k]);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return {seen.begin(), seen.end()};
}

BigInt group_order(const PermGroup& g) { return g.order(); }

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points) {
  const StabChain chain = schreier_sims(g, points);
  std::vector<int> distinct;
  for (int p : points)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  std::vector<Permutation> gens;
  if (distinct.size() < chain.levels.size()) {
    gens = chain.levels[distinct.size()].generators;
  } else {
    // Every strong generator fixes the prefix only when the stabilizer is trivial.
    gens.clear();
  }
  return PermGroup(g.domain_size(), std::move(gens));
}

PermGroup stabilizer(const PermGroup& g, int x) {
  if (x < 0 || x >= g.domain_size()) throw std::invalid_argument("point out of range");
  return pointwise_stabilizer(g, {x});
}

void require_automorphisms(const Graph& graph, const PermGroup& g) {
  if (g.domain_size() != graph.n) throw std::invalid_argument("group domain differs from the vertex count");
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    const auto& s = g.generators()[i];
    for (int u = 0; u < graph.n; ++u) {
      for (int v : graph.adj[u]) {
        if (!graph.has_edge(s(u), s(v))) {
          throw std::invalid_argument("generator " + std::to_string(i) + " maps edge {" + std::to_string(u) + "," +
                                      std::to_string(v) + "} to a non-edge");
        }
      }
    }
  }
}

std::vector<std::vector<int>> s_arcs_from(const Graph& graph, int v, int s) {
  std::vector<std::vector<int>> arcs{{v}};
  for (int step = 0; step < s; ++step) {
    std::vector<std::vector<int>> next;
    for (const auto& a : arcs) {
      const int last = a.back();
      const int before = a.size() >= 2 ? a[a.size() - 2] : -1;
      for (int w : graph.adj[last]) {
        if (w == before) continue;
        auto b = a;
        b.push_back(w);
        next.push_back(std::move(b));
      }
    }
    arcs = std::move(next);
  }
  return arcs;
}

ArcOrbitReport local_arc_report(const Graph& graph, const PermGroup& g, int s) {
  if (s < 1) throw std::invalid_argument("arc length must be positive");
  require_automorphisms(graph, g);
  ArcOrbitReport r;
  r.s = s;
  r.transitive = true;
  for (const auto& orb : orbits(g)) {
    const int v = orb.front();
    r.representatives.push_back(v);
    const auto arcs = s_arcs_from(graph, v, s);
    r.arc_counts.push_back(static_cast<long long>(arcs.size()));
    if (arcs.empty()) {
      r.orbit_sizes.push_back(0);
      continue;
    }
    const PermGroup stab = stabilizer(g, v);
    const auto o = orbit_on_tuples(stab, arcs.front());
    r.orbit_sizes.push_back(static_cast<long long>(o.size()));
    if (o.size() != arcs.size()) r.transitive = false;
  }
  return r;
}

bool is_locally_s_arc_transitive(const Graph& graph, const PermGroup& g, int s) {
  return local_arc_report(graph, g, s).transitive;
}

LocalTwoTransitivityReport local_two_transitivity(const IncidenceStructure& gq, const PermGroup& g) {
  const Graph graph = incidence_graph(gq);
  require_automorphisms(graph, g);
  LocalTwoTransitivityReport r;
  const int np = gq.n_points();
  r.preserves_sides = true;
  for (const auto& s : g.generators())
    for (int x = 0; x < graph.n && r.preserves_sides; ++x)
      if ((x < np) != (s(x) < np)) r.preserves_sides = false;
  if (!r.preserves_sides) return r;

  auto check_side = [&](int v) {
    const PermGroup stab = stabilizer(g, v);
    const auto& nbrs = graph.adj[v];
    if (nbrs.size() < 2) return std::make_pair(false, stab.order());
    const auto o = orbit_on_tuples(stab, {nbrs[0], nbrs[1]});
    return std::make_pair(o.size() == nbrs.size() * (nbrs.size() - 1), stab.order());
  };
  r.points_ok = true;
  r.lines_ok = true;
  bool first_point = true, first_line = true;
  for (const auto& orb : orbits(g)) {
    const int v = orb.front();
    const auto [ok, order] = check_side(v);
    if (v < np) {
      r.point_representatives.push_back(v);
      r.points_ok = r.points_ok && ok;
      if (first_point) r.point_stabilizer_order = order;
      first_point = false;
    } else {
      r.line_representatives.push_back(v);
      r.lines_ok = r.lines_ok && ok;
      if (first_line) r.line_stabilizer_order = order;
      first_line = false;
    }
  }
  return r;
}

bool is_locally_2_transitive_gq(const IncidenceStructure& gq, const PermGroup& g) {
  return local_two_transitivity(gq, g).ok();
}

std::vector<FieldElement> apply_matrix(const Field& F, const std::vector<FieldElement>& x, const Matrix& m) {
  const std::size_t n = m.empty() ? 0 : m[0].size();
  std::vector<FieldElement> out(n, F.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].code == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] = F.add(out[j], F.mul(x[i], m[i][j]));
  }
  return out;
}

bool matrix_preserves_form(const Field& F, const FormSpec& form, const Matrix& m) {
  const int n = form.dimension;
  if (static_cast<int>(m.size()) != n) return false;
  std::vector<std::vector<FieldElement>> basis(n, std::vector<FieldElement>(n, F.zero()));
  for (int i = 0; i < n; ++i) basis[i][i] = F.one();
  std::vector<std::vector<FieldElement>> images;
  for (const auto& e : basis) images.push_back(apply_matrix(F, e, m));
  for (int i = 0; i < n; ++i) {
    if (form_value(F, form, images[i]) != form_value(F, form, basis[i])) return false;
    for (int j = 0; j < n; ++j)
      if (form_bilinear(F, form, images[i], images[j]) != form_bilinear(F, form, basis[i], basis[j])) return false;
  }
  return true;
}

std::vector<Matrix> transvection_generators(const ClassicalGq& gq) {
  const Field& F = *gq.field;
  const FormSpec& form = gq.form;
  const int n = form.dimension;
  std::vector<FieldElement> scalars;
  if (form.kind == FormKind::symplectic) {
    // Additive basis of GF(q) over GF(p): powers of the generator.
    FieldElement x = F.one();
    for (int k = 0; k < F.f(); ++k) {
      scalars.push_back(x);
      x = F.mul(x, F.generator());
    }
  } else if (form.kind == FormKind::hermitian) {
    // Nonzero trace-zero scalars: lambda^q = -lambda.
    for (auto a : F.elements())
      if (a.code != 0 && F.frobenius(a, form.conj_power) == F.neg(a)) scalars.push_back(a);
  } else {
    throw std::invalid_argument("transvection generators need a symplectic or hermitian form");
  }
  std::vector<std::vector<FieldElement>> basis(n, std::vector<FieldElement>(n, F.zero()));
  for (int i = 0; i < n; ++i) basis[i][i] = F.one();

  std::vector<Matrix> out;
  for (const auto& pt : gq.points) {
    const auto& v = pt.coords;
    for (auto lambda : scalars) {
      Matrix m(n, std::vector<FieldElement>(n, F.zero()));
      for (int i = 0; i < n; ++i) {
        const FieldElement c = F.mul(lambda, form_bilinear(F, form, basis[i], v));
        for (int j = 0; j < n; ++j) m[i][j] = F.add(basis[i][j], F.mul(c, v[j]));
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

Permutation induced_permutation(const ClassicalGq& gq, const Matrix& m) {
  const Field& F = *gq.field;
  if (!matrix_preserves_form(F, gq.form, m)) throw std::invalid_argument("matrix does not preserve the form");
  const int np = gq.inc.n_points();
  const int nl = gq.inc.n_lines();
  PointIndex index(F, gq.form.dimension - 1);
  for (int i = 0; i < np; ++i) index.assign(gq.points[i], i);
  std::vector<int> images(np + nl);
  for (int i = 0; i < np; ++i) {
    const int j = index.find(F, apply_matrix(F, gq.points[i].coords, m));
    if (j < 0) throw std::invalid_argument("matrix maps a point off the quadrangle");
    images[i] = j;
  }
  for (int l = 0; l < nl; ++l) {
    std::vector<int> pts;
    for (int p : gq.inc.line(l)) pts.push_back(images[p]);
    const auto target = gq.inc.find_line(pts);
    if (!target) throw std::invalid_argument("matrix maps a line to a non-line");
    images[np + l] = np + *target;
  }
  return Permutation(std::move(images));
}

PermGroup classical_group_action(const ClassicalGq& gq) {
  std::vector<Permutation> gens;
  for (const auto& m : transvection_generators(gq)) {
    Permutation p = induced_permutation(gq, m);
    if (!p.is_identity() && std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
  }
  return PermGroup(gq.inc.n_points() + gq.inc.n_lines(), std::move(gens));
}

void write_prm(std::ostream& out, const PermGroup& g) {
  out << "prm 1 " << g.domain_size() << ' ' << g.generators().size() << '\n';
  for (const auto& s : g.generators()) {
    for (int x = 0; x < s.size(); ++x) {
      if (x) out << ' ';
      out << s(x);
    }
    out << '\n';
  }
}

std::string to_prm(const PermGroup& g) {
  std::ostringstream out;
  write_prm(out, g);
  return out.str();
}

PermGroup read_prm(std::istream& in) {
  std::string text;
  if (!std::getline(in, text)) throw std::invalid_argument("prm: missing header");
  std::istringstream header(text);
  std::string magic;
  int version = 0;
  long long n = -1, count = -1;
  if (!(header >> magic >> version >> n >> count) || magic != "prm" || version != 1 || n < 0 || count < 0)
    throw std::invalid_argument("prm: expected 'prm 1 <domain_size> <n_gens>'");
  std::vector<Permutation> gens;
  for (long long i = 0; i < count; ++i) {
    if (!std::getline(in, text)) throw std::invalid_argument("prm: expected " + std::to_string(count) + " generators");
    std::istringstream row(text);
    std::vector<int> images;
    long long v;
    while (row >> v) images.push_back(static_cast<int>(v));
    if (!row.eof()) throw std::invalid_argument("prm: non-integer token in generator " + std::to_string(i));
    if (static_cast<long long>(images.size()) != n)
      throw std::invalid_argument("prm: generator " + std::to_string(i) + " has the wrong length");
    gens.emplace_back(std::move(images));
  }
  return PermGroup(static_cast<int>(n), std::move(gens));
}

PermGroup parse_prm(const std::string& text) {
  std::istringstream in(text);
  return read_prm(in);
}

}  // namespace gqkit
