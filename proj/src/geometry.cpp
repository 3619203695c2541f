#include "gqkit/geometry.hpp"

#include <algorithm>

namespace gqkit {

namespace {

using Vec = std::vector<FieldElement>;

long long int_pow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Vec decode_vector(long long code, int q, int len) {
  Vec v(len);
  for (int i = len - 1; i >= 0; --i) {
    v[i] = FieldElement(static_cast<std::uint16_t>(code % q));
    code /= q;
  }
  return v;
}

FieldElement det3(const Field& F, const Vec& a, const Vec& b, const Vec& c) {
  auto m = [&](FieldElement x, FieldElement y) { return F.mul(x, y); };
  FieldElement d = F.mul(a[0], F.sub(m(b[1], c[2]), m(b[2], c[1])));
  d = F.sub(d, F.mul(a[1], F.sub(m(b[0], c[2]), m(b[2], c[0]))));
  d = F.add(d, F.mul(a[2], F.sub(m(b[0], c[1]), m(b[1], c[0]))));
  return d;
}

}  // namespace

ProjectivePoint normalize_point(const Field& field, std::vector<FieldElement> v) {
  const auto it = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x.code != 0; });
  if (it == v.end()) throw geometry_error("zero vector has no projective point");
  const FieldElement scale = field.inv(*it);
  for (auto& x : v) x = field.mul(x, scale);
  return ProjectivePoint{std::move(v)};
}

std::vector<ProjectivePoint> proj_points(const Field& field, int n) {
  if (n < 1) throw geometry_error("projective dimension must be at least 1");
  const int q = field.q();
  const long long total = int_pow(q, n + 1);
  if (total > 50'000'000) throw geometry_error("projective space too large");
  std::vector<ProjectivePoint> out;
  out.reserve(static_cast<std::size_t>((total - 1) / (q - 1)));
  for (long long code = 1; code < total; ++code) {
    Vec v = decode_vector(code, q, n + 1);
    const auto it = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x.code != 0; });
    if (*it == field.one()) out.push_back(ProjectivePoint{std::move(v)});
  }
  return out;
}

std::vector<ProjectivePoint> proj_points(int n, int q) {
  try {
    return proj_points(make_standard_field(q), n);
  } catch (const field_error& e) {
    throw geometry_error(std::string("unsupported field: ") + e.what());
  }
}

PointIndex::PointIndex(const Field& field, int dimension)
    : q_(field.q()), dimension_(dimension), table_(static_cast<std::size_t>(int_pow(field.q(), dimension + 1)), -1) {}

std::size_t PointIndex::key(const std::vector<FieldElement>& normalized) const {
  std::size_t k = 0;
  for (auto x : normalized) k = k * q_ + x.code;
  return k;
}

void PointIndex::assign(const ProjectivePoint& pt, int index) { table_.at(key(pt.coords)) = index; }

int PointIndex::find(const Field& field, const std::vector<FieldElement>& v) const {
  if (static_cast<int>(v.size()) != dimension_ + 1) return -1;
  const auto it = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x.code != 0; });
  if (it == v.end()) return -1;
  return table_[key(normalize_point(field, v).coords)];
}

std::string to_string(FormKind kind) {
  switch (kind) {
    case FormKind::symplectic: return "symplectic";
    case FormKind::quadratic_parabolic: return "quadratic-parabolic";
    case FormKind::quadratic_elliptic: return "quadratic-elliptic";
    case FormKind::hermitian: return "hermitian";
  }
  return "unknown";
}

namespace {

bool is_quadratic(FormKind k) { return k == FormKind::quadratic_parabolic || k == FormKind::quadratic_elliptic; }

}  // namespace

FieldElement form_value(const Field& F, const FormSpec& form, const std::vector<FieldElement>& x) {
  if (!is_quadratic(form.kind)) return form_bilinear(F, form, x, x);
  FieldElement acc = F.zero();
  for (int i = 0; i < form.dimension; ++i) {
    if (x[i].code == 0) continue;
    for (int j = i; j < form.dimension; ++j) {
      const FieldElement g = form.gram[i][j];
      if (g.code == 0 || x[j].code == 0) continue;
      acc = F.add(acc, F.mul(g, F.mul(x[i], x[j])));
    }
  }
  return acc;
}

FieldElement form_bilinear(const Field& F, const FormSpec& form, const std::vector<FieldElement>& x,
                           const std::vector<FieldElement>& y) {
  if (is_quadratic(form.kind)) {
    Vec sum(form.dimension);
    for (int i = 0; i < form.dimension; ++i) sum[i] = F.add(x[i], y[i]);
    return F.sub(F.sub(form_value(F, form, sum), form_value(F, form, x)), form_value(F, form, y));
  }
  const bool herm = form.kind == FormKind::hermitian;
  FieldElement acc = F.zero();
  for (int j = 0; j < form.dimension; ++j) {
    if (y[j].code == 0) continue;
    FieldElement col = F.zero();
    for (int i = 0; i < form.dimension; ++i) {
      if (x[i].code == 0 || form.gram[i][j].code == 0) continue;
      col = F.add(col, F.mul(x[i], form.gram[i][j]));
    }
    acc = F.add(acc, F.mul(col, herm ? F.frobenius(y[j], form.conj_power) : y[j]));
  }
  return acc;
}

bool form_isotropic(const Field& F, const FormSpec& form, const std::vector<FieldElement>& x) {
  if (form.kind == FormKind::symplectic) return true;
  return form_value(F, form, x).code == 0;
}

void validate_form(const Field& F, const FormSpec& form) {
  const int n = form.dimension;
  if (n < 2 || static_cast<int>(form.gram.size()) != n) throw geometry_error("Gram matrix has the wrong size");
  for (const auto& row : form.gram)
    if (static_cast<int>(row.size()) != n) throw geometry_error("Gram matrix has the wrong size");
  if (form.kind == FormKind::symplectic) {
    for (int i = 0; i < n; ++i) {
      if (form.gram[i][i].code != 0) throw geometry_error("symplectic Gram matrix has a nonzero diagonal entry");
      for (int j = 0; j < n; ++j)
        if (form.gram[i][j] != F.neg(form.gram[j][i])) throw geometry_error("symplectic Gram matrix is not antisymmetric");
    }
  } else if (form.kind == FormKind::hermitian) {
    if (F.f() % 2 != 0 || form.conj_power * 2 != F.f()) throw geometry_error("hermitian form needs a field GF(q^2)");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (form.gram[i][j] != F.frobenius(form.gram[j][i], form.conj_power))
          throw geometry_error("hermitian Gram matrix differs from its conjugate transpose");
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (form.gram[i][j].code != 0) throw geometry_error("quadratic form coefficients must be upper triangular");
  }

  // Radical of the (polar) form, exhaustively.
  const int q = F.q();
  const long long total = int_pow(q, n);
  std::vector<Vec> basis(n, Vec(n, F.zero()));
  for (int i = 0; i < n; ++i) basis[i][i] = F.one();
  for (long long code = 1; code < total; ++code) {
    const Vec v = decode_vector(code, q, n);
    bool radical = true;
    for (int j = 0; j < n && radical; ++j)
      if (form_bilinear(F, form, v, basis[j]).code != 0) radical = false;
    if (!radical) continue;
    if (is_quadratic(form.kind) && form_value(F, form, v).code != 0) continue;
    throw geometry_error("form is degenerate");
  }
}

std::string to_string(GqFamily family) {
  switch (family) {
    case GqFamily::W3: return "W3";
    case GqFamily::Q4: return "Q4";
    case GqFamily::Q5minus: return "Q5minus";
    case GqFamily::H3: return "H3";
    case GqFamily::H4: return "H4";
  }
  return "unknown";
}

std::optional<GqFamily> parse_gq_family(const std::string& name) {
  for (auto f : {GqFamily::W3, GqFamily::Q4, GqFamily::Q5minus, GqFamily::H3, GqFamily::H4})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

std::pair<long long, long long> classical_order(GqFamily family, long long q) {
  switch (family) {
    case GqFamily::W3:
    case GqFamily::Q4: return {q, q};
    case GqFamily::Q5minus: return {q, q * q};
    case GqFamily::H3: return {q * q, q};
    case GqFamily::H4: return {q * q, q * q * q};
  }
  return {0, 0};
}

namespace {

int family_dimension(GqFamily family) {
  switch (family) {
    case GqFamily::W3:
    case GqFamily::H3: return 4;
    case GqFamily::Q4:
    case GqFamily::H4: return 5;
    case GqFamily::Q5minus: return 6;
  }
  return 0;
}

// Lexicographically least (c, d) with X^2 + cX + d irreducible over F.
std::pair<FieldElement, FieldElement> irreducible_binary_quadratic(const Field& F) {
  for (auto c : F.elements()) {
    for (auto d : F.elements()) {
      bool has_root = false;
      for (auto x : F.elements()) {
        if (F.add(F.add(F.mul(x, x), F.mul(c, x)), d).code == 0) {
          has_root = true;
          break;
        }
      }
      if (!has_root) return {c, d};
    }
  }
  throw geometry_error("no irreducible quadratic found");
}

}  // namespace

FormSpec standard_form(GqFamily family, const Field& F, int q) {
  FormSpec form;
  form.dimension = family_dimension(family);
  const int n = form.dimension;
  form.gram.assign(n, Vec(n, F.zero()));
  switch (family) {
    case GqFamily::W3:
      form.kind = FormKind::symplectic;
      form.gram[0][3] = F.one();
      form.gram[3][0] = F.neg(F.one());
      form.gram[1][2] = F.one();
      form.gram[2][1] = F.neg(F.one());
      break;
    case GqFamily::Q4:
      form.kind = FormKind::quadratic_parabolic;
      form.gram[0][4] = F.one();
      form.gram[1][3] = F.one();
      form.gram[2][2] = F.one();
      break;
    case GqFamily::Q5minus: {
      form.kind = FormKind::quadratic_elliptic;
      const auto [c, d] = irreducible_binary_quadratic(F);
      form.gram[0][5] = F.one();
      form.gram[1][4] = F.one();
      form.gram[2][2] = F.one();
      form.gram[2][3] = c;
      form.gram[3][3] = d;
      break;
    }
    case GqFamily::H3:
    case GqFamily::H4: {
      form.kind = FormKind::hermitian;
      const auto [p, e] = prime_power_decompose(q);
      if (p == 0 || F.p() != p || F.f() != 2 * e) throw geometry_error("hermitian family needs the field GF(q^2)");
      form.conj_power = e;
      for (int i = 0; i < n; ++i) form.gram[i][n - 1 - i] = F.one();
      break;
    }
  }
  return form;
}

ClassicalGq build_classical_gq_model(GqFamily family, int q) {
  if (!is_prime_power(q)) throw geometry_error(std::to_string(q) + " is not a prime power");
  const bool hermitian = family == GqFamily::H3 || family == GqFamily::H4;
  const long long field_order = hermitian ? static_cast<long long>(q) * q : q;
  std::shared_ptr<const Field> field;
  try {
    if (field_order > kMaxFieldOrder) throw field_error("field order " + std::to_string(field_order) + " too large");
    field = std::make_shared<const Field>(make_standard_field(static_cast<int>(field_order)));
  } catch (const field_error& e) {
    throw geometry_error(std::string("unsupported field for ") + to_string(family) + ": " + e.what());
  }
  const Field& F = *field;
  FormSpec form = standard_form(family, F, q);
  validate_form(F, form);

  const int n = form.dimension - 1;
  std::vector<ProjectivePoint> points;
  for (auto& pt : proj_points(F, n))
    if (form_isotropic(F, form, pt.coords)) points.push_back(std::move(pt));

  PointIndex index(F, n);
  for (int i = 0; i < static_cast<int>(points.size()); ++i) index.assign(points[i], i);

  std::vector<std::vector<int>> lines;
  const int np = static_cast<int>(points.size());
  std::vector<char> covered(np);
  Vec v(form.dimension);
  for (int i = 0; i < np; ++i) {
    std::fill(covered.begin(), covered.end(), 0);
    const Vec& x = points[i].coords;
    for (int j = i + 1; j < np; ++j) {
      if (covered[j]) continue;
      const Vec& y = points[j].coords;
      if (form_bilinear(F, form, x, y).code != 0) continue;
      std::vector<int> line{i, j};
      for (auto a : F.elements()) {
        if (a.code == 0) continue;
        for (int k = 0; k < form.dimension; ++k) v[k] = F.add(y[k], F.mul(a, x[k]));
        const int idx = index.find(F, v);
        if (idx < 0) throw geometry_error("line through isotropic points leaves the quadric");
        line.push_back(idx);
      }
      std::sort(line.begin(), line.end());
      for (int p : line) covered[p] = 1;
      if (line[0] == i && line[1] == j) lines.push_back(std::move(line));
    }
  }
  std::sort(lines.begin(), lines.end());

  ClassicalGq out;
  out.family = family;
  out.q = q;
  out.field = field;
  out.form = std::move(form);
  out.points = std::move(points);
  out.inc = IncidenceStructure(np, std::move(lines));
  return out;
}

IncidenceStructure build_classical_gq(GqFamily family, int q) { return build_classical_gq_model(family, q).inc; }

bool no_three_collinear(const Field& F, const std::vector<ProjectivePoint>& pts) {
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c)
        if (det3(F, pts[a].coords, pts[b].coords, pts[c].coords).code == 0) return false;
  return true;
}

Gq35Model build_gq35_model() {
  Gq35Model m;
  m.field = std::make_shared<const Field>(make_standard_field(4));
  const Field& F = *m.field;
  for (auto t : F.elements()) m.hyperoval.push_back(ProjectivePoint{{F.one(), t, F.mul(t, t)}});
  m.hyperoval.push_back(ProjectivePoint{{F.zero(), F.zero(), F.one()}});
  m.hyperoval.push_back(ProjectivePoint{{F.zero(), F.one(), F.zero()}});

  for (auto x : F.elements())
    for (auto y : F.elements())
      for (auto z : F.elements()) m.affine.push_back({x, y, z});
  auto index_of = [&](const Vec& a) { return (a[0].code * 4 + a[1].code) * 4 + a[2].code; };

  std::vector<std::vector<int>> lines;
  for (int i = 0; i < 64; ++i) {
    for (const auto& d : m.hyperoval) {
      std::vector<int> line;
      for (auto lambda : F.elements()) {
        Vec pt(3);
        for (int k = 0; k < 3; ++k) pt[k] = F.add(m.affine[i][k], F.mul(lambda, d.coords[k]));
        line.push_back(index_of(pt));
      }
      std::sort(line.begin(), line.end());
      if (line[0] == i) lines.push_back(std::move(line));
    }
  }
  std::sort(lines.begin(), lines.end());
  m.inc = IncidenceStructure(64, std::move(lines));
  return m;
}

IncidenceStructure build_gq35() { return build_gq35_model().inc; }

}  // namespace gqkit
