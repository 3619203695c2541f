#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gqkit/finite_field.hpp"
#include "gqkit/incidence.hpp"

namespace gqkit {

class geometry_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Homogeneous coordinates with first nonzero entry equal to one.
struct ProjectivePoint {
  std::vector<FieldElement> coords;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Scales v so its first nonzero coordinate is one. Throws geometry_error for the zero vector.
ProjectivePoint normalize_point(const Field& field, std::vector<FieldElement> v);

/// All points of PG(n, field) in lexicographic order of normalized coordinates.
std::vector<ProjectivePoint> proj_points(const Field& field, int n);
std::vector<ProjectivePoint> proj_points(int n, int q);

/// Dense lookup from normalized coordinates to a caller-chosen index.
class PointIndex {
public:
  PointIndex(const Field& field, int dimension);

  void assign(const ProjectivePoint& pt, int index);
  /// Index of the point spanned by v, or -1. v need not be normalized.
  int find(const Field& field, const std::vector<FieldElement>& v) const;

private:
  std::size_t key(const std::vector<FieldElement>& normalized) const;

  int q_;
  int dimension_;
  std::vector<int> table_;
};

enum class FormKind { symplectic, quadratic_parabolic, quadratic_elliptic, hermitian };
std::string to_string(FormKind kind);

/// A sesquilinear or quadratic form on V(dimension, field).
///
/// For quadratic kinds gram is upper triangular and Q(x) = sum_{i<=j} gram[i][j] x_i x_j.
/// For hermitian forms the field is GF(q^2) and conjugation is x -> x^q.
struct FormSpec {
  FormKind kind = FormKind::symplectic;
  int dimension = 0;
  std::vector<std::vector<FieldElement>> gram;
  /// log_p of q for hermitian forms, so conjugation is frobenius^conj_power.
  int conj_power = 0;
};

/// B(x, y); the polar form for quadratic kinds.
FieldElement form_bilinear(const Field& field, const FormSpec& form, const std::vector<FieldElement>& x,
                           const std::vector<FieldElement>& y);
/// Q(x) for quadratic kinds, B(x, x) otherwise.
FieldElement form_value(const Field& field, const FormSpec& form, const std::vector<FieldElement>& x);
bool form_isotropic(const Field& field, const FormSpec& form, const std::vector<FieldElement>& x);

/// Throws geometry_error when the Gram matrix shape is wrong or the form is degenerate.
/// Nondegeneracy is checked exhaustively over all nonzero vectors.
void validate_form(const Field& field, const FormSpec& form);

enum class GqFamily { W3, Q4, Q5minus, H3, H4 };
std::string to_string(GqFamily family);
std::optional<GqFamily> parse_gq_family(const std::string& name);
/// Order (s, t) of the classical quadrangle.
std::pair<long long, long long> classical_order(GqFamily family, long long q);

FormSpec standard_form(GqFamily family, const Field& field, int q);

/// A classical quadrangle with its coordinates. Point i of inc is points[i].
struct ClassicalGq {
  GqFamily family = GqFamily::W3;
  int q = 0;
  std::shared_ptr<const Field> field;
  FormSpec form;
  std::vector<ProjectivePoint> points;
  IncidenceStructure inc;
};

ClassicalGq build_classical_gq_model(GqFamily family, int q);
IncidenceStructure build_classical_gq(GqFamily family, int q);

/// The translation quadrangle of order (3, 5) over GF(4).
///
/// Points are the affine points (1, x, y, z) of PG(3, 4); lines are the affine
/// lines whose point at infinity lies on the hyperoval.
struct Gq35Model {
  std::shared_ptr<const Field> field;
  /// Affine coordinates (x, y, z) of point i.
  std::vector<std::vector<FieldElement>> affine;
  /// Hyperoval in the plane at infinity, PG(2, 4) coordinates.
  std::vector<ProjectivePoint> hyperoval;
  IncidenceStructure inc;
};

Gq35Model build_gq35_model();
IncidenceStructure build_gq35();

/// True when no three of the points of PG(2, q) are collinear.
bool no_three_collinear(const Field& field, const std::vector<ProjectivePoint>& pts);

}  // namespace gqkit
