#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqkit/bigint.hpp"
#include "gqkit/geometry.hpp"
#include "gqkit/graph.hpp"
#include "gqkit/incidence.hpp"

namespace gqkit {

class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A bijection of {0, ..., n-1}. Products act left to right: (a * b)(x) = b(a(x)).
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Smallest moved point, or -1 for the identity.
  int smallest_moved_point() const;
  std::string cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  struct unchecked {};
  Permutation(std::vector<int> images, unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// Stabilizer chain for a base b_0, ..., b_{k-1}.
struct StabChain {
  struct Level {
    int base_point = -1;
    /// Strong generators fixing b_0, ..., b_{i-1}.
    std::vector<Permutation> generators;
    /// Fundamental orbit in discovery order.
    std::vector<int> orbit;
    /// transversal_index[x] indexes transversal for x in the orbit, otherwise -1.
    std::vector<int> transversal_index;
    /// transversal[j] maps base_point to orbit[j].
    std::vector<Permutation> transversal;
  };

  int domain_size = 0;
  std::vector<Level> levels;

  std::vector<int> base() const;
  std::vector<std::size_t> orbit_sizes() const;
  BigInt order() const;
  /// Residue of sifting g through the whole chain.
  Permutation sift(const Permutation& g) const;
  bool contains(const Permutation& g) const;
};

class PermGroup {
public:
  PermGroup() = default;
  /// Throws std::invalid_argument when a generator has the wrong degree.
  PermGroup(int domain_size, std::vector<Permutation> generators);
  static PermGroup trivial(int domain_size) { return PermGroup(domain_size, {}); }

  int domain_size() const { return domain_size_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Chain built with the smallest-moved-point base rule, computed on first use.
  const StabChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }

private:
  int domain_size_ = 0;
  std::vector<Permutation> generators_;
  mutable std::shared_ptr<const StabChain> chain_;
};

/// Deterministic Schreier-Sims. The base starts with base_prefix; further base
/// points are the smallest points moved by the generator that needs them.
StabChain schreier_sims(const PermGroup& g, const std::vector<int>& base_prefix = {});

/// Sorted orbit of x. Throws std::invalid_argument when x is out of range.
std::vector<int> orbit(const PermGroup& g, int x);
/// All orbits, each sorted, ordered by smallest element.
std::vector<std::vector<int>> orbits(const PermGroup& g);
/// Sorted orbit of a tuple under the coordinatewise action.
std::vector<std::vector<int>> orbit_on_tuples(const PermGroup& g, const std::vector<int>& tuple);

BigInt group_order(const PermGroup& g);
/// Generators of the stabilizer of x, taken from a chain with base prefix x.
PermGroup stabilizer(const PermGroup& g, int x);
PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points);

/// Throws std::invalid_argument naming a generator and an edge it does not preserve.
void require_automorphisms(const Graph& graph, const PermGroup& g);

/// Sequences (v_0, ..., v_s) of adjacent vertices with v_{i+1} != v_{i-1}.
std::vector<std::vector<int>> s_arcs_from(const Graph& graph, int v, int s);

struct ArcOrbitReport {
  int s = 0;
  /// One representative per vertex orbit of the group.
  std::vector<int> representatives;
  std::vector<long long> arc_counts;
  /// Size of the stabilizer orbit of the first arc at each representative.
  std::vector<long long> orbit_sizes;
  bool transitive = false;
};

/// Local s-arc transitivity: for each vertex v, the stabilizer of v is
/// transitive on s-arcs starting at v. One representative per vertex orbit is examined.
ArcOrbitReport local_arc_report(const Graph& graph, const PermGroup& g, int s);
bool is_locally_s_arc_transitive(const Graph& graph, const PermGroup& g, int s);

struct LocalTwoTransitivityReport {
  bool preserves_sides = false;
  bool points_ok = false;
  bool lines_ok = false;
  std::vector<int> point_representatives;
  std::vector<int> line_representatives;
  /// Stabilizer orders of the first point and first line representative.
  BigInt point_stabilizer_order;
  BigInt line_stabilizer_order;

  bool ok() const { return preserves_sides && points_ok && lines_ok; }
};

/// g acts on the incidence graph vertices (points, then lines).
LocalTwoTransitivityReport local_two_transitivity(const IncidenceStructure& gq, const PermGroup& g);
bool is_locally_2_transitive_gq(const IncidenceStructure& gq, const PermGroup& g);

/// Generators of the color-preserving automorphism group, by equitable
/// partition refinement and backtracking with orbit pruning.
/// Throws resource_error when more than node_budget search nodes are needed.
PermGroup graph_autos(const Graph& graph, const std::vector<std::vector<int>>& color_classes,
                      long long node_budget = 20'000'000);
PermGroup graph_autos(const Graph& graph, long long node_budget = 20'000'000);

using Matrix = std::vector<std::vector<FieldElement>>;

/// x -> x M on row vectors.
std::vector<FieldElement> apply_matrix(const Field& field, const std::vector<FieldElement>& x, const Matrix& m);
bool matrix_preserves_form(const Field& field, const FormSpec& form, const Matrix& m);

/// Symplectic or unitary transvections x -> x + lambda B(x, v) v over the
/// isotropic points v, with lambda running over an additive basis of the
/// admissible scalars. Only W3, H3 and H4 are supported.
std::vector<Matrix> transvection_generators(const ClassicalGq& gq);

/// Action on points followed by lines. Throws std::invalid_argument when m
/// does not preserve the form of gq.
Permutation induced_permutation(const ClassicalGq& gq, const Matrix& m);

/// Group induced on points and lines by the transvection generators.
PermGroup classical_group_action(const ClassicalGq& gq);

/// PRM v1 text format.
void write_prm(std::ostream& out, const PermGroup& g);
std::string to_prm(const PermGroup& g);
PermGroup read_prm(std::istream& in);
PermGroup parse_prm(const std::string& text);

}  // namespace gqkit
