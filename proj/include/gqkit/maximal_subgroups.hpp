#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqkit/bigint.hpp"
#include "gqkit/lietype.hpp"

namespace gqkit {

enum class MuNotion { smallest_maximal, smallest_non_large };
enum class MuProvenance { computed_dickson, paper_table, curated_bhrd };

/// "smallest-maximal", "smallest-non-large-maximal".
std::string to_string(MuNotion n);
/// "computed-dickson", "paper-table", "curated-bhrd".
std::string to_string(MuProvenance p);
std::optional<MuNotion> parse_mu_notion(const std::string& text);
std::optional<MuProvenance> parse_mu_provenance(const std::string& text);

struct MuEntry {
  LieGroupId id;
  /// Empty when every maximal subgroup is large.
  std::optional<BigInt> mu;
  MuNotion notion = MuNotion::smallest_non_large;
  MuProvenance provenance = MuProvenance::computed_dickson;
};

class catalog_gap_error : public std::runtime_error {
public:
  explicit catalog_gap_error(std::vector<LieGroupId> missing);
  const std::vector<LieGroupId>& missing() const { return missing_; }

private:
  std::vector<LieGroupId> missing_;
};

/// PSL(2,q), PSL(3,q), PSU(3,q), Sz(q) and 2G2(q), whose maximal subgroup orders are parametrized.
bool has_formula_maximals(const LieGroupId& id);

/// Orders of the maximal subgroups of a formula family, ascending and without repeats.
/// Throws std::invalid_argument for other ids.
std::vector<BigInt> formula_maximal_orders(const LieGroupId& id);

/// Smallest entry of orders under the notion; empty if none qualifies.
std::optional<BigInt> smallest_of(const std::vector<BigInt>& orders, const BigInt& group_order, MuNotion notion);

/// Directory holding the TSV catalogs: $GQKIT_DATA_DIR if set, else the install-time default.
std::string default_data_dir();

/// Family column of the TSV catalogs: PSL, PSU, PSp, POmega, POmega+, POmega-, G2, F4, Sz, 2G2, 2F4', 3D4.
std::string tsv_family(const LieGroupId& id);
/// Throws std::invalid_argument for unknown columns or invalid ids.
LieGroupId id_from_tsv(const std::string& family, const std::string& n, const std::string& q);

class SubgroupCatalog {
public:
  /// Reads mu_catalog.tsv and maximal_orders.tsv. Throws std::runtime_error on malformed
  /// rows, rows whose order does not divide the group order, or missing files.
  static SubgroupCatalog load(const std::string& dir);
  static SubgroupCatalog load_default() { return load(default_data_dir()); }

  /// Formula families are computed; other ids come from the curated table. A curated
  /// smallest maximal subgroup is the smallest non-large one when it is not large itself,
  /// and otherwise every maximal subgroup is large. Throws catalog_gap_error.
  MuEntry mu(const LieGroupId& id, MuNotion notion) const;
  bool covers(const LieGroupId& id) const;

  struct CuratedOrder {
    BigInt order;
    MuProvenance provenance;
  };
  /// Maximal subgroup orders of id: computed for formula families, else curated.
  /// Throws catalog_gap_error when neither is available.
  std::vector<CuratedOrder> maximal_orders(const LieGroupId& id) const;

  const std::map<LieGroupId, MuEntry>& curated_mu() const { return mu_; }

private:
  std::map<LieGroupId, MuEntry> mu_;
  std::map<LieGroupId, std::vector<CuratedOrder>> orders_;
};

}  // namespace gqkit
