#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gqkit/bigint.hpp"
#include "gqkit/maximal_subgroups.hpp"
#include "gqkit/pipeline.hpp"

namespace gqkit {

enum class DiffStatus { match, differs, missing, extra, flagged };
std::string to_string(DiffStatus s);

/// One compared value. missing: printed but not computed; extra: computed but not printed;
/// flagged: a printed value that is known to be inconsistent and is reported without failing.
struct DiffEntry {
  std::string table;
  std::string key;
  std::string expected;
  std::string actual;
  DiffStatus status = DiffStatus::match;
  std::string note;
};

struct TableReport {
  std::string which;
  std::vector<DiffEntry> entries;
  /// No differs, missing or extra entries.
  bool clean() const;
  std::size_t count(DiffStatus s) const;
};

/// Orbit table for the kernel N: |N| = st + 1.
TableReport reproduce_kernel_orbit_table();

/// Alternating-socle rows, the sporadic in-text equations and the residual integer-root list.
struct AlternatingRow {
  long long t_plus_1 = 0;
  std::string t_c;
  std::string t_p;
  BigInt t_p_order;
  BigInt printed_points;
  BigInt points;
  std::optional<BigInt> s;
};
std::vector<AlternatingRow> alternating_socle_rows();
/// (t, N) pairs from the in-text eliminations and the residual list, each with no integer root expected.
std::vector<std::pair<long long, long long>> integer_root_equations();
TableReport reproduce_factorization_tables();

TableReport reproduce_threshold_table();
TableReport reproduce_candidate_tables(const CandidatePipelineReport& candidates, const SubgroupCatalog& catalog);
TableReport reproduce_elimination_table(const SurvivorEliminationReport& report);

/// which is one of "3.3", "6.2", "7.3", "7.4", "7.5". Throws std::invalid_argument otherwise.
TableReport reproduce_table(const std::string& which, const SubgroupCatalog& catalog);
const std::vector<std::string>& table_keys();

/// Golden sets of the final candidate table, including PSL(4,9) and PSU(5,4).
std::vector<LieGroupId> printed_candidate_set();

}  // namespace gqkit
