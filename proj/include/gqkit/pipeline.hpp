#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gqkit/bigint.hpp"
#include "gqkit/lambert.hpp"
#include "gqkit/lietype.hpp"
#include "gqkit/maximal_subgroups.hpp"

namespace gqkit {

enum class PassedStage { order_bound, out_cubed_vs_mu, final_table };
/// "order-bound", "out-cubed-vs-mu", "final-table".
std::string to_string(PassedStage s);

struct CandidateRecord {
  LieGroupId id;
  int alpha = 0;
  BigInt order;
  BigInt out;
  std::optional<BigInt> mu;
  MuNotion notion = MuNotion::smallest_non_large;
  MuProvenance provenance = MuProvenance::computed_dickson;
  PassedStage passed_stage = PassedStage::order_bound;
  /// Empty for survivors.
  std::string elimination_reason;

  bool survives() const { return passed_stage != PassedStage::order_bound; }
  friend bool operator==(const CandidateRecord&, const CandidateRecord&) = default;
};

/// One search stage: ids of order at most bound accepted by filter.
struct PipelineStage {
  int alpha = 0;
  BoundRecord thresholds;
  /// t_bound - 1, since |T| is strictly below the real threshold.
  BigInt order_bound;
  LieFilter filter;
  /// Human-readable family scope.
  std::string scope;
};

/// alpha 1: every family; alpha 2: PSU(d, 2^f), PSU(d, 3^f) and POmega+(8, q) with q coprime to 3;
/// alpha 3: PSL(d, q) with d > 2 and POmega+(8, 3^f).
PipelineStage pipeline_stage(int alpha);

/// The inequality f^3 > 6(q - sqrt(3q) + 1) for 2G2(3^f), decided with exact integers.
struct ReeCheck {
  long long q = 0;
  BigInt out_cubed;
  BigInt smallest_maximal;
  bool holds = false;
};

struct CandidatePipelineReport {
  std::vector<PipelineStage> stages;
  /// Every enumerated id per stage, in enumeration order.
  std::vector<CandidateRecord> records;
  std::vector<ReeCheck> ree_checks;
  /// Largest q with |PSL(2,q)| within the alpha-1 bound.
  long long psl2_cutoff = 0;

  /// Distinct surviving ids, sorted.
  std::vector<LieGroupId> survivors() const;
  std::vector<CandidateRecord> stage_records(int alpha) const;
};

/// Throws catalog_gap_error naming every enumerated id without mu data.
CandidatePipelineReport run_candidate_pipeline(const SubgroupCatalog& catalog, const std::vector<int>& alphas = {1, 2, 3});

/// A maximal subgroup H of T whose index is the point count of a feasible GQ(s, t), 2 < s <= t.
struct PointActionTriple {
  LieGroupId id;
  BigInt stabilizer_order;
  BigInt degree;
  long long s = 0;
  long long t = 0;
};

struct TripleElimination {
  PointActionTriple triple;
  /// A transitive action of H on t + 1 lines through a point needs t + 1 to divide |H|.
  bool t_plus_1_divides_stabilizer = false;
  BigInt stabilizer_mod_t_plus_1;
  BigInt degree_mod_t_plus_1;
  bool eliminated = false;
  std::string reason;
};

struct SurvivorEliminationReport {
  std::vector<LieGroupId> examined;
  std::vector<PointActionTriple> triples;
  std::vector<TripleElimination> eliminations;
  bool all_eliminated() const;
};

/// Only non-large maximal subgroups are tried as point stabilizers. Throws catalog_gap_error.
SurvivorEliminationReport run_survivor_elimination(const CandidatePipelineReport& candidates,
                                                   const SubgroupCatalog& catalog);

/// Pairs (s, t) with 2 < s <= t, (s+1)(st+1) = n and gq_feasible passing.
std::vector<std::pair<long long, long long>> gq_orders_with_point_count(const BigInt& n);

}  // namespace gqkit
