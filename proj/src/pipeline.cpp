#include "gqkit/pipeline.hpp"

#include <algorithm>
#include <set>

#include "gqkit/arith.hpp"
#include "gqkit/finite_field.hpp"

namespace gqkit {

std::string to_string(PassedStage s) {
  switch (s) {
    case PassedStage::order_bound: return "order-bound";
    case PassedStage::out_cubed_vs_mu: return "out-cubed-vs-mu";
    case PassedStage::final_table: return "final-table";
  }
  return "?";
}

PipelineStage pipeline_stage(int alpha) {
  PipelineStage st;
  st.alpha = alpha;
  st.thresholds = lambert_thresholds(alpha);
  st.order_bound = st.thresholds.t_bound - 1;
  switch (alpha) {
    case 1: st.scope = "all families"; break;
    case 2:
      st.scope = "PSU(d,2^f), PSU(d,3^f), POmega+(8,q) with 3 not dividing q";
      st.filter.families = {LieFamily::PSU, LieFamily::POmega};
      st.filter.accept = [](const LieGroupId& id) {
        if (id.family == LieFamily::PSU) return id.p() == 2 || id.p() == 3;
        return id.epsilon == 1 && id.n == 8 && id.q % 3 != 0;
      };
      break;
    case 3:
      st.scope = "PSL(d,q) with d > 2, POmega+(8,3^f)";
      st.filter.families = {LieFamily::PSL, LieFamily::POmega};
      st.filter.accept = [](const LieGroupId& id) {
        if (id.family == LieFamily::PSL) return id.n > 2;
        return id.epsilon == 1 && id.n == 8 && id.p() == 3;
      };
      break;
  }
  return st;
}

std::vector<LieGroupId> CandidatePipelineReport::survivors() const {
  std::set<LieGroupId> ids;
  for (const auto& r : records)
    if (r.survives()) ids.insert(r.id);
  return {ids.begin(), ids.end()};
}

std::vector<CandidateRecord> CandidatePipelineReport::stage_records(int alpha) const {
  std::vector<CandidateRecord> out;
  for (const auto& r : records)
    if (r.alpha == alpha) out.push_back(r);
  return out;
}

CandidatePipelineReport run_candidate_pipeline(const SubgroupCatalog& catalog, const std::vector<int>& alphas) {
  CandidatePipelineReport rep;
  std::vector<std::vector<LieGroupId>> ids;
  std::vector<LieGroupId> gaps;
  for (int alpha : alphas) {
    rep.stages.push_back(pipeline_stage(alpha));
    ids.push_back(enumerate_lie_upto(rep.stages.back().order_bound, rep.stages.back().filter));
    for (const auto& id : ids.back())
      if (!catalog.covers(id)) gaps.push_back(id);
  }
  if (!gaps.empty()) {
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    throw catalog_gap_error(gaps);
  }

  std::set<LieGroupId> seen_survivor;
  for (std::size_t k = 0; k < rep.stages.size(); ++k) {
    for (const auto& id : ids[k]) {
      CandidateRecord r;
      r.id = id;
      r.alpha = rep.stages[k].alpha;
      r.order = lie_order(id);
      r.out = out_order(id);
      const MuEntry mu = catalog.mu(id, MuNotion::smallest_non_large);
      r.mu = mu.mu;
      r.notion = mu.notion;
      r.provenance = mu.provenance;
      const BigInt cube = r.out * r.out * r.out;
      if (!r.mu) {
        r.elimination_reason = "every maximal subgroup is large";
      } else if (cube <= *r.mu) {
        r.elimination_reason = "|Out|^3 = " + cube.str() + " <= mu = " + r.mu->str();
      } else {
        r.passed_stage = seen_survivor.insert(id).second ? PassedStage::final_table : PassedStage::out_cubed_vs_mu;
      }
      if (r.alpha == 1 && id.family == LieFamily::PSL && id.n == 2) rep.psl2_cutoff = std::max(rep.psl2_cutoff, id.q);
      if (id.family == LieFamily::Ree2G2) {
        ReeCheck c;
        c.q = id.q;
        const long long f = id.f();
        c.out_cubed = BigInt(f) * f * f;
        // sqrt(3q) = 3^((f+1)/2) exactly since f is odd.
        c.smallest_maximal = 6 * (BigInt(id.q) - bigint_pow(3, static_cast<unsigned>((f + 1) / 2)) + 1);
        c.holds = c.out_cubed > c.smallest_maximal;
        if (std::none_of(rep.ree_checks.begin(), rep.ree_checks.end(), [&](const ReeCheck& e) { return e.q == c.q; }))
          rep.ree_checks.push_back(c);
      }
      rep.records.push_back(std::move(r));
    }
  }
  return rep;
}

std::vector<std::pair<long long, long long>> gq_orders_with_point_count(const BigInt& n) {
  std::vector<std::pair<long long, long long>> out;
  if (n < 1) return out;
  if (n > BigInt("100000000000000000000000000000000"))
    throw std::invalid_argument("point count too large for the order search");
  using u128 = unsigned __int128;
  const BigInt hi = n >> 64;
  const BigInt lo = n & BigInt("18446744073709551615");
  const u128 N = (static_cast<u128>(static_cast<unsigned long long>(hi)) << 64) |
                 static_cast<u128>(static_cast<unsigned long long>(lo));
  for (u128 s = 3; (s + 1) * (s * s + 1) <= N; ++s) {
    if (N % (s + 1) != 0) continue;
    const u128 m = N / (s + 1) - 1;
    if (m % s != 0) continue;
    const u128 t = m / s;
    if (t < s) continue;
    const long long ss = static_cast<long long>(s);
    const long long tt = static_cast<long long>(t);
    if (gq_feasible(BigInt(ss), BigInt(tt)).pass) out.emplace_back(ss, tt);
  }
  return out;
}

bool SurvivorEliminationReport::all_eliminated() const {
  return std::all_of(eliminations.begin(), eliminations.end(), [](const TripleElimination& e) { return e.eliminated; });
}

SurvivorEliminationReport run_survivor_elimination(const CandidatePipelineReport& candidates,
                                                   const SubgroupCatalog& catalog) {
  SurvivorEliminationReport rep;
  rep.examined = candidates.survivors();
  std::vector<LieGroupId> gaps;
  for (const auto& id : rep.examined) {
    try {
      catalog.maximal_orders(id);
    } catch (const catalog_gap_error&) {
      gaps.push_back(id);
    }
  }
  if (!gaps.empty()) throw catalog_gap_error(gaps);

  for (const auto& id : rep.examined) {
    const BigInt order = lie_order(id);
    std::set<BigInt> hs;
    for (const auto& h : catalog.maximal_orders(id))
      if (!is_large(order, h.order)) hs.insert(h.order);
    for (const auto& h : hs) {
      const BigInt degree = order / h;
      for (auto [s, t] : gq_orders_with_point_count(degree)) rep.triples.push_back({id, h, degree, s, t});
    }
  }
  for (const auto& tr : rep.triples) {
    TripleElimination e;
    e.triple = tr;
    const BigInt tp1 = tr.t + 1;
    e.stabilizer_mod_t_plus_1 = tr.stabilizer_order % tp1;
    e.degree_mod_t_plus_1 = tr.degree % tp1;
    e.t_plus_1_divides_stabilizer = e.stabilizer_mod_t_plus_1 == 0;
    e.eliminated = !e.t_plus_1_divides_stabilizer;
    e.reason = e.eliminated ? "a group of order " + tr.stabilizer_order.str() + " has no transitive action of degree " +
                                  tp1.str() + " since " + tp1.str() + " does not divide " + tr.stabilizer_order.str()
                            : "not eliminated by the divisibility test";
    rep.eliminations.push_back(std::move(e));
  }
  return rep;
}

}  // namespace gqkit
