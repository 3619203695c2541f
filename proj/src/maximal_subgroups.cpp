#include "gqkit/maximal_subgroups.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "gqkit/finite_field.hpp"

#ifndef GQKIT_DEFAULT_DATA_DIR
#define GQKIT_DEFAULT_DATA_DIR "data"
#endif

namespace gqkit {

namespace {

bool is_prime_small(int r) {
  if (r < 2) return false;
  for (int d = 2; d * d <= r; ++d)
    if (r % d == 0) return false;
  return true;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Maximal subfields GF(q0) of GF(q) with their prime index r.
std::vector<std::pair<long long, int>> maximal_subfields(long long q) {
  const auto [p, f] = prime_power_decompose(q);
  std::vector<std::pair<long long, int>> out;
  for (int r = 2; r <= f; ++r)
    if (f % r == 0 && is_prime_small(r)) out.emplace_back(ipow(p, f / r), r);
  return out;
}

BigInt sl2(long long q) { return BigInt(q) * (BigInt(q) * q - 1); }
BigInt sl3(long long q) {
  const BigInt Q = q;
  return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q - 1);
}
BigInt su3(long long q) {
  const BigInt Q = q;
  return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q + 1);
}

std::vector<BigInt> psl2_maximals(long long q) {
  const auto [p, f] = prime_power_decompose(q);
  const BigInt Q = q;
  std::vector<BigInt> out;
  if (p == 2) {
    out = {Q * (Q - 1), 2 * (Q - 1), 2 * (Q + 1)};
    for (auto [q0, r] : maximal_subfields(q))
      if (q0 != 2) out.push_back(sl2(q0));
    return out;
  }
  out.push_back(Q * (Q - 1) / 2);
  if (q >= 13) out.push_back(Q - 1);
  if (q != 7 && q != 9) out.push_back(Q + 1);
  for (auto [q0, r] : maximal_subfields(q)) out.push_back(r == 2 ? sl2(q0) : sl2(q0) / 2);
  if (f == 1 && (q % 10 == 1 || q % 10 == 9)) out.push_back(60);
  if (f == 2 && (p % 10 == 3 || p % 10 == 7)) out.push_back(60);
  if (f == 1 && (q % 8 == 3 || q % 8 == 5) && q % 10 != 1 && q % 10 != 9) out.push_back(12);
  if (f == 1 && (q % 8 == 1 || q % 8 == 7)) out.push_back(24);
  return out;
}

std::vector<BigInt> sz_maximals(long long q) {
  const BigInt Q = q;
  const BigInt r = isqrt(2 * Q);
  std::vector<BigInt> out = {Q * Q * (Q - 1), 2 * (Q - 1), 4 * (Q + r + 1), 4 * (Q - r + 1)};
  for (auto [q0, k] : maximal_subfields(q))
    if (q0 >= 8) out.push_back(lie_order(exceptional(LieFamily::Sz, q0)));
  return out;
}

std::vector<BigInt> ree_maximals(long long q) {
  const BigInt Q = q;
  const BigInt r = isqrt(3 * Q);
  std::vector<BigInt> out = {Q * Q * Q * (Q - 1), Q * (Q * Q - 1), 6 * (Q + 1), 6 * (Q + r + 1), 6 * (Q - r + 1)};
  for (auto [q0, k] : maximal_subfields(q))
    if (q0 >= 27) out.push_back(lie_order(exceptional(LieFamily::Ree2G2, q0)));
  return out;
}

std::vector<BigInt> psl3_maximals(long long q) {
  const auto [p, f] = prime_power_decompose(q);
  const long long d = std::gcd(3LL, q - 1);
  const BigInt Q = q;
  std::vector<BigInt> out = {Q * Q * Q * (Q - 1) * (Q * Q - 1) / d};
  if (q >= 5) out.push_back((Q - 1) * (Q - 1) * 6 / d);
  if (q != 4) out.push_back((Q * Q + Q + 1) * 3 / d);
  for (auto [q0, r] : maximal_subfields(q)) {
    out.push_back(sl3(q0) * std::gcd((q - 1) / (q0 - 1), 3LL) / d);
    if (r == 2) out.push_back(su3(q0) * std::gcd(q0 - 1, 3LL) / d);
  }
  if (p != 2 && q >= 5) out.push_back(Q * (Q * Q - 1));
  if (f == 1 && (q % 9 == 4 || q % 9 == 7)) out.push_back(72);
  if (f == 1 && q % 9 == 1) out.push_back(216);
  if (f == 1 && (q % 7 == 1 || q % 7 == 2 || q % 7 == 4) && q != 2) out.push_back(168);
  if ((f == 1 && (q % 15 == 1 || q % 15 == 4)) || (f == 2 && (p % 5 == 2 || p % 5 == 3) && p != 3)) out.push_back(360);
  return out;
}

std::vector<BigInt> psu3_maximals(long long q) {
  const auto [p, f] = prime_power_decompose(q);
  const long long d = std::gcd(3LL, q + 1);
  const BigInt Q = q;
  std::vector<BigInt> out = {Q * Q * Q * (Q * Q - 1) / d, Q * (Q + 1) * (Q * Q - 1) / d};
  if (q != 5) out.push_back((Q + 1) * (Q + 1) * 6 / d);
  if (q != 3 && q != 5) out.push_back((Q * Q - Q + 1) * 3 / d);
  for (auto [q0, r] : maximal_subfields(q))
    if (r % 2 == 1) out.push_back(su3(q0) * std::gcd((q + 1) / (q0 + 1), 3LL) / d);
  if (p != 2 && q >= 7) out.push_back(Q * (Q * Q - 1));
  if (f == 1 && q % 3 == 2 && q >= 5) out.push_back(BigInt(72 * std::gcd(q + 1, 9LL) / 3));
  if (f == 1 && (q % 7 == 3 || q % 7 == 5 || q % 7 == 6) && q != 5) out.push_back(168);
  if (f == 1 && (q % 15 == 11 || q % 15 == 14)) out.push_back(360);
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::stringstream ss(line);
  std::string c;
  while (std::getline(ss, c, '\t')) cols.push_back(c);
  return cols;
}

template <class F>
void read_tsv(const std::string& path, std::size_t n_cols, F row) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split_tabs(line);
    const std::string where = path + ":" + std::to_string(line_no);
    if (cols.size() != n_cols) throw std::runtime_error(where + ": expected " + std::to_string(n_cols) + " columns");
    try {
      row(cols);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(where + ": " + e.what());
    }
  }
}

}  // namespace

catalog_gap_error::catalog_gap_error(std::vector<LieGroupId> missing)
    : std::runtime_error([&] {
        std::string msg = "no maximal subgroup data for";
        for (const auto& id : missing) msg += " " + to_string(id);
        return msg;
      }()),
      missing_(std::move(missing)) {}

std::string to_string(MuNotion n) {
  return n == MuNotion::smallest_maximal ? "smallest-maximal" : "smallest-non-large-maximal";
}

std::string to_string(MuProvenance p) {
  switch (p) {
    case MuProvenance::computed_dickson: return "computed-dickson";
    case MuProvenance::paper_table: return "paper-table";
    case MuProvenance::curated_bhrd: return "curated-bhrd";
  }
  return "?";
}

std::optional<MuNotion> parse_mu_notion(const std::string& text) {
  if (text == "smallest-maximal") return MuNotion::smallest_maximal;
  if (text == "smallest-non-large-maximal") return MuNotion::smallest_non_large;
  return std::nullopt;
}

std::optional<MuProvenance> parse_mu_provenance(const std::string& text) {
  for (auto p : {MuProvenance::computed_dickson, MuProvenance::paper_table, MuProvenance::curated_bhrd})
    if (to_string(p) == text) return p;
  return std::nullopt;
}

bool has_formula_maximals(const LieGroupId& id) {
  switch (id.family) {
    case LieFamily::PSL: return id.n == 2 || id.n == 3;
    case LieFamily::PSU: return id.n == 3;
    case LieFamily::Sz:
    case LieFamily::Ree2G2: return true;
    default: return false;
  }
}

std::vector<BigInt> formula_maximal_orders(const LieGroupId& id) {
  validate(id);
  std::vector<BigInt> out;
  if (id.family == LieFamily::PSL && id.n == 2) out = psl2_maximals(id.q);
  else if (id.family == LieFamily::PSL && id.n == 3) out = psl3_maximals(id.q);
  else if (id.family == LieFamily::PSU && id.n == 3) out = psu3_maximals(id.q);
  else if (id.family == LieFamily::Sz) out = sz_maximals(id.q);
  else if (id.family == LieFamily::Ree2G2) out = ree_maximals(id.q);
  else throw std::invalid_argument("no parametrized maximal subgroups for " + to_string(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<BigInt> smallest_of(const std::vector<BigInt>& orders, const BigInt& group_order, MuNotion notion) {
  std::optional<BigInt> best;
  for (const auto& h : orders) {
    if (notion == MuNotion::smallest_non_large && is_large(group_order, h)) continue;
    if (!best || h < *best) best = h;
  }
  return best;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("GQKIT_DATA_DIR"); env && *env) return env;
  return GQKIT_DEFAULT_DATA_DIR;
}

std::string tsv_family(const LieGroupId& id) {
  if (id.family == LieFamily::POmega) return id.epsilon > 0 ? "POmega+" : id.epsilon < 0 ? "POmega-" : "POmega";
  return to_string(id.family);
}

LieGroupId id_from_tsv(const std::string& family, const std::string& n_text, const std::string& q_text) {
  std::size_t used = 0;
  const int n = std::stoi(n_text, &used);
  if (used != n_text.size()) throw std::invalid_argument("bad n column '" + n_text + "'");
  const long long q = std::stoll(q_text, &used);
  if (used != q_text.size()) throw std::invalid_argument("bad q column '" + q_text + "'");
  LieGroupId id;
  if (family == "POmega+") id = pomega(1, n, q);
  else if (family == "POmega-") id = pomega(-1, n, q);
  else if (family == "POmega") id = pomega(0, n, q);
  else if (family == "PSL") id = psl(n, q);
  else if (family == "PSU") id = psu(n, q);
  else if (family == "PSp") id = psp(n, q);
  else {
    bool found = false;
    for (auto fam : {LieFamily::G2, LieFamily::F4, LieFamily::Sz, LieFamily::Ree2G2, LieFamily::TwistedF4p,
                     LieFamily::D4_3})
      if (to_string(fam) == family) {
        id = exceptional(fam, q);
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown family '" + family + "'");
    if (n != 0) throw std::invalid_argument("exceptional families take n = 0");
  }
  validate(id);
  return id;
}

SubgroupCatalog SubgroupCatalog::load(const std::string& dir) {
  SubgroupCatalog cat;
  read_tsv(dir + "/mu_catalog.tsv", 6, [&](const std::vector<std::string>& c) {
    MuEntry e;
    e.id = id_from_tsv(c[0], c[1], c[2]);
    e.mu = parse_bigint(c[3]);
    const auto notion = parse_mu_notion(c[4]);
    const auto prov = parse_mu_provenance(c[5]);
    if (!notion) throw std::invalid_argument("unknown notion '" + c[4] + "'");
    if (!prov) throw std::invalid_argument("unknown provenance '" + c[5] + "'");
    e.notion = *notion;
    e.provenance = *prov;
    if (*e.mu <= 0 || lie_order(e.id) % *e.mu != 0) throw std::invalid_argument("mu does not divide the group order");
    if (!cat.mu_.emplace(e.id, e).second) throw std::invalid_argument("duplicate entry for " + to_string(e.id));
  });
  read_tsv(dir + "/maximal_orders.tsv", 5, [&](const std::vector<std::string>& c) {
    const LieGroupId id = id_from_tsv(c[0], c[1], c[2]);
    const BigInt h = parse_bigint(c[3]);
    const auto prov = parse_mu_provenance(c[4]);
    if (!prov) throw std::invalid_argument("unknown provenance '" + c[4] + "'");
    if (h <= 0 || lie_order(id) % h != 0) throw std::invalid_argument("order does not divide the group order");
    cat.orders_[id].push_back({h, *prov});
  });
  return cat;
}

bool SubgroupCatalog::covers(const LieGroupId& id) const { return has_formula_maximals(id) || mu_.count(id); }

MuEntry SubgroupCatalog::mu(const LieGroupId& id, MuNotion notion) const {
  if (has_formula_maximals(id)) {
    MuEntry e;
    e.id = id;
    e.notion = notion;
    e.provenance = MuProvenance::computed_dickson;
    e.mu = smallest_of(formula_maximal_orders(id), lie_order(id), notion);
    return e;
  }
  const auto it = mu_.find(id);
  if (it == mu_.end()) throw catalog_gap_error({id});
  MuEntry e = it->second;
  if (e.notion == notion) return e;
  if (e.notion == MuNotion::smallest_non_large) throw catalog_gap_error({id});
  e.notion = MuNotion::smallest_non_large;
  if (is_large(lie_order(id), *e.mu)) e.mu.reset();
  return e;
}

std::vector<SubgroupCatalog::CuratedOrder> SubgroupCatalog::maximal_orders(const LieGroupId& id) const {
  if (has_formula_maximals(id)) {
    std::vector<CuratedOrder> out;
    for (auto& h : formula_maximal_orders(id)) out.push_back({h, MuProvenance::computed_dickson});
    return out;
  }
  const auto it = orders_.find(id);
  if (it == orders_.end()) throw catalog_gap_error({id});
  return it->second;
}

}  // namespace gqkit
