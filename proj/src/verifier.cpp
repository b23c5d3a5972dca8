#include "nsg/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>

#include "nsg/errors.hpp"
#include "nsg/version.hpp"

namespace nsg {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> checks = {
      {"C01", "connectivity-witness", "any two non-radical elements have a common neighbor"},
      {"C02", "diam-2", "the induced graph has diameter exactly 2"},
      {"C03", "involution-pairs", "two involutions generate a solvable subgroup"},
      {"C04", "quotient-solvabilizer", "Sol_{G/N}(xN) = Sol_G(x)/N for every normal N inside the radical"},
      {"C05", "conjugation-solvabilizer", "Sol_G(gxg^-1) = g Sol_G(x) g^-1"},
      {"C06", "monotone-solvabilizer", "Sol_A(x) is contained in Sol_B(x) when A <= B"},
      {"C07", "divisibility", "|Sol_G(x)| is divisible by |Sol(G)|, o(x) and |C_G(x)|"},
      {"C08", "coprime-power", "Sol_G(x^i) = Sol_G(x) and deg(x^i) = deg(x) for i coprime to o(x)"},
      {"C09", "absorption", "a solvable H lies in Sol_G(x) for every x in H"},
      {"C10", "degree-bounds", "2o(x) <= deg(x), 5 < deg(x) < n-1, deg(x) not prime, |C_G(x)| divides deg(x)"},
      {"C11", "s-group-dichotomy", "G is solvable exactly when every Sol_G(x) is a subgroup"},
      {"C12", "k44-and-nonplanar", "the induced graph contains K_{4,4}, hence is not planar"},
      {"C13", "irregular", "the induced graph is irregular"},
      {"C14", "not-tree", "the induced graph is not a tree"},
      {"C15", "alpha-bound", "alpha(S_G) >= max o(x)"},
      {"C16", "subgraph-embedding", "the induced graph of H >= Sol(G) embeds; quotient adjacency matches"},
      {"C17", "vertex-count-nonisomorphism", "proper overgroups of the radical and proper quotients give smaller graphs"},
      {"C18", "normalizer-in-solvabilizer", "N_G(<x>) lies in Sol_G(x); N_G(H) lies in Sol_G(x) for solvable H containing x"},
      {"C19", "dedekind-corollary", "if every cyclic subgroup is normal then G is solvable"},
      {"C20", "deg-not-n-minus-2", "no non-radical element has degree n-2; every degree is at most n-3"},
      {"C21", "radical-isolated", "the isolated vertices of S_G are exactly the radical"},
  };
  return checks;
}

const CheckInfo& find_check(std::string_view id) {
  if (id == "s-group-witness") id = "C11";
  for (const auto& c : registered_checks()) {
    if (id == c.id || id == c.name) return c;
  }
  throw PreconditionError("unknown check '" + std::string(id) + "'");
}

nlohmann::json to_json(const VerificationReport& report, bool timings) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json entry = {{"id", c.id},
                            {"name", c.name},
                            {"statement", c.statement},
                            {"status", to_string(c.status)},
                            {"witness", c.witness},
                            {"ms", timings ? nlohmann::json(c.elapsed_ms) : nlohmann::json(nullptr)}};
    if (!c.reason.empty()) entry["reason"] = c.reason;
    checks.push_back(std::move(entry));
  }
  return {{"schema_version", kSchemaVersion},
          {"engine_version", kEngineVersion},
          {"group", report.group},
          {"params", report.params},
          {"checks", std::move(checks)},
          {"summary",
           {{"total", report.checks.size()},
            {"pass", report.passed},
            {"fail", report.failed},
            {"skipped", report.skipped},
            {"not_applicable", report.not_applicable},
            {"ok", report.ok()}}}};
}

namespace {

bool member(const IndexSet& s, Elem e) { return std::binary_search(s.begin(), s.end(), e); }

bool subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct QuotientData {
  SubgroupSet normal;
  std::unique_ptr<QuotientGroup> q;
  SolvabilizerTable table;
  std::size_t radical_order = 0;
};

struct OvergroupData {
  IndexSet members;
  bool solvable = false;
  std::size_t radical_order = 0;
  std::size_t checked_edges = 0;
  std::optional<std::pair<Elem, Elem>> missing_edge;
};

/// Lazily built state shared between checks.
class Context {
 public:
  Context(Analysis& a, const VerifyConfig& cfg) : a(a), cfg(cfg), g(a.group()) {}

  Analysis& a;
  const VerifyConfig& cfg;
  const FiniteGroup& g;

  std::string cyc(Elem e) const { return g.element(e).to_cycle_string(); }

  nlohmann::json cycles(std::span<const Elem> es) const {
    nlohmann::json out = nlohmann::json::array();
    for (Elem e : es) out.push_back(cyc(e));
    return out;
  }

  const IndexSet& sol(Elem x) const { return a.table()[x].members; }

  /// Distinct cyclic subgroups with one generator each, ordered by generator.
  const std::vector<std::pair<Elem, IndexSet>>& cyclic() {
    if (!cyclic_) {
      cyclic_.emplace();
      std::set<IndexSet> seen;
      for (Elem x = 0; x < g.order(); ++x) {
        IndexSet c = g.cyclic_subgroup(x);
        if (seen.insert(c).second) cyclic_->emplace_back(x, std::move(c));
      }
    }
    return *cyclic_;
  }

  /// Two-generated subgroups met during the pair sweep, with verdicts.
  /// Snapshotted once so every check sees the same list.
  const std::map<IndexSet, bool>& registry() {
    if (!registry_) registry_ = a.engine().registry();
    return *registry_;
  }

  /// Normal subgroups of G contained in the radical, trivial one first.
  std::vector<QuotientData>& quotients() {
    if (!quotients_) {
      quotients_.emplace();
      const SubgroupSet& r = a.radical();
      std::vector<IndexSet> rclasses;
      for (const auto& c : a.classes().classes) {
        if (r.contains(c.front()) && c.front() != g.identity()) rclasses.push_back(c);
      }
      std::set<IndexSet> found{IndexSet{g.identity()}};
      std::vector<IndexSet> frontier{IndexSet{g.identity()}};
      while (!frontier.empty() && found.size() < cfg.max_normal_subgroups) {
        std::vector<IndexSet> next;
        for (const auto& n : frontier) {
          for (const auto& c : rclasses) {
            if (member(n, c.front())) continue;
            IndexSet seed = n;
            seed.insert(seed.end(), c.begin(), c.end());
            IndexSet m = closure(g, seed).members;
            if (found.size() < cfg.max_normal_subgroups && found.insert(m).second) next.push_back(std::move(m));
          }
        }
        frontier = std::move(next);
      }
      std::vector<IndexSet> ordered(found.begin(), found.end());
      std::stable_sort(ordered.begin(), ordered.end(),
                       [](const IndexSet& x, const IndexSet& y) { return x.size() < y.size(); });
      for (auto& members : ordered) {
        QuotientData d;
        d.normal = as_subgroup(g, std::move(members));
        if (!is_normal(g, d.normal)) throw InvariantViolation("class closure produced a non-normal subgroup");
        d.q = std::make_unique<QuotientGroup>(quotient_group(g, d.normal));
        SubgroupEngine engine(d.q->group);
        d.table = all_solvabilizers(engine, conjugacy_classes(d.q->group),
                                    {.audit_fraction = cfg.analysis.audit_fraction, .seed = cfg.analysis.seed, .jobs = 1});
        d.radical_order = engine.solvable_radical().size();
        quotients_->push_back(std::move(d));
      }
    }
    return *quotients_;
  }

  /// Subgroups H >= Sol(G) other than G, each realized as a standalone
  /// permutation group, with its induced graph compared against G's.
  std::vector<OvergroupData>& overgroups() {
    if (!overgroups_) {
      overgroups_.emplace();
      const IndexSet& r = a.radical().members;
      std::set<IndexSet> candidates;
      auto add = [&](std::span<const Elem> s) {
        IndexSet seed = r;
        seed.insert(seed.end(), s.begin(), s.end());
        IndexSet h = closure(g, seed).members;
        if (h.size() < g.order()) candidates.insert(std::move(h));
      };
      for (const auto& [x, c] : cyclic()) add(std::span<const Elem>(&x, 1));
      for (const auto& [members, solvable] : registry()) add(members);

      std::vector<std::pair<bool, IndexSet>> ranked;
      for (const auto& h : candidates) {
        SubgroupSet s = as_subgroup(g, h);
        ranked.emplace_back(a.engine().is_solvable(s), h);
      }
      // Non-solvable first (they carry edges), then larger first.
      std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return !x.first;
        return x.second.size() > y.second.size();
      });
      if (ranked.size() > cfg.max_overgroups) ranked.resize(cfg.max_overgroups);

      for (auto& [solvable, members] : ranked) {
        OvergroupData d;
        d.members = members;
        d.solvable = solvable;
        const SubgroupSet s = as_subgroup(g, members);
        std::vector<Permutation> gens;
        for (Elem e : s.generators) gens.push_back(g.element(e));
        const FiniteGroup h = FiniteGroup::generate(gens, g.degree(), {.order_guard = g.order()});
        if (h.order() != members.size()) throw InvariantViolation("overgroup order mismatch");
        std::vector<Elem> to_parent(h.order());
        for (Elem k = 0; k < h.order(); ++k) to_parent[k] = g.index_of(h.element(k));

        SubgroupEngine engine(h);
        const auto table = all_solvabilizers(engine, conjugacy_classes(h), {.audit_fraction = 0, .seed = 0, .jobs = 1});
        const SubgroupSet& rh = engine.solvable_radical();
        d.radical_order = rh.size();
        for (Elem u = 0; u < h.order() && !d.missing_edge; ++u) {
          if (rh.contains(u)) continue;
          const IndexSet& su = table[u].members;
          for (Elem v = u + 1; v < h.order(); ++v) {
            if (member(su, v)) continue;
            ++d.checked_edges;
            if (member(sol(to_parent[u]), to_parent[v])) {
              d.missing_edge = {to_parent[u], to_parent[v]};
              break;
            }
          }
        }
        overgroups_->push_back(std::move(d));
      }
    }
    return *overgroups_;
  }

 private:
  std::optional<std::vector<std::pair<Elem, IndexSet>>> cyclic_;
  std::optional<std::map<IndexSet, bool>> registry_;
  std::optional<std::vector<QuotientData>> quotients_;
  std::optional<std::vector<OvergroupData>> overgroups_;
};

struct Outcome {
  CheckStatus status = CheckStatus::pass;
  nlohmann::json witness = nlohmann::json::object();
  std::string reason;
};

Outcome na(const std::string& reason) { return {CheckStatus::not_applicable, nlohmann::json::object(), reason}; }

Outcome verdict(bool ok, nlohmann::json witness) {
  return {ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness), {}};
}

constexpr const char* kSolvableReason = "graph claim needs a non-solvable group";

Outcome c01(Context& c) {
  if (c.a.solvable()) return na(kSolvableReason);
  const NsGraph& s = c.a.induced_graph();
  std::size_t pairs = 0;
  nlohmann::json sample;
  for (Vertex u = 0; u < s.vertex_count(); ++u) {
    for (Vertex v = u; v < s.vertex_count(); ++v) {
      ++pairs;
      const Bitset common = s.row(u) & s.row(v);
      if (common.none()) return verdict(false, {{"x", c.cyc(s.id(u))}, {"y", c.cyc(s.id(v))}});
      if (sample.is_null() && u != v && !s.adjacent(u, v)) {
        sample = {c.cyc(s.id(u)), c.cyc(s.id(v)), c.cyc(s.id(static_cast<Vertex>(common.next())))};
      }
    }
  }
  return verdict(true, {{"pairs", pairs}, {"sample", sample}});
}

Outcome c02(Context& c) {
  if (c.a.solvable()) return na(kSolvableReason);
  const auto d = diameter(c.a.induced_graph());
  nlohmann::json w = {{"diameter", d.diameter ? nlohmann::json(*d.diameter) : nlohmann::json("infinite")},
                      {"nonadjacent_pairs", d.common_neighbors.size()},
                      {"unwitnessed", d.unwitnessed.size()}};
  if (!d.common_neighbors.empty()) {
    const auto& t = d.common_neighbors.front();
    w["sample"] = {c.cyc(t[0]), c.cyc(t[1]), c.cyc(t[2])};
  }
  return verdict(d.diameter == 2u && d.unwitnessed.empty(), std::move(w));
}

Outcome c03(Context& c) {
  IndexSet inv;
  for (Elem x = 0; x < c.g.order(); ++x) {
    if (c.g.element_order(x) == 2) inv.push_back(x);
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    for (std::size_t j = i + 1; j < inv.size(); ++j) {
      ++pairs;
      if (!c.a.engine().pair_solvable(inv[i], inv[j])) {
        return verdict(false, {{"x", c.cyc(inv[i])}, {"y", c.cyc(inv[j])}});
      }
    }
  }
  return verdict(true, {{"involutions", inv.size()}, {"pairs", pairs}});
}

Outcome c04(Context& c) {
  nlohmann::json checked = nlohmann::json::array();
  for (const auto& d : c.quotients()) {
    const std::size_t n = d.normal.size();
    for (Elem x = 0; x < c.g.order(); ++x) {
      const IndexSet& s = c.sol(x);
      const IndexSet image = d.q->project(s);
      const IndexSet& expect = d.table[d.q->coset_of[x]].members;
      // Sol_G(x) must be a union of N-cosets and project onto Sol_{G/N}(xN).
      if (image != expect || image.size() * n != s.size()) {
        return verdict(false, {{"normal_order", n}, {"x", c.cyc(x)}, {"sol_size", s.size()},
                               {"image_size", image.size()}, {"quotient_sol_size", expect.size()}});
      }
    }
    checked.push_back({{"normal_order", n}, {"quotient_order", d.q->group.order()}, {"elements", c.g.order()}});
  }
  return verdict(true, {{"quotients", std::move(checked)}});
}

Outcome c05(Context& c) {
  std::mt19937_64 rng(c.cfg.analysis.seed ^ 0xC05);
  std::size_t comparisons = 0;
  for (const auto& cls : c.a.classes().classes) {
    const Elem x = cls.front();
    const SolvabilizerResult rx = solvabilizer(c.a.engine(), x);
    IndexSet conj(c.g.generator_indices().begin(), c.g.generator_indices().end());
    for (std::size_t i = 0; i < c.cfg.conjugator_samples; ++i) conj.push_back(static_cast<Elem>(rng() % c.g.order()));
    for (Elem k : conj) {
      const Elem y = c.g.conjugate(x, k);
      const SolvabilizerResult ry = solvabilizer(c.a.engine(), y);
      ++comparisons;
      if (ry.members != conjugate_set(c.g, rx.members, k) || ry.members != c.sol(y)) {
        return verdict(false, {{"x", c.cyc(x)}, {"g", c.cyc(k)}});
      }
    }
  }
  return verdict(true, {{"comparisons", comparisons}});
}

Outcome c06(Context& c) {
  std::size_t chains = 0;
  const IndexSet whole = [&] {
    IndexSet all(c.g.order());
    std::iota(all.begin(), all.end(), Elem{0});
    return all;
  }();
  for (const auto& [x, a] : c.cyclic()) {
    std::vector<const IndexSet*> bs;
    for (const auto& [members, solvable] : c.registry()) {
      if (bs.size() == 3) break;
      if (members.size() > a.size() && subset(a, members)) bs.push_back(&members);
    }
    bs.push_back(&whole);
    const Elem xs[] = {x};
    IndexSet prev = solvabilizer_of_set(c.a.engine(), a, xs);
    for (const IndexSet* b : bs) {
      const IndexSet sb = solvabilizer_of_set(c.a.engine(), *b, xs);
      ++chains;
      if (!subset(prev, sb) || !subset(sb, c.sol(x))) {
        return verdict(false, {{"x", c.cyc(x)}, {"a_order", a.size()}, {"b_order", b->size()}});
      }
    }
  }
  return verdict(true, {{"cyclic_subgroups", c.cyclic().size()}, {"chains", chains}});
}

Outcome c07(Context& c) {
  const std::size_t r = c.a.radical().size();
  for (Elem x = 0; x < c.g.order(); ++x) {
    const std::size_t s = c.sol(x).size();
    const std::size_t cz = centralizer(c.g, x).size();
    if (s % r || s % c.g.element_order(x) || s % cz) {
      return verdict(false, {{"x", c.cyc(x)}, {"sol_size", s}, {"radical", r}, {"centralizer", cz}});
    }
  }
  return verdict(true, {{"elements", c.g.order()}, {"radical", r}});
}

Outcome c08(Context& c) {
  std::size_t table_pairs = 0, direct_pairs = 0;
  for (Elem x = 0; x < c.g.order(); ++x) {
    const std::uint32_t o = c.g.element_order(x);
    for (std::uint32_t i = 2; i < o; ++i) {
      if (std::gcd(i, o) != 1) continue;
      const Elem y = c.g.power(x, i);
      ++table_pairs;
      if (c.sol(y) != c.sol(x) || c.a.table()[y].degree != c.a.table()[x].degree) {
        return verdict(false, {{"x", c.cyc(x)}, {"i", i}, {"source", "table"}});
      }
    }
  }
  for (const auto& cls : c.a.classes().classes) {
    const Elem x = cls.front();
    const std::uint32_t o = c.g.element_order(x);
    const SolvabilizerResult rx = solvabilizer(c.a.engine(), x);
    for (std::uint32_t i = 2; i < o; ++i) {
      if (std::gcd(i, o) != 1) continue;
      ++direct_pairs;
      const SolvabilizerResult ry = solvabilizer(c.a.engine(), c.g.power(x, i));
      if (ry.members != rx.members || ry.degree != rx.degree) {
        return verdict(false, {{"x", c.cyc(x)}, {"i", i}, {"source", "direct"}});
      }
    }
  }
  return verdict(true, {{"table_pairs", table_pairs}, {"direct_pairs", direct_pairs}});
}

Outcome c09(Context& c) {
  std::size_t subgroups = 0;
  for (const auto& [h, solvable] : c.registry()) {
    if (!solvable) continue;
    ++subgroups;
    for (Elem x : h) {
      if (!subset(h, c.sol(x))) return verdict(false, {{"x", c.cyc(x)}, {"h_order", h.size()}});
    }
  }
  return verdict(true, {{"solvable_subgroups", subgroups}});
}

Outcome c10(Context& c) {
  if (c.a.solvable()) return na(kSolvableReason);
  const NsGraph& s = c.a.induced_graph();
  const std::size_t n = s.vertex_count();
  std::size_t lo = n, hi = 0;
  for (Vertex v = 0; v < n; ++v) {
    const Elem x = s.id(v);
    const std::size_t d = s.degree(v);
    const std::size_t cz = centralizer(c.g, x).size();
    lo = std::min(lo, d);
    hi = std::max(hi, d);
    const bool ok = d == c.a.table()[x].degree && 2 * c.g.element_order(x) <= d && d > 5 && d + 1 < n &&
                    !is_prime(d) && d % cz == 0;
    if (!ok) return verdict(false, {{"x", c.cyc(x)}, {"degree", d}, {"order", c.g.element_order(x)}, {"centralizer", cz}, {"n", n}});
  }
  return verdict(true, {{"n", n}, {"min_degree", lo}, {"max_degree", hi}});
}

Outcome c11(Context& c) {
  const FiniteGroup& g = c.g;
  if (c.a.solvable()) {
    for (Elem x = 0; x < g.order(); ++x) {
      if (c.sol(x).size() != g.order()) return verdict(false, {{"x", c.cyc(x)}, {"sol_size", c.sol(x).size()}});
    }
    return verdict(true, {{"every_solvabilizer_is_group", true}, {"elements", g.order()}});
  }
  auto fresh = [&](Elem a, Elem b) {
    const Elem seed[] = {a, b};
    SubgroupSet s = closure(g, seed);
    return is_solvable_uncached(g, s);
  };
  for (const auto& cls : c.a.nonradical_classes_by_size()) {
    const Elem x = cls.front();
    const IndexSet& s = c.sol(x);
    for (Elem y : s) {
      for (Elem z : s) {
        const Elem yz = g.mul(y, z);
        if (member(s, yz)) continue;
        const bool ok = fresh(x, y) && fresh(x, z) && !fresh(x, yz);
        return verdict(ok, {{"x", c.cyc(x)}, {"y", c.cyc(y)}, {"z", c.cyc(z)}, {"yz", c.cyc(yz)}});
      }
    }
  }
  return verdict(false, {{"reason", "every solvabilizer closed in a non-solvable group"}});
}

Outcome c12(Context& c) {
  if (c.a.solvable()) return na(kSolvableReason);
  const NsGraph& s = c.a.induced_graph();
  const auto classes = c.a.nonradical_classes_by_size();
  std::optional<K44Witness> w;
  try {
    w = find_k44(s, c.cfg.analysis.k44_budget, classes);
  } catch (const SearchBudgetExceeded& e) {
    return {CheckStatus::skipped, {{"budget", e.limit()}}, "K_{4,4} search budget exhausted"};
  }
  if (!w) return verdict(false, {{"k44", nullptr}});
  return verdict(verify_k44(s, *w), {{"left", c.cycles(w->left)}, {"right", c.cycles(w->right)},
                                     {"probes", w->probes}, {"planar", false}});
}

Outcome c13(Context& c) {
  if (c.a.solvable()) return na(kSolvableReason);
  const NsGraph& s = c.a.induced_graph();
  const auto r = is_regular(s);
  if (r.regular || !r.witness) return verdict(false, {{"regular", true}});
  const auto [x, y] = *r.witness;
  return verdict(true, {{"x", c.cyc(x)}, {"deg_x", s.degree(*s.vertex_of(x))},
                        {"y", c.cyc(y)}, {"deg_y", s.degree(*s.vertex_of(y))}});
}

Outcome c14(Context& c) {
  if (c.a.solvable()) return na(kSolvableReason);
  const NsGraph& s = c.a.induced_graph();
  const auto cycle = find_odd_cycle(s);
  nlohmann::json w = {{"vertices", s.vertex_count()}, {"edges", s.edge_count()}, {"connected", is_connected(s)}};
  if (cycle) w["odd_cycle"] = c.cycles(*cycle);
  return verdict(!is_tree(s) && (cycle || s.edge_count() >= s.vertex_count()), std::move(w));
}

Outcome c15(Context& c) {
  const FiniteGroup& g = c.g;
  std::uint32_t max_order = 1;
  Elem arg = g.identity();
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) > max_order) max_order = g.element_order(x), arg = x;
  }
  const std::size_t limit = c.cfg.analysis.exact_independence_limit;
  IndependenceOptions opts{.exact_limit = limit, .node_budget = 20'000'000, .seeds = {g.cyclic_subgroup(arg)}};
  const auto full = independence_number(c.a.full_graph(), opts);
  const bool full_ok = full.value >= max_order && full.set.size() == full.value && is_independent(c.a.full_graph(), full.set);
  nlohmann::json w = {{"max_order", max_order},
                      {"full", {{"alpha", full.value}, {"kind", full.kind == BoundKind::exact ? "exact" : "lower-bound"},
                                {"set", c.cycles(full.set)}}}};
  bool induced_ok = true;
  if (!c.a.solvable()) {
    const NsGraph& s = c.a.induced_graph();
    const auto ind = independence_number(s, {.exact_limit = limit, .node_budget = 20'000'000, .seeds = {}});
    induced_ok = ind.set.size() == ind.value && is_independent(s, ind.set);
    // An independent set together with the radical stays inside each member's solvabilizer.
    IndexSet with_r = ind.set;
    with_r.insert(with_r.end(), c.a.radical().members.begin(), c.a.radical().members.end());
    std::sort(with_r.begin(), with_r.end());
    for (Elem x : ind.set) induced_ok = induced_ok && subset(with_r, c.sol(x));
    w["induced"] = {{"alpha", ind.value}, {"kind", ind.kind == BoundKind::exact ? "exact" : "lower-bound"},
                    {"set", c.cycles(ind.set)}};
  }
  return verdict(full_ok && induced_ok, std::move(w));
}

Outcome c16(Context& c) {
  if (c.a.solvable()) return na(kSolvableReason);
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& d : c.overgroups()) {
    if (d.missing_edge) {
      return verdict(false, {{"h_order", d.members.size()}, {"x", c.cyc(d.missing_edge->first)},
                             {"y", c.cyc(d.missing_edge->second)}});
    }
    subs.push_back({{"order", d.members.size()}, {"solvable", d.solvable}, {"edges", d.checked_edges}});
  }
  nlohmann::json quots = nlohmann::json::array();
  const SubgroupSet& r = c.a.radical();
  for (const auto& d : c.quotients()) {
    if (d.normal.size() == 1) continue;
    for (Elem x = 0; x < c.g.order(); ++x) {
      if (r.contains(x)) continue;
      const IndexSet& qs = d.table[d.q->coset_of[x]].members;
      for (Elem y = x + 1; y < c.g.order(); ++y) {
        if (r.contains(y)) continue;
        if (member(c.sol(x), y) != member(qs, d.q->coset_of[y])) {
          return verdict(false, {{"normal_order", d.normal.size()}, {"x", c.cyc(x)}, {"y", c.cyc(y)}});
        }
      }
    }
    quots.push_back({{"normal_order", d.normal.size()}, {"quotient_order", d.q->group.order()}});
  }
  return verdict(true, {{"overgroups", std::move(subs)}, {"quotients", std::move(quots)}});
}

Outcome c17(Context& c) {
  if (c.a.solvable()) return na(kSolvableReason);
  const std::size_t n = c.a.induced_order();
  std::size_t compared = 0;
  for (const auto& d : c.overgroups()) {
    ++compared;
    const std::size_t m = d.members.size() - d.radical_order;
    if (m >= n) return verdict(false, {{"h_order", d.members.size()}, {"vertices", m}, {"n", n}});
  }
  for (const auto& d : c.quotients()) {
    if (d.normal.size() == 1) continue;
    ++compared;
    const std::size_t m = d.q->group.order() - d.radical_order;
    if (m >= n) return verdict(false, {{"normal_order", d.normal.size()}, {"vertices", m}, {"n", n}});
  }
  return verdict(true, {{"n", n}, {"compared", compared}});
}

Outcome c18(Context& c) {
  const FiniteGroup& g = c.g;
  for (Elem x = 0; x < g.order(); ++x) {
    if (!subset(normalizer_of_cyclic(g, x), c.sol(x))) return verdict(false, {{"x", c.cyc(x)}, {"variant", "cyclic"}});
  }
  auto normalizer = [&](const SubgroupSet& h) {
    IndexSet k;
    for (Elem t = 0; t < g.order(); ++t) {
      bool ok = true;
      for (Elem s : h.generators) ok = ok && h.contains(g.conjugate(s, t));
      if (ok) k.push_back(t);
    }
    return k;
  };
  std::size_t local = 0;
  for (const auto& [members, solvable] : c.registry()) {
    if (!solvable) continue;
    const SubgroupSet h = as_subgroup(g, members);
    const IndexSet k = normalizer(h);
    ++local;
    for (Elem x : members) {
      if (!subset(k, c.sol(x))) return verdict(false, {{"x", c.cyc(x)}, {"h_order", members.size()}, {"variant", "local"}});
    }
  }
  return verdict(true, {{"elements", g.order()}, {"local_subgroups", local}});
}

Outcome c19(Context& c) {
  const FiniteGroup& g = c.g;
  for (Elem x = 0; x < g.order(); ++x) {
    const IndexSet cx = g.cyclic_subgroup(x);
    for (Elem s : g.generator_indices()) {
      if (!member(cx, g.conjugate(x, s))) {
        Outcome o = na("some cyclic subgroup is not normal");
        o.witness = {{"x", c.cyc(x)}, {"g", c.cyc(s)}};
        return o;
      }
    }
  }
  return verdict(c.a.solvable(), {{"all_cyclic_normal", true}, {"solvable", c.a.solvable()}});
}

Outcome c20(Context& c) {
  if (c.a.solvable()) return na(kSolvableReason);
  const NsGraph& s = c.a.induced_graph();
  const std::size_t n = s.vertex_count();
  std::size_t hi = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = s.degree(v);
    hi = std::max(hi, d);
    if (d + 3 > n) return verdict(false, {{"x", c.cyc(s.id(v))}, {"degree", d}, {"n", n}});
  }
  return verdict(true, {{"n", n}, {"max_degree", hi}});
}

Outcome c21(Context& c) {
  const NsGraph& s = c.a.full_graph();
  IndexSet isolated;
  for (Vertex v = 0; v < s.vertex_count(); ++v) {
    if (s.degree(v) == 0) isolated.push_back(s.id(v));
  }
  std::sort(isolated.begin(), isolated.end());
  return verdict(isolated == c.a.radical().members, {{"isolated", isolated.size()}, {"radical", c.a.radical().size()}});
}

using CheckFn = Outcome (*)(Context&);

CheckFn check_fn(std::string_view id) {
  static const std::map<std::string_view, CheckFn> fns = {
      {"C01", c01}, {"C02", c02}, {"C03", c03}, {"C04", c04}, {"C05", c05}, {"C06", c06}, {"C07", c07},
      {"C08", c08}, {"C09", c09}, {"C10", c10}, {"C11", c11}, {"C12", c12}, {"C13", c13}, {"C14", c14},
      {"C15", c15}, {"C16", c16}, {"C17", c17}, {"C18", c18}, {"C19", c19}, {"C20", c20}, {"C21", c21}};
  return fns.at(id);
}

CheckResult run_check(Context& ctx, const CheckInfo& info) {
  CheckResult r;
  r.id = info.id;
  r.name = info.name;
  r.statement = info.statement;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = check_fn(info.id)(ctx);
    r.status = o.status;
    r.witness = std::move(o.witness);
    r.reason = std::move(o.reason);
  } catch (const SearchBudgetExceeded& e) {
    r.status = CheckStatus::skipped;
    r.reason = e.what();
  } catch (const Error& e) {
    r.status = CheckStatus::fail;
    r.witness = {{"error", e.what()}};
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

CheckResult verify_check(Analysis& a, std::string_view id, const VerifyConfig& config) {
  const CheckInfo& info = find_check(id);
  Context ctx(a, config);
  return run_check(ctx, info);
}

VerificationReport verify_all(Analysis& a, const std::string& group_name, const VerifyConfig& config) {
  VerificationReport report;
  report.group = group_descriptor(a.group(), group_name);
  report.params = to_json(config.analysis);
  report.params["conjugator_samples"] = config.conjugator_samples;
  report.params["max_overgroups"] = config.max_overgroups;
  report.params["max_normal_subgroups"] = config.max_normal_subgroups;
  Context ctx(a, config);
  for (const auto& info : registered_checks()) {
    CheckResult r = run_check(ctx, info);
    switch (r.status) {
      case CheckStatus::pass: ++report.passed; break;
      case CheckStatus::fail: ++report.failed; break;
      case CheckStatus::skipped: ++report.skipped; break;
      case CheckStatus::not_applicable: ++report.not_applicable; break;
    }
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace nsg
