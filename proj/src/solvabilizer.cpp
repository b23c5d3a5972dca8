#include "nsg/solvabilizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "nsg/errors.hpp"

namespace nsg {

bool sol_pair(SubgroupEngine& engine, Elem x, Elem y) { return engine.pair_solvable(x, y); }

IndexSet coset_decomposition(const FiniteGroup& g, Elem x, std::span<const Elem> members) {
  const IndexSet cyclic = g.cyclic_subgroup(x);
  std::vector<char> in_members(g.order(), 0);
  std::vector<char> covered(g.order(), 0);
  for (Elem m : members) in_members[m] = 1;

  IndexSet reps;
  for (Elem m : members) {
    if (covered[m]) continue;
    reps.push_back(m);
    for (Elem c : cyclic) {
      const Elem e = g.mul(m, c);
      if (!in_members[e] || covered[e]) {
        throw InvariantViolation("coset decomposition: coset of " + std::to_string(m) +
                                 " leaves the solvabilizer of " + std::to_string(x));
      }
      covered[e] = 1;
    }
  }
  return reps;
}

void check_solvabilizer(SubgroupEngine& engine, const SolvabilizerResult& r) {
  const FiniteGroup& g = engine.group();
  auto fail = [&](const std::string& what) {
    throw InvariantViolation("solvabilizer of element " + std::to_string(r.element) + ": " + what);
  };
  auto contains = [&](Elem e) { return std::binary_search(r.members.begin(), r.members.end(), e); };

  if (!contains(r.element)) fail("does not contain the element itself");
  if (r.degree != g.order() - r.members.size()) fail("degree != |G| - |Sol_G(x)|");

  const SubgroupSet& radical = engine.solvable_radical();
  for (Elem e : radical.members) {
    if (!contains(e)) fail("misses radical element " + std::to_string(e));
  }
  for (Elem e : normalizer_of_cyclic(g, r.element)) {
    if (!contains(e)) fail("misses normalizer element " + std::to_string(e));
  }
  const std::size_t n = r.members.size();
  if (n % radical.size() != 0) fail("size not divisible by |Sol(G)|");
  if (n % g.element_order(r.element) != 0) fail("size not divisible by o(x)");
  if (n % centralizer(g, r.element).size() != 0) fail("size not divisible by |C_G(x)|");

  std::vector<char> seen(g.order(), 0);
  std::size_t covered = 0;
  for (Elem rep : r.coset_reps) {
    for (Elem c : g.cyclic_subgroup(r.element)) {
      const Elem e = g.mul(rep, c);
      if (seen[e] || !contains(e)) fail("coset decomposition is not a disjoint cover");
      seen[e] = 1;
      ++covered;
    }
  }
  if (covered != n) fail("coset decomposition does not cover the solvabilizer");
}

namespace {

SolvabilizerResult make_result(const FiniteGroup& g, Elem x, IndexSet members, bool transported) {
  SolvabilizerResult r;
  r.element = x;
  r.order = g.element_order(x);
  r.degree = g.order() - members.size();
  r.coset_reps = coset_decomposition(g, x, members);
  r.members = std::move(members);
  r.transported = transported;
  return r;
}

IndexSet direct_members(SubgroupEngine& engine, Elem x) {
  IndexSet members;
  for (Elem y = 0; y < engine.group().order(); ++y) {
    if (engine.pair_solvable(x, y)) members.push_back(y);
  }
  return members;
}

}  // namespace

SolvabilizerResult solvabilizer(SubgroupEngine& engine, Elem x, bool record_witnesses) {
  const FiniteGroup& g = engine.group();
  if (x >= g.order()) throw PreconditionError("solvabilizer: element index out of range");
  SolvabilizerResult r = make_result(g, x, direct_members(engine, x), false);
  if (record_witnesses) {
    std::vector<std::pair<Elem, std::uint64_t>> w;
    std::size_t next = 0;
    for (Elem y = 0; y < g.order(); ++y) {
      if (next < r.members.size() && r.members[next] == y) {
        ++next;
        continue;
      }
      w.emplace_back(y, engine.two_generated(x, y).key);
    }
    r.witnesses = std::move(w);
  }
  check_solvabilizer(engine, r);
  return r;
}

IndexSet solvabilizer_of_set(SubgroupEngine& engine, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.empty() || b.empty()) throw PreconditionError("solvabilizer_of_set: A and B must be nonempty");
  IndexSet out;
  for (Elem x : a) {
    if (std::all_of(b.begin(), b.end(), [&](Elem y) { return engine.pair_solvable(x, y); })) {
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IndexSet conjugate_set(const FiniteGroup& g, std::span<const Elem> set, Elem conjugator) {
  IndexSet out;
  out.reserve(set.size());
  for (Elem e : set) out.push_back(g.conjugate(e, conjugator));
  std::sort(out.begin(), out.end());
  return out;
}

SolvabilizerTable all_solvabilizers(SubgroupEngine& engine, const ConjugacyClasses& classes,
                                    const SolvabilizerOptions& options) {
  const FiniteGroup& g = engine.group();
  const std::size_t class_count = classes.classes.size();

  // A class whose representative has a coprime power in an earlier class
  // reuses that class's solvabilizer.
  struct Link {
    std::uint32_t source_class;
    Elem conjugator;  // rep^i = conjugator * source_rep * conjugator^-1
  };
  std::vector<std::optional<Link>> links(class_count);
  std::vector<std::uint32_t> direct;
  for (std::uint32_t c = 0; c < class_count; ++c) {
    const Elem rep = classes.classes[c].front();
    const std::uint32_t o = g.element_order(rep);
    for (std::uint32_t i = 2; i < o && !links[c]; ++i) {
      if (std::gcd(i, o) != 1) continue;
      const Elem p = g.power(rep, i);
      if (classes.class_of[p] < c) links[c] = Link{classes.class_of[p], classes.conjugator[p]};
    }
    if (!links[c]) direct.push_back(c);
  }

  std::vector<IndexSet> rep_members(class_count);
  {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < direct.size();) {
        const std::uint32_t c = direct[k];
        rep_members[c] = direct_members(engine, classes.classes[c].front());
      }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, direct.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }
  for (std::uint32_t c = 0; c < class_count; ++c) {
    if (links[c]) rep_members[c] = conjugate_set(g, rep_members[links[c]->source_class], links[c]->conjugator);
  }

  SolvabilizerTable table;
  table.direct_scans = direct.size();
  table.coprime_links = class_count - direct.size();
  table.results.resize(g.order());
  std::vector<Elem> pool;
  for (std::uint32_t c = 0; c < class_count; ++c) {
    const IndexSet& cls = classes.classes[c];
    for (Elem y : cls) {
      const bool is_rep = y == cls.front();
      IndexSet members = is_rep ? rep_members[c] : conjugate_set(g, rep_members[c], classes.conjugator[y]);
      const bool transported = !is_rep || links[c].has_value();
      table.results[y] = make_result(g, y, std::move(members), transported);
      if (transported) pool.push_back(y);
    }
  }
  table.transported = pool.size();

  const auto audit_count = static_cast<std::size_t>(
      std::ceil(std::clamp(options.audit_fraction, 0.0, 1.0) * static_cast<double>(pool.size())));
  std::mt19937_64 rng(options.seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(audit_count, pool.size()));
  std::sort(pool.begin(), pool.end());
  for (Elem y : pool) {
    if (direct_members(engine, y) != table.results[y].members) {
      throw InvariantViolation("audit: transported solvabilizer of element " + std::to_string(y) +
                               " differs from a direct scan");
    }
  }
  table.audited = pool.size();

  for (const auto& r : table.results) check_solvabilizer(engine, r);
  return table;
}

OrdSolProfile ord_sol(const SolvabilizerTable& table) {
  OrdSolProfile out;
  for (const auto& r : table.results) ++out[r.members.size()];
  return out;
}

}  // namespace nsg
