#include "nsg/subgroup.hpp"

#include <algorithm>

#include "nsg/errors.hpp"

namespace nsg {

std::uint64_t canonical_key(std::span<const Elem> members) noexcept {
  // splitmix64 finalizer folded over the sorted indices.
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ members.size();
  for (Elem e : members) {
    std::uint64_t z = h + 0x9e3779b97f4a7c15ull + e;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h = z ^ (z >> 31);
  }
  return h;
}

bool SubgroupSet::contains(Elem e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

namespace {

// Closure of `gens` by right multiplication, breadth-first from the identity.
IndexSet close_under(const FiniteGroup& g, std::span<const Elem> gens, std::vector<char>& in_set) {
  IndexSet members{g.identity()};
  in_set[g.identity()] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Elem e = members[head];
    for (Elem s : gens) {
      const Elem p = g.mul(e, s);
      if (!in_set[p]) {
        in_set[p] = 1;
        members.push_back(p);
      }
    }
  }
  return members;
}

SubgroupSet finish(IndexSet members, IndexSet generators) {
  std::sort(members.begin(), members.end());
  SubgroupSet out;
  out.key = canonical_key(members);
  out.members = std::move(members);
  out.generators = std::move(generators);
  return out;
}

IndexSet dedup_generators(std::span<const Elem> seed) {
  IndexSet gens;
  for (Elem e : seed) {
    if (e != 0 && std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  }
  return gens;
}

Elem commutator(const FiniteGroup& g, Elem a, Elem b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

}  // namespace

SubgroupSet closure(const FiniteGroup& g, std::span<const Elem> seed) {
  for (Elem e : seed) {
    if (e >= g.order()) throw PreconditionError("closure: element index out of range");
  }
  IndexSet gens = dedup_generators(seed);
  std::vector<char> in_set(g.order(), 0);
  IndexSet members = close_under(g, gens, in_set);
  return finish(std::move(members), std::move(gens));
}

SubgroupSet as_subgroup(const FiniteGroup& g, IndexSet members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != g.identity()) {
    throw PreconditionError("as_subgroup: set does not contain the identity");
  }
  std::vector<char> in_members(g.order(), 0);
  for (Elem e : members) in_members[e] = 1;

  // Greedy generating set: add any member not yet reached.
  IndexSet gens;
  std::vector<char> reached(g.order(), 0);
  std::size_t reached_count = 1;
  reached[0] = 1;
  for (Elem e : members) {
    if (reached[e]) continue;
    gens.push_back(e);
    std::fill(reached.begin(), reached.end(), 0);
    IndexSet sub = close_under(g, gens, reached);
    for (Elem s : sub) {
      if (!in_members[s]) throw PreconditionError("as_subgroup: set is not closed");
    }
    reached_count = sub.size();
  }
  if (reached_count != members.size()) throw PreconditionError("as_subgroup: set is not closed");
  return finish(std::move(members), std::move(gens));
}

SubgroupSet derived_subgroup(const FiniteGroup& g, const SubgroupSet& s) {
  IndexSet gens;
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < s.generators.size(); ++j) {
      const Elem c = commutator(g, s.generators[i], s.generators[j]);
      if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
    }
  }
  std::vector<char> in_set(g.order(), 0);
  IndexSet members = close_under(g, gens, in_set);

  // Normal closure in S: conjugates of generators of the current term by
  // generators of S must stay inside.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem t : s.generators) {
      const Elem c = g.conjugate(gens[i], t);
      if (in_set[c]) continue;
      gens.push_back(c);
      std::fill(in_set.begin(), in_set.end(), 0);
      members = close_under(g, gens, in_set);
    }
  }
  return finish(std::move(members), std::move(gens));
}

bool is_solvable_uncached(const FiniteGroup& g, SubgroupSet& s) {
  std::vector<std::size_t> sizes{s.size()};
  SubgroupSet term = s;
  while (term.size() > 1) {
    SubgroupSet next = derived_subgroup(g, term);
    if (next.size() == term.size()) break;
    sizes.push_back(next.size());
    term = std::move(next);
  }
  s.solvable = term.size() == 1;
  s.derived_sizes = std::move(sizes);
  return *s.solvable;
}

bool is_normal(const FiniteGroup& g, const SubgroupSet& s) {
  for (Elem t : g.generator_indices()) {
    for (Elem e : s.generators) {
      if (!s.contains(g.conjugate(e, t))) return false;
    }
  }
  return true;
}

IndexSet QuotientGroup::project(std::span<const Elem> elements) const {
  IndexSet out;
  out.reserve(elements.size());
  for (Elem e : elements) out.push_back(coset_of[e]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QuotientGroup quotient_group(const FiniteGroup& g, const SubgroupSet& n) {
  if (!is_normal(g, n)) throw PreconditionError("quotient_group: subgroup is not normal");

  constexpr auto kUnassigned = static_cast<Elem>(-1);
  std::vector<Elem> coset_of(g.order(), kUnassigned);
  std::vector<Elem> reps;
  for (Elem e = 0; e < g.order(); ++e) {
    if (coset_of[e] != kUnassigned) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(e);
    for (Elem m : n.members) coset_of[g.mul(e, m)] = id;
  }

  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = coset_of[g.mul(reps[a], reps[b])];
  }
  IndexSet gens;
  for (Elem s : g.generator_indices()) gens.push_back(coset_of[s]);

  return QuotientGroup{&g, n, std::move(reps), std::move(coset_of),
                       FiniteGroup::from_table(std::move(table), q, gens)};
}

SubgroupSet SubgroupEngine::two_generated(Elem x, Elem y) const {
  const Elem seed[] = {std::min(x, y), std::max(x, y)};
  return nsg::closure(*group_, seed);
}

bool SubgroupEngine::is_solvable(SubgroupSet& s) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = verdicts_.find(s.members); it != verdicts_.end()) {
      ++verdict_hits_;
      s.solvable = it->second.solvable;
      s.derived_sizes = it->second.derived_sizes;
      return it->second.solvable;
    }
  }
  ++verdict_misses_;
  const bool verdict = is_solvable_uncached(*group_, s);
  std::unique_lock lock(mutex_);
  verdicts_.try_emplace(s.members, Verdict{verdict, *s.derived_sizes});
  return verdict;
}

bool SubgroupEngine::is_solvable(const SubgroupSet& s) {
  SubgroupSet copy = s;
  return is_solvable(copy);
}

bool SubgroupEngine::pair_solvable(Elem x, Elem y) {
  if (x > y) std::swap(x, y);
  const std::uint64_t pair_key = (std::uint64_t{x} << 32) | y;
  {
    std::shared_lock lock(mutex_);
    if (auto it = pairs_.find(pair_key); it != pairs_.end()) {
      ++pair_hits_;
      return it->second;
    }
  }
  ++pair_misses_;
  SubgroupSet h = two_generated(x, y);
  const bool verdict = is_solvable(h);
  std::unique_lock lock(mutex_);
  pairs_.emplace(pair_key, verdict);
  verdicts_.at(h.members).two_generated = true;
  return verdict;
}

const SubgroupSet& SubgroupEngine::solvable_radical() {
  std::call_once(radical_once_, [this] {
    const FiniteGroup& g = *group_;
    IndexSet members;
    for (Elem x = 0; x < g.order(); ++x) {
      bool all = true;
      for (Elem y = 0; y < g.order() && all; ++y) all = pair_solvable(x, y);
      if (all) members.push_back(x);
    }

    std::vector<char> in_r(g.order(), 0);
    for (Elem e : members) in_r[e] = 1;
    for (Elem a : members) {
      if (!in_r[g.inv(a)]) throw InvariantViolation("radical: not closed under inverse");
      for (Elem b : members) {
        if (!in_r[g.mul(a, b)]) throw InvariantViolation("radical: not closed under products");
      }
    }
    SubgroupSet r = as_subgroup(g, std::move(members));
    if (!nsg::is_normal(g, r)) throw InvariantViolation("radical: not normal");
    if (!is_solvable(r)) throw InvariantViolation("radical: not solvable");
    radical_ = std::move(r);
  });
  return *radical_;
}

std::map<IndexSet, bool> SubgroupEngine::registry() const {
  std::shared_lock lock(mutex_);
  std::map<IndexSet, bool> out;
  for (const auto& [members, v] : verdicts_) {
    if (v.two_generated) out.emplace(members, v.solvable);
  }
  return out;
}

SubgroupEngine::Stats SubgroupEngine::stats() const {
  return Stats{verdict_hits_.load(), verdict_misses_.load(), pair_hits_.load(), pair_misses_.load()};
}

}  // namespace nsg
