#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "nsg/group.hpp"

namespace nsg {

/// Stable 64-bit hash of a sorted index set.
std::uint64_t canonical_key(std::span<const Elem> members) noexcept;

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept {
    return static_cast<std::size_t>(canonical_key(s));
  }
};

/// A subgroup of a parent FiniteGroup, stored as sorted element indices.
struct SubgroupSet {
  IndexSet members;
  std::uint64_t key = 0;
  /// A generating set (identity excluded). Empty for the trivial subgroup.
  IndexSet generators;
  std::optional<bool> solvable;
  /// |S|, |S'|, |S''|, ... down to the first repeated or trivial term.
  std::optional<std::vector<std::size_t>> derived_sizes;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Elem e) const;
};

/// Smallest subgroup containing `seed`. Uncached.
SubgroupSet closure(const FiniteGroup& g, std::span<const Elem> seed);

/// Wraps an index set the caller claims is a subgroup. Throws
/// PreconditionError if it is not closed or lacks the identity.
SubgroupSet as_subgroup(const FiniteGroup& g, IndexSet members);

/// Commutator subgroup S' = <[a,b] : a,b in S>, built as the normal closure
/// in S of the commutators of S's generators.
SubgroupSet derived_subgroup(const FiniteGroup& g, const SubgroupSet& s);

/// Walks the derived series. Fills s.solvable and s.derived_sizes.
bool is_solvable_uncached(const FiniteGroup& g, SubgroupSet& s);

/// g S g^-1 = S for every generator g of the parent.
bool is_normal(const FiniteGroup& g, const SubgroupSet& s);

/// G/N realized on coset indices. Coset 0 is N itself.
struct QuotientGroup {
  const FiniteGroup* parent = nullptr;
  SubgroupSet normal_subgroup;
  /// Least element index in each coset, ascending.
  std::vector<Elem> coset_reps;
  std::vector<Elem> coset_of;
  FiniteGroup group;

  /// Image of a subset of the parent, as sorted coset indices.
  IndexSet project(std::span<const Elem> elements) const;
};

/// Throws PreconditionError if N is not normal in G.
QuotientGroup quotient_group(const FiniteGroup& g, const SubgroupSet& n);

/// Caching front end over the subgroup operations for one parent group.
///
/// Solvability verdicts are memoized by subgroup key, and pair verdicts by
/// the unordered pair {x, y}. Both caches take a shared lock for lookups and
/// an exclusive lock for inserts, so one engine may serve several worker
/// threads.
class SubgroupEngine {
 public:
  explicit SubgroupEngine(const FiniteGroup& g) : group_(&g) {}

  SubgroupEngine(const SubgroupEngine&) = delete;
  SubgroupEngine& operator=(const SubgroupEngine&) = delete;

  const FiniteGroup& group() const noexcept { return *group_; }

  SubgroupSet closure(std::span<const Elem> seed) const { return nsg::closure(*group_, seed); }
  SubgroupSet two_generated(Elem x, Elem y) const;
  SubgroupSet derived_subgroup(const SubgroupSet& s) const {
    return nsg::derived_subgroup(*group_, s);
  }

  /// Cached verdict; also stamps s.solvable and s.derived_sizes.
  bool is_solvable(SubgroupSet& s);
  bool is_solvable(const SubgroupSet& s);

  /// Whether <x, y> is solvable. Records <x, y> in the registry.
  bool pair_solvable(Elem x, Elem y);

  bool is_normal(const SubgroupSet& s) const { return nsg::is_normal(*group_, s); }

  /// {x : <x, y> solvable for all y}. The result is asserted to be a normal
  /// solvable subgroup; any failure raises InvariantViolation.
  const SubgroupSet& solvable_radical();

  /// Every distinct two-generated subgroup seen by pair_solvable, with its
  /// verdict, ordered by member list.
  std::map<IndexSet, bool> registry() const;

  struct Stats {
    std::size_t verdict_hits = 0;
    std::size_t verdict_misses = 0;
    std::size_t pair_hits = 0;
    std::size_t pair_misses = 0;
  };
  Stats stats() const;

 private:
  struct Verdict {
    bool solvable;
    std::vector<std::size_t> derived_sizes;
    bool two_generated = false;
  };

  const FiniteGroup* group_;

  mutable std::shared_mutex mutex_;
  std::unordered_map<IndexSet, Verdict, IndexSetHash> verdicts_;
  std::unordered_map<std::uint64_t, bool> pairs_;
  std::atomic<std::size_t> verdict_hits_{0};
  std::atomic<std::size_t> verdict_misses_{0};
  std::atomic<std::size_t> pair_hits_{0};
  std::atomic<std::size_t> pair_misses_{0};

  std::once_flag radical_once_;
  std::optional<SubgroupSet> radical_;
};

}  // namespace nsg
