#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nsg/group.hpp"
#include "nsg/subgroup.hpp"

namespace nsg {

/// Sol_G(x) with derived quantities.
struct SolvabilizerResult {
  Elem element = 0;
  std::uint32_t order = 1;
  IndexSet members;
  /// |G| - |members|
  std::size_t degree = 0;
  /// members is the disjoint union of r * <x> over these r.
  IndexSet coset_reps;
  /// Set when the result came from conjugation or a coprime power instead
  /// of a direct scan.
  bool transported = false;
  /// (y, key of <x, y>) for each y outside members; filled on request.
  std::optional<std::vector<std::pair<Elem, std::uint64_t>>> witnesses;
};

/// Whether <x, y> is solvable.
bool sol_pair(SubgroupEngine& engine, Elem x, Elem y);

/// Direct scan of every y. Throws InvariantViolation if the result breaks
/// any structural invariant (see check_solvabilizer).
SolvabilizerResult solvabilizer(SubgroupEngine& engine, Elem x, bool record_witnesses = false);

/// Throws InvariantViolation unless x is in members, the radical and
/// N_G(<x>) are contained in members, |members| is divisible by |Sol(G)|,
/// o(x) and |C_G(x)|, the coset decomposition is exact, and degree matches.
void check_solvabilizer(SubgroupEngine& engine, const SolvabilizerResult& r);

/// Greedy decomposition of `members` into cosets r * <x>, least uncovered
/// member first. Throws InvariantViolation if some coset leaves members.
IndexSet coset_decomposition(const FiniteGroup& g, Elem x, std::span<const Elem> members);

/// {a in A : <a, b> solvable for all b in B}. Throws PreconditionError if A
/// or B is empty.
IndexSet solvabilizer_of_set(SubgroupEngine& engine, std::span<const Elem> a, std::span<const Elem> b);

/// {g s g^-1 : s in set}, sorted.
IndexSet conjugate_set(const FiniteGroup& g, std::span<const Elem> set, Elem conjugator);

struct SolvabilizerOptions {
  /// Share of transported results re-checked by a direct scan.
  double audit_fraction = 0.10;
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;
};

struct SolvabilizerTable {
  /// One result per element, indexed by element.
  std::vector<SolvabilizerResult> results;
  std::size_t direct_scans = 0;
  std::size_t coprime_links = 0;
  std::size_t transported = 0;
  std::size_t audited = 0;

  const SolvabilizerResult& operator[](Elem e) const { return results[e]; }
};

/// Sol_G(x) for every x. Class representatives are scanned directly unless
/// a coprime power of the representative falls in an earlier class; every
/// other element is obtained by conjugation. A seeded sample of the
/// transported results is re-scanned, and a mismatch throws
/// InvariantViolation.
SolvabilizerTable all_solvabilizers(SubgroupEngine& engine, const ConjugacyClasses& classes,
                                    const SolvabilizerOptions& options = {});

/// Ord(Sol_G) as a multiset: |Sol_G(x)| -> number of x.
using OrdSolProfile = std::map<std::size_t, std::size_t>;

OrdSolProfile ord_sol(const SolvabilizerTable& table);

}  // namespace nsg
