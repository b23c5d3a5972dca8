#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nsg/permutation.hpp"

namespace nsg {

/// Position of an element in FiniteGroup::elements().
using Elem = std::uint32_t;

/// Sorted, duplicate-free list of element indices.
using IndexSet = std::vector<Elem>;

inline constexpr std::size_t kDefaultOrderGuard = 2000;

struct GroupOptions {
  std::size_t order_guard = kDefaultOrderGuard;
};

/// A fully enumerated permutation group. Immutable after construction, so
/// concurrent readers need no synchronization.
///
/// Element 0 is always the identity. Products go through a dense Cayley
/// table, so mul() and inv() are O(1).
class FiniteGroup {
 public:
  /// Breadth-first closure of `generators` starting at the identity. The
  /// element order depends only on the generator order.
  ///
  /// Throws ResourceLimitError("order_guard") when the closure grows past the guard.
  static FiniteGroup generate(std::span<const Permutation> generators, std::size_t degree,
                              const GroupOptions& options = {});

  /// Builds a group from a multiplication table on 0..n-1, keeping that
  /// index order. Elements are realized by the right regular action, so
  /// element k acts as i -> table[i][k]. Index 0 must be the identity.
  static FiniteGroup from_table(std::vector<Elem> table, std::size_t order,
                                std::span<const Elem> generator_indices);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  Elem identity() const noexcept { return 0; }

  std::span<const Permutation> elements() const noexcept { return elements_; }
  const Permutation& element(Elem e) const { return elements_[e]; }
  std::span<const Permutation> generators() const noexcept { return generators_; }
  /// Element indices of the generators, identity generators dropped.
  std::span<const Elem> generator_indices() const noexcept { return generator_indices_; }

  /// Exact lookup; returns false if p is not in the group.
  bool find(const Permutation& p, Elem& out) const;
  Elem index_of(const Permutation& p) const;

  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t{a} * order() + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// g * x * g^-1
  Elem conjugate(Elem x, Elem g) const noexcept { return mul(mul(g, x), inv(g)); }
  Elem power(Elem x, std::uint64_t k) const noexcept;

  std::uint32_t element_order(Elem e) const noexcept { return orders_[e]; }
  /// Sorted index set of <x>.
  IndexSet cyclic_subgroup(Elem x) const;

  bool is_abelian() const noexcept;

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Elem> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem> index_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
};

/// Conjugacy classes with a conjugating transversal.
struct ConjugacyClasses {
  /// Classes in order of their least element; each class is sorted and its
  /// first entry is the representative.
  std::vector<IndexSet> classes;
  std::vector<std::uint32_t> class_of;
  /// conjugator[y] = g with y = g * rep * g^-1, rep the representative of y's class.
  std::vector<Elem> conjugator;

  Elem representative(Elem e) const { return classes[class_of[e]].front(); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

IndexSet centralizer(const FiniteGroup& g, Elem x);

/// {h : h<x>h^-1 = <x>}
IndexSet normalizer_of_cyclic(const FiniteGroup& g, Elem x);

/// Per-element summary.
struct ElementInfo {
  Elem index = 0;
  std::uint32_t order = 1;
  std::size_t centralizer_size = 0;
  std::uint32_t class_id = 0;
  IndexSet cyclic_subgroup;
};

ElementInfo element_info(const FiniteGroup& g, const ConjugacyClasses& classes, Elem x);

/// Generator file: a "degree N" line followed by one cycle-notation
/// permutation per line. '#' starts a comment; blank lines are ignored.
struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

GeneratorFile parse_generator_file(std::string_view contents);
GeneratorFile read_generator_file(const std::string& path);
std::string format_generator_file(const GeneratorFile& file);

}  // namespace nsg
