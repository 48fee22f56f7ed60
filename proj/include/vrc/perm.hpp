#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vrc/errors.hpp"

namespace vrc {

// A permutation of {0, ..., n-1} stored as its image sequence.
//
// Composition convention, fixed project-wide: compose(p, q) is the map
// x |-> p(q(x)), i.e. the right factor acts first. The rack axioms are
// sensitive to this; do not flip it.
class Perm {
public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

private:
  struct Unchecked {};
  Perm(Unchecked, std::vector<int> images) : img_(std::move(images)) {}

  std::vector<int> img_;

  friend Perm compose(const Perm& p, const Perm& q);
  friend Perm inverse(const Perm& p);
};

// x |-> p(q(x)); throws on degree mismatch.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

// Cycle lengths in descending order, fixed points included as 1s.
std::vector<int> cycle_type(const Perm& p);

bool is_even(const Perm& p);

// Cycle notation for CLI use: "(0 1)(2 3)", identity prints as "()".
std::string to_cycle_string(const Perm& p);
Perm parse_cycles(const std::string& text, int degree);

// A finite permutation group materialized as its full element list, sorted
// lexicographically by image sequence. Construction proves group-ness: the
// stored generators close onto exactly the element list.
class FiniteGroup {
public:
  // Subgroup generated by `generators`, materialized by breadth-first
  // closure. Throws SizeCapError if the element count exceeds `cap`.
  static FiniteGroup closure(std::vector<Perm> generators,
                             std::size_t cap = kDefaultGroupCap);

  // Wraps an explicit element list. Validates: no duplicates, identity and
  // all inverses present, and closure (a greedily extracted generating set
  // must span exactly the list without escaping it).
  static FiniteGroup from_elements(std::vector<Perm> elements,
                                   std::size_t cap = kDefaultGroupCap);

  int degree() const { return elems_.front().degree(); }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }
  const Perm& identity_element() const;

private:
  FiniteGroup(std::vector<Perm> elems, std::vector<Perm> gens)
      : elems_(std::move(elems)), gens_(std::move(gens)) {}

  std::vector<Perm> elems_;  // sorted, unique
  std::vector<Perm> gens_;
};

// Partition of G into conjugacy orbits. Classes are ordered by their minimal
// element; members within a class are sorted.
std::vector<std::vector<Perm>> conjugacy_classes(const FiniteGroup& g);

// Number of conjugacy classes, cross-checked internally against the Burnside
// average and orbit-stabilizer counts; a mismatch throws std::logic_error.
std::size_t class_number(const FiniteGroup& g);

// Full centralizer of sigma inside Sym(degree), materialized by walking
// compatible cycle-to-cycle assignments rather than filtering all n! maps.
FiniteGroup centralizer_in_sym(const Perm& sigma,
                               std::size_t cap = kDefaultGroupCap);

FiniteGroup center(const FiniteGroup& g);

FiniteGroup symmetric_group(int degree, std::size_t cap = kDefaultGroupCap);
FiniteGroup alternating_group(int degree, std::size_t cap = kDefaultGroupCap);
FiniteGroup cyclic_group(int degree);

}  // namespace vrc
