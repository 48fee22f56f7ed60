#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vrc/perm.hpp"

namespace vrc {

// A finite rack in s-map form: rows[x] is the symmetry s_x, and the table
// satisfies s_x s_y = s_{s_x(y)} s_x for all x, y. The binary-operation view
// is x |> y = s_y(x); files and JSON serialize the s-map rows.
struct RackTable {
  int n = 0;
  std::vector<Perm> rows;

  friend bool operator==(const RackTable& a, const RackTable& b) = default;
};

enum class RackViolationKind { NotBijective, SelfDistributivity };

struct RackViolation {
  int x = 0;
  int y = -1;  // -1 for row-level violations
  RackViolationKind kind = RackViolationKind::NotBijective;
};

// Checks a candidate table and either returns it validated or reports every
// violated triple.
std::variant<RackTable, std::vector<RackViolation>> validate_rack(
    int n, const std::vector<std::vector<int>>& rows);

// Convenience wrapper; throws std::invalid_argument on any violation.
RackTable make_rack(int n, const std::vector<std::vector<int>>& rows);

bool is_quandle(const RackTable& r);

// Every row equals sigma.
RackTable permutation_rack(int n, const Perm& sigma);

RackTable trivial_quandle(int n);

// A finite group as an explicit multiplication table over indices 0..n-1.
// Associativity, identity, and inverse laws are checked on construction.
struct GroupTable {
  int n = 0;
  std::vector<std::vector<int>> product;
  std::vector<int> inverse;
  int identity = 0;

  static GroupTable from_product_table(std::vector<std::vector<int>> product);
  static GroupTable from_permutation_group(const FiniteGroup& g);
  static GroupTable cyclic(int n);

  int mul(int a, int b) const { return product[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }
  bool is_central(int g) const;
};

// Quandle on all of G with s_x(y) = x y x^-1.
RackTable conjugation_quandle(const GroupTable& g);

// Takasaki kei of a direct sum of cyclic groups: row g is the point
// reflection h |-> 2g - h taken componentwise. Elements are indexed in mixed
// radix with the last factor varying fastest.
RackTable takasaki_kei(const std::vector<int>& cyclic_factors);

// takasaki_kei({n}).
RackTable dihedral_quandle(int n);

// psi need not be bijective; checks psi s_x = t_psi(x) psi for all x.
bool is_rack_homomorphism(const RackTable& r1, const RackTable& r2,
                          const std::vector<int>& psi);

// Backtracking search for bijections psi with psi s_x psi^-1 = t_psi(x),
// pruned on row profiles (cycle type, diagonal fixedness) with forced-image
// propagation. Calls sink for each witness; stops early if sink returns
// false. Exposed as the shared engine behind isomorphism testing and
// automorphism enumeration.
void for_each_rack_isomorphism(const RackTable& r1, const RackTable& r2,
                               const std::function<bool(const Perm&)>& sink);

std::optional<Perm> are_isomorphic(const RackTable& r1, const RackTable& r2);

// Table with points renamed by pi: new row x is pi s_{pi^-1(x)} pi^-1.
RackTable relabel(const RackTable& r, const Perm& pi);

// Lexicographically least flattened table over all relabelings, found by
// branch-and-bound. Two racks are isomorphic iff their canonical forms are
// identical tables.
RackTable canonical_form(const RackTable& r);

// True iff r equals its own canonical form; cheaper than computing the form
// when the answer is no.
bool is_canonical_form(const RackTable& r);

std::vector<int> flatten(const RackTable& r);

}  // namespace vrc
