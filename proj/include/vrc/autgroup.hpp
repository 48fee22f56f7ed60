#pragma once

#include <optional>
#include <vector>

#include "vrc/rack.hpp"

namespace vrc {

// All bijections f with f s_x f^-1 = s_{f(x)}, materialized as a validated
// FiniteGroup. Search is the profile-pruned backtracker from the rack
// module; throws SizeCapError past `cap`.
FiniteGroup automorphism_group(const RackTable& r,
                               std::size_t cap = kDefaultGroupCap);

// Direct intertwining check; does not materialize the group.
bool is_virtual_structure(const RackTable& r, const Perm& f);

// A rack together with a distinguished automorphism.
struct VirtualRack {
  RackTable rack;
  Perm f;
};

// Validating constructor; throws std::invalid_argument if f is not an
// automorphism of r.
VirtualRack make_virtual_rack(RackTable r, Perm f);

// (R, s_x): the inner virtual structure at x. Never fails on a valid rack.
VirtualRack inner_virtual(const RackTable& r, int x);

// Witness psi in Aut(R) with psi f1 psi^-1 = f2, i.e. a virtual rack
// isomorphism (R, f1) -> (R, f2); nullopt when the two structures are not
// conjugate. Rejects inputs that are not virtual structures.
std::optional<Perm> virtual_isomorphic(const RackTable& r, const Perm& f1,
                                       const Perm& f2,
                                       std::size_t cap = kDefaultGroupCap);

struct VirtualClassification {
  RackTable rack;
  std::size_t aut_order = 0;
  std::vector<Perm> class_representatives;  // minimal member of each class
  std::vector<std::size_t> class_sizes;
  std::size_t v = 0;  // isomorphism classes of virtual structures
};

// Classifies virtual structures on r up to isomorphism: v equals the number
// of conjugacy classes of Aut(R).
VirtualClassification classify_virtual(const RackTable& r,
                                       std::size_t cap = kDefaultGroupCap);

}  // namespace vrc
