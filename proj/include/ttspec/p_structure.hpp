#pragma once

#include <optional>
#include <vector>

#include "ttspec/perm_group.hpp"
#include "ttspec/subgroup_lattice.hpp"

namespace ttspec {

// K = steps[0] < steps[1] < ... < steps[length] = H, each step normal of
// index p in the next.
struct PSubnormalTower
{
  int prime = 0;
  std::vector<Subgroup> steps;
  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
};

// O^p(H): the subgroup of H generated by its elements of order prime to p.
Subgroup o_p_core(const PermGroup &g, const Subgroup &h, int p);

bool is_p_perfect(const PermGroup &g, const Subgroup &h, int p);

// K <= H required. True iff K contains O^p(H).
bool is_p_subnormal(const PermGroup &g, const Subgroup &k, const Subgroup &h, int p);

// Builds a tower from K up to H of length log_p[H:K], or nullopt when K is
// not p-subnormal in H. At each step the index-p normal subgroup of the
// current top that contains K is chosen as the smallest in canonical order.
std::optional<PSubnormalTower> p_subnormal_tower(const SubgroupLattice &lattice,
                                                 const Subgroup &k, const Subgroup &h, int p);

} // namespace ttspec
