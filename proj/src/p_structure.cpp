#include "ttspec/p_structure.hpp"

#include <string>

#include "ttspec/error.hpp"
#include "ttspec/ext_nat.hpp"

namespace ttspec {

namespace {

void require_prime(int p)
{
  if (!is_prime(p))
    throw DomainError(std::to_string(p) + " is not a prime");
}

void require_contained(const PermGroup &g, const Subgroup &k, const Subgroup &h)
{
  require_member_of(g, k, "K");
  require_member_of(g, h, "H");
  if (!h.contains(k))
    throw DomainError("K is not contained in H");
}

} // namespace

Subgroup o_p_core(const PermGroup &g, const Subgroup &h, int p)
{
  require_prime(p);
  require_member_of(g, h, "H");
  std::vector<Elem> gens;
  for (Elem e : h.members())
    if (g.element_order(e) % std::size_t(p) != 0)
      gens.push_back(e);
  Subgroup core = Subgroup::generated_by(g, gens);
  if (exact_log(std::int64_t(h.order() / core.order()), p) < 0 || !is_normal_in(g, core, h))
    throw InternalError("O^p postcondition failed");
  return core;
}

bool is_p_perfect(const PermGroup &g, const Subgroup &h, int p)
{
  return o_p_core(g, h, p) == h;
}

bool is_p_subnormal(const PermGroup &g, const Subgroup &k, const Subgroup &h, int p)
{
  require_prime(p);
  require_contained(g, k, h);
  return k.contains(o_p_core(g, h, p));
}

std::optional<PSubnormalTower> p_subnormal_tower(const SubgroupLattice &lattice,
                                                 const Subgroup &k, const Subgroup &h, int p)
{
  const PermGroup &g = lattice.group();
  if (!is_p_subnormal(g, k, h, p))
    return std::nullopt;

  // Work top-down: inside the p-group H_i / O^p(H), any proper subgroup
  // containing K / O^p(H) lies in a maximal one, which is normal of index p.
  std::vector<Subgroup> down{h};
  while (down.back().order() > k.order()) {
    const Subgroup &top = down.back();
    const std::size_t target = top.order() / std::size_t(p);
    const Subgroup *pick = nullptr;
    for (const Subgroup &m : lattice.subgroups()) {
      if (m.order() < target)
        continue;
      if (m.order() > target)
        break;
      if (top.contains(m) && m.contains(k) && is_normal_in(g, m, top)) {
        pick = &m;
        break;
      }
    }
    if (pick == nullptr)
      throw InternalError("no index-p normal step found in a p-subnormal pair");
    down.push_back(*pick);
  }

  PSubnormalTower tower;
  tower.prime = p;
  tower.steps.assign(down.rbegin(), down.rend());
  return tower;
}

} // namespace ttspec
