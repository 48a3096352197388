#include "ttspec/subgroup_lattice.hpp"

#include <algorithm>
#include <set>

#include "ttspec/error.hpp"
#include "ttspec/ext_nat.hpp"

namespace ttspec {

std::vector<Subgroup> all_subgroups(const PermGroup &g)
{
  struct Entry
  {
    Subgroup sub;
    std::vector<Elem> gens;
  };

  std::map<std::vector<Elem>, std::size_t> seen;
  std::vector<Entry> found;

  auto add = [&](Subgroup s, std::vector<Elem> gens) {
    auto [it, inserted] = seen.emplace(s.members(), found.size());
    if (inserted)
      found.push_back({std::move(s), std::move(gens)});
  };

  std::vector<Elem> cyclic_gens;
  for (Elem e = 0; e < g.order(); ++e) {
    std::size_t before = found.size();
    std::vector<Elem> gens;
    if (e != PermGroup::identity())
      gens.push_back(e);
    Subgroup cyc = Subgroup::generated_by(g, gens);
    add(std::move(cyc), gens);
    if (found.size() != before && e != PermGroup::identity())
      cyclic_gens.push_back(e);
  }

  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Elem c : cyclic_gens) {
      if (found[head].sub.contains(c))
        continue;
      std::vector<Elem> gens = found[head].gens;
      gens.push_back(c);
      Subgroup join = Subgroup::generated_by(g, gens);
      add(std::move(join), std::move(gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto &e : found)
    out.push_back(std::move(e.sub));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t n_transporter_size(const PermGroup &g, const Subgroup &h, const Subgroup &k)
{
  require_member_of(g, h, "H");
  require_member_of(g, k, "K");
  if (h.order() > k.order() || k.order() % h.order() != 0)
    return 0;
  const std::vector<Elem> gens = h.generators(g);
  std::size_t count = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    bool inside = std::all_of(gens.begin(), gens.end(),
                              [&](Elem s) { return k.contains(g.conjugate(s, x)); });
    if (inside)
      ++count;
  }
  return count;
}

bool is_subconjugate(const PermGroup &g, const Subgroup &h, const Subgroup &k)
{
  return n_transporter_size(g, h, k) > 0;
}

bool is_normal_in(const PermGroup &g, const Subgroup &h, const Subgroup &k)
{
  require_member_of(g, h, "H");
  require_member_of(g, k, "K");
  if (!k.contains(h))
    throw DomainError("is_normal_in: H is not contained in K");
  const std::vector<Elem> hg = h.generators(g);
  for (Elem x : k.generators(g))
    for (Elem s : hg)
      if (!h.contains(g.conjugate(s, x)))
        return false;
  return true;
}

bool is_normal(const PermGroup &g, const Subgroup &h)
{
  return is_normal_in(g, h, Subgroup::whole(g));
}

Subgroup normalizer(const PermGroup &g, const Subgroup &h)
{
  require_member_of(g, h, "H");
  const std::vector<Elem> gens = h.generators(g);
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    bool fixes = std::all_of(gens.begin(), gens.end(),
                             [&](Elem s) { return h.contains(g.conjugate(s, x)); });
    if (fixes)
      members.push_back(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

std::size_t index(const PermGroup &g, const Subgroup &h)
{
  require_member_of(g, h, "H");
  return g.order() / h.order();
}

// ---------------------------------------------------------------------------

SubgroupLattice::SubgroupLattice(PermGroup group)
: group_(std::move(group)), subgroups_(all_subgroups(group_))
{
  const PermGroup &g = group_;
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    index_.emplace(subgroups_[i].members(), i);

  constexpr ClassId kUnassigned = ClassId(-1);
  class_of_subgroup_.assign(subgroups_.size(), kUnassigned);
  std::map<std::size_t, std::size_t> per_order_count;

  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (class_of_subgroup_[i] != kUnassigned)
      continue;
    SubgroupClass c;
    c.id = classes_.size();
    c.representative = i;
    c.order = subgroups_[i].order();
    const std::vector<Elem> gens = subgroups_[i].generators(g);
    std::set<std::size_t> conjugates;
    for (Elem x = 0; x < g.order(); ++x) {
      bool normalizes = std::all_of(gens.begin(), gens.end(), [&](Elem s) {
        return subgroups_[i].contains(g.conjugate(s, x));
      });
      if (normalizes) {
        ++c.normalizer_order;
        conjugates.insert(i);
        continue;
      }
      conjugates.insert(index_.at(subgroups_[i].conjugated_by(g, x).members()));
    }
    c.members.assign(conjugates.begin(), conjugates.end());
    c.class_size = c.members.size();
    for (std::size_t m : c.members)
      class_of_subgroup_[m] = c.id;

    bool cyclic = false;
    for (Elem e : subgroups_[i].members())
      if (g.element_order(e) == c.order) {
        cyclic = true;
        break;
      }
    std::size_t idx = per_order_count[c.order]++;
    c.name = (cyclic ? "C_" : "O") + std::to_string(c.order) + "#" + std::to_string(idx);
    classes_.push_back(std::move(c));
  }

  const std::size_t nc = classes_.size();
  subconj_.assign(nc * nc, false);
  for (ClassId h = 0; h < nc; ++h)
    for (ClassId k = 0; k < nc; ++k) {
      if (classes_[k].order % classes_[h].order != 0)
        continue;
      const Subgroup &rep_k = representative(k);
      subconj_[h * nc + k] = std::any_of(
          classes_[h].members.begin(), classes_[h].members.end(),
          [&](std::size_t m) { return rep_k.contains(subgroups_[m]); });
    }
}

std::size_t SubgroupLattice::index_of(const Subgroup &s) const
{
  require_member_of(group_, s, "subgroup");
  auto it = index_.find(s.members());
  if (it == index_.end())
    throw DomainError("not a subgroup of this group");
  return it->second;
}

ClassId SubgroupLattice::class_of(const Subgroup &s) const
{
  return class_of_subgroup_[index_of(s)];
}

std::optional<ClassId> SubgroupLattice::find_class(const std::string &name) const
{
  if (name == "1")
    return trivial_class();
  if (name == "G")
    return whole_class();
  std::optional<ClassId> base_match;
  std::size_t base_hits = 0;
  for (const auto &c : classes_) {
    if (c.name == name)
      return c.id;
    if (c.name.substr(0, c.name.find('#')) == name) {
      base_match = c.id;
      ++base_hits;
    }
  }
  if (base_hits == 1)
    return base_match;
  return std::nullopt;
}

std::vector<int> SubgroupLattice::order_primes() const
{
  std::vector<int> out;
  std::size_t n = group_.order();
  for (std::size_t p = 2; p <= n; ++p)
    if (n % p == 0 && is_prime(std::int64_t(p)))
      out.push_back(int(p));
  return out;
}

bool SubgroupLattice::is_square_free() const
{
  std::size_t n = group_.order();
  for (int p : order_primes())
    if (n % (std::size_t(p) * std::size_t(p)) == 0)
      return false;
  return true;
}

} // namespace ttspec
