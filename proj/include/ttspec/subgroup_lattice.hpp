#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ttspec/perm_group.hpp"

namespace ttspec {

using ClassId = std::size_t;

struct SubgroupClass
{
  ClassId id = 0;
  std::size_t representative = 0;      // index into SubgroupLattice::subgroups()
  std::vector<std::size_t> members;    // all conjugates, as subgroup indices
  std::size_t class_size = 0;
  std::size_t order = 0;
  std::size_t normalizer_order = 0;
  std::string name;                    // e.g. "C_2#0", "O6#0"
};

// All subgroups of a finite group, sorted by (order, member list), together
// with their partition into conjugacy classes. Class 0 is the trivial
// subgroup, the last class is the whole group.
class SubgroupLattice
{
public:
  explicit SubgroupLattice(PermGroup group);

  static std::shared_ptr<const SubgroupLattice> make(PermGroup group)
  {
    return std::make_shared<const SubgroupLattice>(std::move(group));
  }

  const PermGroup &group() const { return group_; }
  const std::vector<Subgroup> &subgroups() const { return subgroups_; }
  const std::vector<SubgroupClass> &classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }

  const SubgroupClass &cls(ClassId c) const { return classes_.at(c); }
  const Subgroup &representative(ClassId c) const
  { return subgroups_[classes_.at(c).representative]; }

  ClassId trivial_class() const { return 0; }
  ClassId whole_class() const { return classes_.size() - 1; }

  // Throws DomainError if s is not one of this group's subgroups.
  std::size_t index_of(const Subgroup &s) const;
  ClassId class_of(const Subgroup &s) const;
  ClassId class_of_index(std::size_t subgroup_index) const { return class_of_subgroup_[subgroup_index]; }

  // Accepts a full name ("C_2#0"), a base name when unique ("C_4", "O6"),
  // "1" for the trivial class and "G" for the whole group.
  std::optional<ClassId> find_class(const std::string &name) const;

  // Some conjugate of class h lies inside the representative of class k.
  // Decided from the class member lists, independently of transporters.
  bool class_subconjugate(ClassId h, ClassId k) const { return subconj_[h * classes_.size() + k]; }

  // Primes dividing |G|, ascending.
  std::vector<int> order_primes() const;

  bool is_square_free() const;

private:
  PermGroup group_;
  std::vector<Subgroup> subgroups_;
  std::map<std::vector<Elem>, std::size_t> index_;
  std::vector<SubgroupClass> classes_;
  std::vector<ClassId> class_of_subgroup_;
  std::vector<bool> subconj_;
};

// Every subgroup exactly once, sorted by (order, member list). Seeds with the
// cyclic subgroups and closes under joins with cyclic subgroups.
std::vector<Subgroup> all_subgroups(const PermGroup &g);

// |N_G(H,K)| = #{g in G : H^g <= K}, by scanning G.
std::size_t n_transporter_size(const PermGroup &g, const Subgroup &h, const Subgroup &k);

bool is_subconjugate(const PermGroup &g, const Subgroup &h, const Subgroup &k);
// h normal in the whole group
bool is_normal(const PermGroup &g, const Subgroup &h);
// h normal in k (h <= k required)
bool is_normal_in(const PermGroup &g, const Subgroup &h, const Subgroup &k);
Subgroup normalizer(const PermGroup &g, const Subgroup &h);
std::size_t index(const PermGroup &g, const Subgroup &h);

} // namespace ttspec
