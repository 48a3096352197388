#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ttspec {

using Point = std::uint32_t;
using Elem = std::uint32_t;  // index into PermGroup::elements()

inline constexpr std::size_t kDefaultOrderCap = 384;

// A bijection of {0..degree-1}, stored as its image list.
class Permutation
{
public:
  Permutation() = default;

  // Throws DomainError unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  // Disjoint-cycle notation over zero-based points, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point> &images() const { return images_; }

  // Right action: (a * b)(x) = b(a(x)), i.e. apply a first.
  Permutation operator*(const Permutation &rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Cycles of length >= 2, each starting at its smallest point, sorted.
  std::vector<std::vector<Point>> cycles() const;
  std::string to_string() const;

  // Embeds into a larger degree, shifting all points by offset.
  Permutation shifted(std::size_t offset, std::size_t new_degree) const;

  auto operator<=>(const Permutation &) const = default;

private:
  std::vector<Point> images_;
};

// Constructor tree for the standard families and direct products.
struct GroupDescription
{
  enum class Kind { cyclic, symmetric, alternating, dihedral, explicit_perms, product };

  Kind kind = Kind::cyclic;
  std::size_t n = 1;  // cyclic/sym/alt: parameter; dihedral: group order; explicit: degree
  std::vector<Permutation> generators;      // explicit_perms only
  std::vector<GroupDescription> factors;    // product only

  static GroupDescription cyclic(std::size_t n);
  static GroupDescription symmetric(std::size_t n);
  static GroupDescription alternating(std::size_t n);
  static GroupDescription dihedral(std::size_t order);
  static GroupDescription from_generators(std::size_t degree, std::vector<Permutation> gens);
  static GroupDescription product(std::vector<GroupDescription> factors);

  bool operator==(const GroupDescription &) const = default;
};

// A finite permutation group with a fully enumerated element table and a
// dense multiplication table. Immutable after construction.
class PermGroup
{
public:
  // Elements are enumerated breadth-first from the identity, multiplying
  // by generators in the given order. Throws DomainError if the order
  // exceeds cap or a generator has the wrong degree.
  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> generators,
                                   std::size_t cap = kDefaultOrderCap);

  static PermGroup construct(const GroupDescription &desc, std::size_t cap = kDefaultOrderCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation> &generators() const { return generators_; }
  const std::vector<Permutation> &elements() const { return elements_; }
  const Permutation &element(Elem e) const { return elements_[e]; }

  static constexpr Elem identity() { return 0; }

  Elem mult(Elem a, Elem b) const { return table_[std::size_t(a) * order() + b]; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  // g^-1 * h * g
  Elem conjugate(Elem h, Elem g) const { return mult(mult(inverse_[g], h), g); }
  std::size_t element_order(Elem a) const { return element_order_[a]; }

  // Index of a permutation, or -1 if it is not in the group.
  std::int64_t index_of(const Permutation &p) const;

  // Largest element order.
  std::size_t exponent() const;

private:
  PermGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> element_order_;
  std::unordered_map<std::string, Elem> lookup_;
};

// A subgroup of a PermGroup, stored as a sorted member list plus a
// membership mask. Only constructible through the validating factories,
// so every instance is closed and contains the identity.
class Subgroup
{
public:
  static Subgroup generated_by(const PermGroup &g, std::span<const Elem> gens);
  static Subgroup trivial(const PermGroup &g);
  static Subgroup whole(const PermGroup &g);
  // Throws DomainError unless members form a subgroup of g.
  static Subgroup from_members(const PermGroup &g, std::vector<Elem> members);

  std::size_t order() const { return members_.size(); }
  const std::vector<Elem> &members() const { return members_; }
  bool contains(Elem e) const { return mask_[e]; }
  bool contains(const Subgroup &other) const;
  std::size_t parent_order() const { return mask_.size(); }

  // Greedy generating set: members in increasing index order that are not
  // already in the subgroup generated so far.
  std::vector<Elem> generators(const PermGroup &g) const;

  // H^g = g^-1 H g
  Subgroup conjugated_by(const PermGroup &g, Elem x) const;

  // Canonical order: by order, then member list lexicographically.
  std::strong_ordering operator<=>(const Subgroup &rhs) const;
  bool operator==(const Subgroup &rhs) const { return members_ == rhs.members_; }

private:
  Subgroup(std::vector<Elem> members, std::size_t parent_order);

  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

// Throws DomainError if s was not built over a group of g's order.
void require_member_of(const PermGroup &g, const Subgroup &s, const char *what);

} // namespace ttspec
