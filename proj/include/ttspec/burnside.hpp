#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ttspec/subgroup_lattice.hpp"

namespace ttspec {

// entry(H, K) = |(G/K)^H| over conjugacy classes in lattice order.
// Upper triangular: entry(H, K) != 0 iff H is subconjugate to K.
class MarksTable
{
public:
  explicit MarksTable(std::shared_ptr<const SubgroupLattice> lattice);

  std::size_t size() const { return n_; }
  std::int64_t entry(ClassId h, ClassId k) const { return entries_[h * n_ + k]; }
  const SubgroupLattice &lattice() const { return *lattice_; }
  const std::shared_ptr<const SubgroupLattice> &lattice_ptr() const { return lattice_; }

private:
  std::shared_ptr<const SubgroupLattice> lattice_;
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

MarksTable table_of_marks(std::shared_ptr<const SubgroupLattice> lattice);

// sum_K coeffs[K] * [G/K]
struct BurnsideElement
{
  std::vector<std::int64_t> coeffs;
  bool operator==(const BurnsideElement &) const = default;
};

class BurnsideRing
{
public:
  explicit BurnsideRing(std::shared_ptr<const SubgroupLattice> lattice);

  const MarksTable &marks() const { return marks_; }
  std::size_t rank() const { return marks_.size(); }

  BurnsideElement zero() const;
  BurnsideElement unit() const;                  // [G/G]
  BurnsideElement basis(ClassId k) const;        // [G/K]

  // f^H(x) = sum_K c_K |(G/K)^H|
  std::int64_t mark_hom(const BurnsideElement &x, ClassId h) const;
  std::vector<std::int64_t> mark_vector(const BurnsideElement &x) const;

  // Inverts the marks map by back substitution. Throws InternalError if the
  // vector is not in the image (non-integral quotient).
  BurnsideElement from_marks(const std::vector<std::int64_t> &marks) const;

  BurnsideElement add(const BurnsideElement &x, const BurnsideElement &y) const;
  BurnsideElement multiply(const BurnsideElement &x, const BurnsideElement &y) const;

private:
  void check(const BurnsideElement &x) const;
  MarksTable marks_;
};

// A point of Spec(A(G)). Characteristic-p points are identified by the
// class of O^p(H); canonical_class holds that class and cls is set to it too.
struct BurnsidePrime
{
  enum class Kind { zero, characteristic_p };
  Kind kind = Kind::zero;
  ClassId cls = 0;
  int prime = 0;
  ClassId canonical_class = 0;

  bool operator==(const BurnsidePrime &) const = default;
};

// The point p(H, p) (p = 0 for characteristic zero), already canonicalized.
BurnsidePrime burnside_prime(const SubgroupLattice &lattice, ClassId h, int p);

// a is contained in b as prime ideals of A(G).
bool burnside_contains(const SubgroupLattice &lattice, const BurnsidePrime &a,
                       const BurnsidePrime &b);

struct BurnsideSpectrum
{
  std::shared_ptr<const SubgroupLattice> lattice;
  std::vector<int> primes;
  std::vector<BurnsidePrime> points;
  // classes H with p(H, p) equal to the point
  std::vector<std::vector<ClassId>> collided;
  // (zero point, p-point) index pairs with strict inclusion
  std::vector<std::pair<std::size_t, std::size_t>> inclusions;

  std::optional<std::size_t> find(const BurnsidePrime &p) const;
};

// One zero point per class plus the characteristic-p points for each
// requested prime. Throws DomainError on an empty or non-prime set.
BurnsideSpectrum burnside_spectrum(std::shared_ptr<const SubgroupLattice> lattice,
                                   const std::vector<int> &primes);

} // namespace ttspec
