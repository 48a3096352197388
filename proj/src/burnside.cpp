#include "ttspec/burnside.hpp"

#include <algorithm>
#include <string>

#include "ttspec/error.hpp"
#include "ttspec/ext_nat.hpp"
#include "ttspec/p_structure.hpp"

namespace ttspec {

MarksTable::MarksTable(std::shared_ptr<const SubgroupLattice> lattice)
: lattice_(std::move(lattice)), n_(lattice_->class_count()), entries_(n_ * n_, 0)
{
  const PermGroup &g = lattice_->group();
  for (ClassId h = 0; h < n_; ++h)
    for (ClassId k = h; k < n_; ++k) {
      if (!lattice_->class_subconjugate(h, k))
        continue;
      std::size_t t = n_transporter_size(g, lattice_->representative(h), lattice_->representative(k));
      entries_[h * n_ + k] = std::int64_t(t / lattice_->cls(k).order);
    }
}

MarksTable table_of_marks(std::shared_ptr<const SubgroupLattice> lattice)
{
  return MarksTable(std::move(lattice));
}

BurnsideRing::BurnsideRing(std::shared_ptr<const SubgroupLattice> lattice)
: marks_(std::move(lattice))
{}

void BurnsideRing::check(const BurnsideElement &x) const
{
  if (x.coeffs.size() != rank())
    throw DomainError("Burnside element has " + std::to_string(x.coeffs.size()) +
                      " coefficients, ring has rank " + std::to_string(rank()));
}

BurnsideElement BurnsideRing::zero() const
{
  return {std::vector<std::int64_t>(rank(), 0)};
}

BurnsideElement BurnsideRing::unit() const
{
  return basis(rank() - 1);
}

BurnsideElement BurnsideRing::basis(ClassId k) const
{
  if (k >= rank())
    throw DomainError("class id out of range");
  BurnsideElement x = zero();
  x.coeffs[k] = 1;
  return x;
}

std::int64_t BurnsideRing::mark_hom(const BurnsideElement &x, ClassId h) const
{
  check(x);
  if (h >= rank())
    throw DomainError("class id out of range");
  std::int64_t sum = 0;
  for (ClassId k = h; k < rank(); ++k)
    sum += x.coeffs[k] * marks_.entry(h, k);
  return sum;
}

std::vector<std::int64_t> BurnsideRing::mark_vector(const BurnsideElement &x) const
{
  std::vector<std::int64_t> v(rank());
  for (ClassId h = 0; h < rank(); ++h)
    v[h] = mark_hom(x, h);
  return v;
}

BurnsideElement BurnsideRing::from_marks(const std::vector<std::int64_t> &marks) const
{
  if (marks.size() != rank())
    throw DomainError("mark vector has wrong length");
  BurnsideElement x = zero();
  for (std::size_t i = rank(); i-- > 0;) {
    std::int64_t rest = marks[i];
    for (ClassId k = i + 1; k < rank(); ++k)
      rest -= x.coeffs[k] * marks_.entry(i, k);
    const std::int64_t diag = marks_.entry(i, i);
    if (diag == 0 || rest % diag != 0)
      throw InternalError("mark vector is not integral at class " + std::to_string(i));
    x.coeffs[i] = rest / diag;
  }
  return x;
}

BurnsideElement BurnsideRing::add(const BurnsideElement &x, const BurnsideElement &y) const
{
  check(x);
  check(y);
  BurnsideElement r = zero();
  for (std::size_t i = 0; i < rank(); ++i)
    r.coeffs[i] = x.coeffs[i] + y.coeffs[i];
  return r;
}

BurnsideElement BurnsideRing::multiply(const BurnsideElement &x, const BurnsideElement &y) const
{
  std::vector<std::int64_t> a = mark_vector(x);
  std::vector<std::int64_t> b = mark_vector(y);
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] *= b[i];
  return from_marks(a);
}

// ---------------------------------------------------------------------------

BurnsidePrime burnside_prime(const SubgroupLattice &lattice, ClassId h, int p)
{
  if (h >= lattice.class_count())
    throw DomainError("class id out of range");
  BurnsidePrime bp;
  if (p == 0) {
    bp.kind = BurnsidePrime::Kind::zero;
    bp.cls = h;
    bp.canonical_class = h;
    return bp;
  }
  Subgroup core = o_p_core(lattice.group(), lattice.representative(h), p);
  bp.kind = BurnsidePrime::Kind::characteristic_p;
  bp.prime = p;
  bp.canonical_class = lattice.class_of(core);
  bp.cls = bp.canonical_class;
  return bp;
}

bool burnside_contains(const SubgroupLattice &lattice, const BurnsidePrime &a,
                       const BurnsidePrime &b)
{
  if (a == b)
    return true;
  if (a.kind == BurnsidePrime::Kind::zero && b.kind == BurnsidePrime::Kind::characteristic_p)
    return burnside_prime(lattice, a.cls, b.prime).canonical_class == b.canonical_class;
  return false;
}

std::optional<std::size_t> BurnsideSpectrum::find(const BurnsidePrime &p) const
{
  auto it = std::find(points.begin(), points.end(), p);
  if (it == points.end())
    return std::nullopt;
  return std::size_t(it - points.begin());
}

BurnsideSpectrum burnside_spectrum(std::shared_ptr<const SubgroupLattice> lattice,
                                   const std::vector<int> &primes)
{
  if (primes.empty())
    throw DomainError("burnside_spectrum needs at least one prime");
  for (int p : primes)
    if (!is_prime(p))
      throw DomainError(std::to_string(p) + " is not a prime");

  BurnsideSpectrum spec;
  spec.lattice = lattice;
  spec.primes = primes;
  std::sort(spec.primes.begin(), spec.primes.end());
  spec.primes.erase(std::unique(spec.primes.begin(), spec.primes.end()), spec.primes.end());

  const std::size_t nc = lattice->class_count();
  for (ClassId h = 0; h < nc; ++h) {
    spec.points.push_back(burnside_prime(*lattice, h, 0));
    spec.collided.push_back({h});
  }
  for (int p : spec.primes) {
    for (ClassId h = 0; h < nc; ++h) {
      BurnsidePrime bp = burnside_prime(*lattice, h, p);
      std::size_t at;
      if (auto found = spec.find(bp)) {
        at = *found;
        spec.collided[at].push_back(h);
      } else {
        at = spec.points.size();
        spec.points.push_back(bp);
        spec.collided.push_back({h});
      }
      spec.inclusions.emplace_back(h, at);
    }
  }
  return spec;
}

} // namespace ttspec
