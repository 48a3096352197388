#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "ttspec/ext_nat.hpp"
#include "ttspec/tt_spectrum.hpp"

namespace ttspec {

// f : (class, prime) -> {0, 1, 2, ..., inf} over a finite prime set.
class AdmissibleFunction
{
public:
  AdmissibleFunction(std::shared_ptr<const SubgroupLattice> lattice, std::vector<int> primes,
                     ExtNat fill = kInfinity);

  const SubgroupLattice &lattice() const { return *lattice_; }
  const std::shared_ptr<const SubgroupLattice> &lattice_ptr() const { return lattice_; }
  const std::vector<int> &primes() const { return primes_; }
  const std::vector<ExtNat> &values() const { return values_; }

  ExtNat get(ClassId c, int p) const { return values_[slot(c, p)]; }
  void set(ClassId c, int p, ExtNat v) { values_[slot(c, p)] = v; }

  std::size_t slot(ClassId c, int p) const;
  std::size_t prime_position(int p) const;

  bool operator==(const AdmissibleFunction &rhs) const
  { return primes_ == rhs.primes_ && values_ == rhs.values_; }
  // Lexicographic on values (class-major, primes ascending).
  bool operator<(const AdmissibleFunction &rhs) const { return values_ < rhs.values_; }

private:
  std::shared_ptr<const SubgroupLattice> lattice_;
  std::vector<int> primes_;
  std::vector<ExtNat> values_;
};

// If P(K,q,n) in P(H,p,m) and m > f(H,p) then n > f(K,q), quantified over
// all levels through the three-valued oracle. A yes-inclusion violating it
// gives no; a violation only through unknown inclusions gives unknown.
Verdict check_condition_a(const AdmissibleFunction &f, const InclusionOracle &oracle, Mode mode);

// f(K,p) <= f(H,p) + log_p[H:K] for p-subnormal K <= H (up to conjugacy),
// and f(H,p) = 0 for one p forces f(H,q) = 0 for every q.
bool check_condition_a_prime(const AdmissibleFunction &f, const InclusionOracle &oracle);

// Conjectural mode checks the arithmetic form, unconditional mode the
// oracle-quantified form.
ThreeValued is_admissible(const AdmissibleFunction &f, Mode mode, const InclusionOracle &oracle);

// A down-closed point set of a truncated spectrum, in poset order.
struct ThomasonSubset
{
  std::vector<TTPrime> points;
  bool operator==(const ThomasonSubset &) const = default;
};

// Y_f intersected with the poset: {P(H,p,m) : m > f(H,p)}, level-1 points
// included iff f(H, .) = 0. Throws DomainError if f is not over the poset's
// primes, the poset has unknown edges, or Y_f is not down-closed in the
// truncation.
ThomasonSubset thomason_of(const AdmissibleFunction &f, const SpectrumPoset &poset);

// f(H,p) = (least level of Y at (H,p)) - 1, or inf. Throws DomainError if Y
// is not down-closed or holds an infinite-level point with no finite point
// of the same class and prime.
AdmissibleFunction function_of(const ThomasonSubset &y, const SpectrumPoset &poset);

// Visits every Thomason subset of the truncation through its function, in
// lexicographic order of the function. The visitor returns false to stop.
// Throws DomainError for unconditional mode on a non-square-free group.
void for_each_admissible(const SpectrumPoset &poset,
                         const std::function<bool(const AdmissibleFunction &)> &visit);
std::uint64_t count_admissible(const SpectrumPoset &poset);
std::vector<AdmissibleFunction> enumerate_admissible(const SpectrumPoset &poset);

// An object known only through its support: the set of classes H such that
// every P(H,p,n) lies in the support.
class FormalObject
{
public:
  static FormalObject zero(const SubgroupLattice &lattice);
  // sum_K coeff_K [G/K_+] with non-negative coefficients
  static FormalObject basis_sum(const SubgroupLattice &lattice,
                                const std::map<ClassId, std::uint64_t> &coefficients);

  const std::vector<bool> &support_classes() const { return classes_; }
  bool is_zero() const;

  FormalObject direct_sum(const FormalObject &other) const;   // union of supports
  FormalObject tensor(const FormalObject &other) const;       // intersection

private:
  std::vector<bool> classes_;
};

// supp(x) inside Y_f. Throws DomainError unless f is admissible in mode.
bool ideal_membership(const AdmissibleFunction &f, const FormalObject &x,
                      const InclusionOracle &oracle, Mode mode = Mode::conjectural);

} // namespace ttspec
