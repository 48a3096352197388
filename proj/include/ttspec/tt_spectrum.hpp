#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttspec/burnside.hpp"
#include "ttspec/ext_nat.hpp"
#include "ttspec/subgroup_lattice.hpp"

namespace ttspec {

enum class Mode { conjectural, unconditional };

enum class Verdict { yes, no, unknown };

std::string to_string(Mode m);
std::string to_string(Verdict v);
Mode parse_mode(const std::string &text);

// Answer of the inclusion oracle. For unknown, [band_lo, band_hi] is the
// interval of source levels on which the inclusion is undecided.
struct ThreeValued
{
  Verdict verdict = Verdict::no;
  ExtNat band_lo = 0;
  ExtNat band_hi = 0;

  static ThreeValued yes() { return {Verdict::yes, 0, 0}; }
  static ThreeValued no() { return {Verdict::no, 0, 0}; }
  static ThreeValued unknown(ExtNat lo, ExtNat hi) { return {Verdict::unknown, lo, hi}; }

  bool operator==(const ThreeValued &) const = default;
  std::string to_string() const;  // "yes", "no", "unknown [lo,hi]"
};

// The prime P(H, p, n) of the spectrum, keyed by the conjugacy class of H.
// Canonical form: level 1 <=> characteristic 0.
struct TTPrime
{
  ClassId cls = 0;
  int characteristic = 0;
  ExtNat level = 1;

  auto operator<=>(const TTPrime &) const = default;
};

// Normalizes (H, p, 1) to (H, 0, 1). Throws DomainError for level 0,
// characteristic 0 with level >= 2, or a non-prime characteristic.
TTPrime make_prime(const SubgroupLattice &lattice, ClassId h, int p, ExtNat n);
TTPrime make_prime(const SubgroupLattice &lattice, const Subgroup &h, int p, ExtNat n);

std::string to_string(const SubgroupLattice &lattice, const TTPrime &p);

class InclusionOracle
{
public:
  explicit InclusionOracle(std::shared_ptr<const SubgroupLattice> lattice);

  const SubgroupLattice &lattice() const { return *lattice_; }

  // s = log_p(|H|/|K|) when K is G-conjugate to a p-subnormal subgroup of
  // H (s = 0 iff K ~ H), nullopt otherwise.
  std::optional<int> subnormal_shift(ClassId k, ClassId h, int p) const;

  // Is q contained in p?
  ThreeValued inclusion(const TTPrime &q, const TTPrime &p, Mode mode) const;

  // Bounds [lo, hi] on the least level n with P(K,p,n) inside P(H,p,m).
  // Throws DomainError unless K is conjugate to a p-subnormal subgroup of H.
  std::pair<ExtNat, ExtNat> n_min_bounds(ClassId k, ClassId h, int p, ExtNat m) const;

private:
  std::shared_ptr<const SubgroupLattice> lattice_;
  // per prime dividing |G|: shift_[p][k * n + h], -1 when not subnormal
  std::map<int, std::vector<int>> shift_;
};

struct PosetEdge
{
  std::size_t from = 0;  // the smaller prime
  std::size_t to = 0;
  Verdict status = Verdict::yes;
  bool operator==(const PosetEdge &) const = default;
};

// A finite truncation of the spectrum: level-1 points for every class,
// levels 2..height for every (class, prime), plus optionally the infinite
// level. Immutable once built.
class SpectrumPoset
{
public:
  const std::shared_ptr<const SubgroupLattice> &lattice_ptr() const { return lattice_; }
  const SubgroupLattice &lattice() const { return *lattice_; }
  const InclusionOracle &oracle() const { return oracle_; }
  const std::vector<int> &primes() const { return primes_; }
  int height() const { return height_; }
  bool include_infinity() const { return include_infinity_; }
  Mode mode() const { return mode_; }

  const std::vector<TTPrime> &points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::optional<std::size_t> index_of(const TTPrime &p) const;

  // Verdict for points()[i] contained in points()[j].
  Verdict relation(std::size_t i, std::size_t j) const { return relation_[i * size() + j]; }
  const ThreeValued &verdict(std::size_t i, std::size_t j) const { return verdicts_[i * size() + j]; }

  // Transitive reduction of the yes-relation followed by all unknown pairs.
  const std::vector<PosetEdge> &edges() const { return edges_; }
  bool has_unknown() const { return has_unknown_; }

private:
  friend SpectrumPoset build_spectrum(std::shared_ptr<const SubgroupLattice>, std::vector<int>,
                                      int, bool, Mode);
  explicit SpectrumPoset(std::shared_ptr<const SubgroupLattice> lattice);

  std::shared_ptr<const SubgroupLattice> lattice_;
  InclusionOracle oracle_;
  std::vector<int> primes_;
  int height_ = 1;
  bool include_infinity_ = false;
  Mode mode_ = Mode::conjectural;
  std::vector<TTPrime> points_;
  std::map<TTPrime, std::size_t> index_;
  std::vector<Verdict> relation_;
  std::vector<ThreeValued> verdicts_;
  std::vector<PosetEdge> edges_;
  bool has_unknown_ = false;
};

// Throws DomainError for height < 1, an empty prime set or a non-prime.
SpectrumPoset build_spectrum(std::shared_ptr<const SubgroupLattice> lattice,
                             std::vector<int> primes, int height, bool include_infinity,
                             Mode mode);

// {Q : Q contained in P}, in poset order. Throws DomainError when unknown
// edges make the answer undetermined.
std::vector<TTPrime> closure(const TTPrime &p, const SpectrumPoset &poset);

// Generic points of the irreducible components of a closed set. Throws
// DomainError if the set is not down-closed or touches unknown edges.
std::vector<TTPrime> irreducible_components(const std::vector<TTPrime> &closed,
                                            const SpectrumPoset &poset);

bool is_down_closed(const std::vector<std::size_t> &members, const SpectrumPoset &poset);

// Level 1 goes to p(H, 0); higher levels to p(H, p).
BurnsidePrime comparison_map(const SubgroupLattice &lattice, const TTPrime &p);

// Points of the poset in supp(G/K_+): those whose class is subconjugate to K.
std::vector<TTPrime> support_of_basis(ClassId k, const SpectrumPoset &poset);

// Z_{p,N} = {P(H,p,l) : l + log_p|H| >= N} inside a p-local poset over a
// p-group of order p^r, for N > r.
std::vector<TTPrime> z_set(const SpectrumPoset &poset, int p, int n);

struct ZSetReport
{
  bool closed = false;
  bool irreducible = false;
  std::optional<TTPrime> generic_point;
  TTPrime expected_generic;       // P(G, p, N - r)
  bool equals_closure = false;    // z_set == closure(expected_generic)
  bool ok() const { return closed && irreducible && equals_closure && generic_point == expected_generic; }
};

ZSetReport z_set_check(const SpectrumPoset &poset, int p, int n);

} // namespace ttspec
