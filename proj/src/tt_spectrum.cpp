#include "ttspec/tt_spectrum.hpp"

#include <algorithm>
#include <set>

#include "ttspec/error.hpp"
#include "ttspec/p_structure.hpp"

namespace ttspec {

std::string to_string(Mode m)
{
  return m == Mode::conjectural ? "conjectural" : "unconditional";
}

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::yes:
    return "yes";
  case Verdict::no:
    return "no";
  case Verdict::unknown:
    return "unknown";
  }
  return "?";
}

Mode parse_mode(const std::string &text)
{
  if (text == "conjectural")
    return Mode::conjectural;
  if (text == "unconditional")
    return Mode::unconditional;
  throw DomainError("unknown mode '" + text + "' (expected conjectural or unconditional)");
}

std::string ThreeValued::to_string() const
{
  if (verdict != Verdict::unknown)
    return ttspec::to_string(verdict);
  return "unknown [" + band_lo.to_string() + "," + band_hi.to_string() + "]";
}

// ---------------------------------------------------------------------------

TTPrime make_prime(const SubgroupLattice &lattice, ClassId h, int p, ExtNat n)
{
  if (h >= lattice.class_count())
    throw DomainError("class id out of range");
  if (n < ExtNat(1))
    throw DomainError("chromatic level must be >= 1");
  if (n == ExtNat(1))
    return {h, 0, 1};
  if (p == 0)
    throw DomainError("characteristic 0 is only allowed at level 1");
  if (!is_prime(p))
    throw DomainError(std::to_string(p) + " is not a prime");
  return {h, p, n};
}

TTPrime make_prime(const SubgroupLattice &lattice, const Subgroup &h, int p, ExtNat n)
{
  return make_prime(lattice, lattice.class_of(h), p, n);
}

std::string to_string(const SubgroupLattice &lattice, const TTPrime &p)
{
  return "P(" + lattice.cls(p.cls).name + "," + std::to_string(p.characteristic) + "," +
         p.level.to_string() + ")";
}

// ---------------------------------------------------------------------------

InclusionOracle::InclusionOracle(std::shared_ptr<const SubgroupLattice> lattice)
: lattice_(std::move(lattice))
{
  const SubgroupLattice &lat = *lattice_;
  const PermGroup &g = lat.group();
  const std::size_t nc = lat.class_count();
  for (int p : lat.order_primes()) {
    std::vector<int> table(nc * nc, -1);
    for (ClassId h = 0; h < nc; ++h) {
      const Subgroup &rep = lat.representative(h);
      const Subgroup core = o_p_core(g, rep, p);
      for (ClassId k = 0; k < nc; ++k) {
        const SubgroupClass &kc = lat.cls(k);
        if (rep.order() % kc.order != 0)
          continue;
        const int s = exact_log(std::int64_t(rep.order() / kc.order), p);
        if (s < 0)
          continue;
        const bool hit = std::any_of(kc.members.begin(), kc.members.end(), [&](std::size_t m) {
          const Subgroup &cand = lat.subgroups()[m];
          return rep.contains(cand) && cand.contains(core);
        });
        if (hit)
          table[k * nc + h] = s;
      }
    }
    shift_.emplace(p, std::move(table));
  }
}

std::optional<int> InclusionOracle::subnormal_shift(ClassId k, ClassId h, int p) const
{
  const std::size_t nc = lattice_->class_count();
  if (k >= nc || h >= nc)
    throw DomainError("class id out of range");
  if (k == h)
    return 0;
  auto it = shift_.find(p);
  // p does not divide |G|: O^p(H) = H, so only K ~ H qualifies.
  if (it == shift_.end())
    return std::nullopt;
  int s = it->second[k * nc + h];
  if (s < 0)
    return std::nullopt;
  return s;
}

ThreeValued InclusionOracle::inclusion(const TTPrime &q, const TTPrime &p, Mode mode) const
{
  const std::size_t nc = lattice_->class_count();
  if (q.cls >= nc || p.cls >= nc)
    throw DomainError("prime does not belong to this group");

  const ExtNat n = q.level;
  const ExtNat m = p.level;
  if (q == p)
    return ThreeValued::yes();

  if (q.cls == p.cls) {
    bool ok = n >= m && (m == ExtNat(1) || q.characteristic == p.characteristic);
    return ok ? ThreeValued::yes() : ThreeValued::no();
  }
  if (n == ExtNat(1) && m == ExtNat(1))
    return ThreeValued::no();
  if (n >= ExtNat(2) && m >= ExtNat(2) && q.characteristic != p.characteristic)
    return ThreeValued::no();

  const int prime = (m >= ExtNat(2)) ? p.characteristic : q.characteristic;
  const std::optional<int> s = subnormal_shift(q.cls, p.cls, prime);
  if (!s)
    return ThreeValued::no();

  if (n.is_infinite())
    return ThreeValued::yes();
  if (m.is_infinite())
    return ThreeValued::no();
  if (n >= m + *s)
    return ThreeValued::yes();
  if (n <= m)
    return ThreeValued::no();
  if (mode == Mode::conjectural)
    return ThreeValued::no();
  return ThreeValued::unknown(m + 1, m + (*s - 1));
}

std::pair<ExtNat, ExtNat> InclusionOracle::n_min_bounds(ClassId k, ClassId h, int p, ExtNat m) const
{
  if (m < ExtNat(1))
    throw DomainError("chromatic level must be >= 1");
  const std::optional<int> s = subnormal_shift(k, h, p);
  if (!s)
    throw DomainError("K is not conjugate to a p-subnormal subgroup of H");
  if (m.is_infinite())
    return {kInfinity, kInfinity};
  return {k == h ? m : m + 1, m + *s};
}

// ---------------------------------------------------------------------------

SpectrumPoset::SpectrumPoset(std::shared_ptr<const SubgroupLattice> lattice)
: lattice_(lattice), oracle_(std::move(lattice))
{}

std::optional<std::size_t> SpectrumPoset::index_of(const TTPrime &p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

SpectrumPoset build_spectrum(std::shared_ptr<const SubgroupLattice> lattice,
                             std::vector<int> primes, int height, bool include_infinity, Mode mode)
{
  if (height < 1)
    throw DomainError("height must be >= 1");
  if (primes.empty())
    throw DomainError("at least one prime is required");
  for (int p : primes)
    if (!is_prime(p))
      throw DomainError(std::to_string(p) + " is not a prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  SpectrumPoset poset(lattice);
  poset.primes_ = primes;
  poset.height_ = height;
  poset.include_infinity_ = include_infinity;
  poset.mode_ = mode;

  for (ClassId c = 0; c < lattice->class_count(); ++c) {
    poset.points_.push_back({c, 0, 1});
    for (int p : primes) {
      for (int n = 2; n <= height; ++n)
        poset.points_.push_back({c, p, n});
      if (include_infinity)
        poset.points_.push_back({c, p, kInfinity});
    }
  }
  for (std::size_t i = 0; i < poset.points_.size(); ++i)
    poset.index_.emplace(poset.points_[i], i);

  const std::size_t n = poset.points_.size();
  poset.relation_.assign(n * n, Verdict::no);
  poset.verdicts_.assign(n * n, ThreeValued::no());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ThreeValued v = poset.oracle_.inclusion(poset.points_[i], poset.points_[j], mode);
      poset.relation_[i * n + j] = v.verdict;
      poset.verdicts_[i * n + j] = v;
      if (v.verdict == Verdict::unknown)
        poset.has_unknown_ = true;
    }

  auto yes = [&](std::size_t a, std::size_t b) { return poset.relation_[a * n + b] == Verdict::yes; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !yes(i, j))
        continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && yes(i, k) && yes(k, j))
          covered = false;
      if (covered)
        poset.edges_.push_back({i, j, Verdict::yes});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (poset.relation_[i * n + j] == Verdict::unknown)
        poset.edges_.push_back({i, j, Verdict::unknown});
  return poset;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t require_point(const SpectrumPoset &poset, const TTPrime &p)
{
  auto i = poset.index_of(p);
  if (!i)
    throw DomainError("point " + to_string(poset.lattice(), p) + " is not in the poset");
  return *i;
}

// An unknown pair Q ? P matters only when P is in the set: then membership of
// Q (for closures) or maximality of Q (for components) is undetermined.
void refuse_unknown(const SpectrumPoset &poset, const std::vector<bool> &in_set)
{
  for (const PosetEdge &e : poset.edges())
    if (e.status == Verdict::unknown && in_set[e.to])
      throw DomainError("topology not determined: unknown inclusion " +
                        to_string(poset.lattice(), poset.points()[e.from]) + " in " +
                        to_string(poset.lattice(), poset.points()[e.to]) +
                        " (use conjectural mode)");
}

} // namespace

bool is_down_closed(const std::vector<std::size_t> &members, const SpectrumPoset &poset)
{
  std::vector<bool> in(poset.size(), false);
  for (std::size_t i : members)
    in.at(i) = true;
  for (std::size_t j : members)
    for (std::size_t i = 0; i < poset.size(); ++i)
      if (!in[i] && poset.relation(i, j) == Verdict::yes)
        return false;
  return true;
}

std::vector<TTPrime> closure(const TTPrime &p, const SpectrumPoset &poset)
{
  const std::size_t j = require_point(poset, p);
  std::vector<bool> in(poset.size(), false);
  std::vector<TTPrime> out;
  for (std::size_t i = 0; i < poset.size(); ++i)
    if (poset.relation(i, j) == Verdict::yes) {
      in[i] = true;
      out.push_back(poset.points()[i]);
    }
  refuse_unknown(poset, in);
  return out;
}

std::vector<TTPrime> irreducible_components(const std::vector<TTPrime> &closed,
                                            const SpectrumPoset &poset)
{
  std::vector<std::size_t> idx;
  std::vector<bool> in(poset.size(), false);
  for (const TTPrime &p : closed) {
    std::size_t i = require_point(poset, p);
    if (!in[i])
      idx.push_back(i);
    in[i] = true;
  }
  refuse_unknown(poset, in);
  if (!is_down_closed(idx, poset))
    throw DomainError("set is not closed (not down-closed under inclusion)");
  std::sort(idx.begin(), idx.end());
  std::vector<TTPrime> generic;
  for (std::size_t i : idx) {
    bool maximal = std::none_of(idx.begin(), idx.end(), [&](std::size_t j) {
      return j != i && poset.relation(i, j) == Verdict::yes;
    });
    if (maximal)
      generic.push_back(poset.points()[i]);
  }
  return generic;
}

BurnsidePrime comparison_map(const SubgroupLattice &lattice, const TTPrime &p)
{
  if (p.level == ExtNat(1))
    return burnside_prime(lattice, p.cls, 0);
  return burnside_prime(lattice, p.cls, p.characteristic);
}

std::vector<TTPrime> support_of_basis(ClassId k, const SpectrumPoset &poset)
{
  const SubgroupLattice &lat = poset.lattice();
  if (k >= lat.class_count())
    throw DomainError("class id out of range");
  std::vector<TTPrime> out;
  for (const TTPrime &p : poset.points())
    if (lat.class_subconjugate(p.cls, k))
      out.push_back(p);
  return out;
}

namespace {

int p_group_rank(const SpectrumPoset &poset, int p, int n)
{
  const int r = exact_log(std::int64_t(poset.lattice().group().order()), p);
  if (!is_prime(p) || r < 0)
    throw DomainError("z_set: G is not a " + std::to_string(p) + "-group");
  if (n <= r)
    throw DomainError("z_set: need N > log_p|G| = " + std::to_string(r));
  if (poset.primes() != std::vector<int>{p} || !poset.include_infinity() ||
      poset.mode() != Mode::conjectural)
    throw DomainError("z_set: poset must be p-local, conjectural, with the infinite level");
  if (n - r > poset.height())
    throw DomainError("z_set: poset height too small for generic level N - r");
  return r;
}

} // namespace

std::vector<TTPrime> z_set(const SpectrumPoset &poset, int p, int n)
{
  p_group_rank(poset, p, n);
  const SubgroupLattice &lat = poset.lattice();
  std::vector<TTPrime> out;
  for (const TTPrime &q : poset.points()) {
    const int log_order = exact_log(std::int64_t(lat.cls(q.cls).order), p);
    if (q.level.is_infinite() || q.level.value() + log_order >= n)
      out.push_back(q);
  }
  return out;
}

ZSetReport z_set_check(const SpectrumPoset &poset, int p, int n)
{
  const int r = p_group_rank(poset, p, n);
  const SubgroupLattice &lat = poset.lattice();
  const std::vector<TTPrime> z = z_set(poset, p, n);

  ZSetReport rep;
  rep.expected_generic = make_prime(lat, lat.whole_class(), p, n - r);

  std::vector<std::size_t> idx;
  for (const TTPrime &q : z)
    idx.push_back(*poset.index_of(q));
  rep.closed = is_down_closed(idx, poset);
  if (rep.closed) {
    std::vector<TTPrime> gens = irreducible_components(z, poset);
    rep.irreducible = gens.size() == 1;
    if (rep.irreducible)
      rep.generic_point = gens.front();
  }
  rep.equals_closure = closure(rep.expected_generic, poset) == z;
  return rep;
}

} // namespace ttspec
