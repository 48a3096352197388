#include "ttspec/tt_ideals.hpp"

#include <algorithm>

#include "ttspec/error.hpp"

namespace ttspec {

AdmissibleFunction::AdmissibleFunction(std::shared_ptr<const SubgroupLattice> lattice,
                                       std::vector<int> primes, ExtNat fill)
: lattice_(std::move(lattice)), primes_(std::move(primes))
{
  if (primes_.empty())
    throw DomainError("admissible function needs at least one prime");
  for (int p : primes_)
    if (!is_prime(p))
      throw DomainError(std::to_string(p) + " is not a prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  values_.assign(lattice_->class_count() * primes_.size(), fill);
}

std::size_t AdmissibleFunction::prime_position(int p) const
{
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p)
    throw DomainError("prime " + std::to_string(p) + " is outside the function's domain");
  return std::size_t(it - primes_.begin());
}

std::size_t AdmissibleFunction::slot(ClassId c, int p) const
{
  if (c >= lattice_->class_count())
    throw DomainError("class id out of range");
  return c * primes_.size() + prime_position(p);
}

// ---------------------------------------------------------------------------

Verdict check_condition_a(const AdmissibleFunction &f, const InclusionOracle &oracle, Mode mode)
{
  const SubgroupLattice &lat = f.lattice();
  // Inclusions only get easier for larger n and smaller m, so it suffices to
  // test the extreme pair m = f(H,p) + 1, n = f(K,q).
  Verdict worst = Verdict::yes;
  for (ClassId h = 0; h < lat.class_count(); ++h)
    for (int p : f.primes()) {
      const ExtNat fh = f.get(h, p);
      if (fh.is_infinite())
        continue;
      const TTPrime target = make_prime(lat, h, p, fh + 1);
      for (ClassId k = 0; k < lat.class_count(); ++k)
        for (int q : f.primes()) {
          const ExtNat fk = f.get(k, q);
          if (fk == ExtNat(0))
            continue;
          const TTPrime source = make_prime(lat, k, q, fk);
          const Verdict v = oracle.inclusion(source, target, mode).verdict;
          if (v == Verdict::yes)
            return Verdict::no;
          if (v == Verdict::unknown)
            worst = Verdict::unknown;
        }
    }
  return worst;
}

bool check_condition_a_prime(const AdmissibleFunction &f, const InclusionOracle &oracle)
{
  const SubgroupLattice &lat = f.lattice();
  for (int p : f.primes())
    for (ClassId h = 0; h < lat.class_count(); ++h)
      for (ClassId k = 0; k < lat.class_count(); ++k) {
        const std::optional<int> s = oracle.subnormal_shift(k, h, p);
        if (s && f.get(k, p) > f.get(h, p) + *s)
          return false;
      }
  for (ClassId h = 0; h < lat.class_count(); ++h) {
    const bool any_zero = std::any_of(f.primes().begin(), f.primes().end(),
                                      [&](int p) { return f.get(h, p) == ExtNat(0); });
    const bool all_zero = std::all_of(f.primes().begin(), f.primes().end(),
                                      [&](int p) { return f.get(h, p) == ExtNat(0); });
    if (any_zero && !all_zero)
      return false;
  }
  return true;
}

ThreeValued is_admissible(const AdmissibleFunction &f, Mode mode, const InclusionOracle &oracle)
{
  if (mode == Mode::conjectural)
    return check_condition_a_prime(f, oracle) ? ThreeValued::yes() : ThreeValued::no();
  switch (check_condition_a(f, oracle, mode)) {
  case Verdict::yes:
    return ThreeValued::yes();
  case Verdict::no:
    return ThreeValued::no();
  case Verdict::unknown:
    break;
  }
  ThreeValued r;
  r.verdict = Verdict::unknown;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

bool in_y(const AdmissibleFunction &f, const TTPrime &p, int first_prime)
{
  if (p.level == ExtNat(1))
    return f.get(p.cls, first_prime) == ExtNat(0);
  return p.level > f.get(p.cls, p.characteristic);
}

// Lowers every value to min over p-subnormal pairs K <= H of f(H,p) + s. On a
// function read off a truncated Thomason set this only replaces infinities at
// slots whose finite levels all lie above the truncation, by values >= N, so
// the truncated set is unchanged and the result satisfies (A').
void admissible_closure(AdmissibleFunction &f, const InclusionOracle &oracle)
{
  const SubgroupLattice &lat = f.lattice();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p : f.primes())
      for (ClassId k = 0; k < lat.class_count(); ++k)
        for (ClassId h = 0; h < lat.class_count(); ++h) {
          const std::optional<int> s = oracle.subnormal_shift(k, h, p);
          if (s && f.get(h, p) + *s < f.get(k, p)) {
            f.set(k, p, f.get(h, p) + *s);
            changed = true;
          }
        }
  }
}

void require_compatible(const AdmissibleFunction &f, const SpectrumPoset &poset)
{
  if (f.lattice_ptr() != poset.lattice_ptr() &&
      f.lattice().class_count() != poset.lattice().class_count())
    throw DomainError("function and poset belong to different groups");
  if (f.primes() != poset.primes())
    throw DomainError("function and poset use different prime sets");
}

} // namespace

ThomasonSubset thomason_of(const AdmissibleFunction &f, const SpectrumPoset &poset)
{
  require_compatible(f, poset);
  if (poset.has_unknown())
    throw DomainError("topology not determined: poset has unknown inclusions");
  if (is_admissible(f, poset.mode(), poset.oracle()).verdict != Verdict::yes)
    throw DomainError("function is not admissible");
  ThomasonSubset y;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < poset.size(); ++i)
    if (in_y(f, poset.points()[i], f.primes().front())) {
      y.points.push_back(poset.points()[i]);
      idx.push_back(i);
    }
  if (!is_down_closed(idx, poset))
    throw DomainError("function is not admissible: Y_f is not down-closed in the truncation");
  return y;
}

AdmissibleFunction function_of(const ThomasonSubset &y, const SpectrumPoset &poset)
{
  std::vector<std::size_t> idx;
  for (const TTPrime &p : y.points) {
    auto i = poset.index_of(p);
    if (!i)
      throw DomainError("point " + to_string(poset.lattice(), p) + " is not in the poset");
    idx.push_back(*i);
  }
  if (!is_down_closed(idx, poset))
    throw DomainError("subset is not down-closed");

  AdmissibleFunction f(poset.lattice_ptr(), poset.primes(), kInfinity);
  std::vector<bool> has_infinite(f.values().size(), false);
  for (const TTPrime &p : y.points) {
    if (p.level == ExtNat(1)) {
      for (int q : f.primes())
        f.set(p.cls, q, 0);
    } else if (p.level.is_infinite()) {
      has_infinite[f.slot(p.cls, p.characteristic)] = true;
    } else if (p.level + (-1) < f.get(p.cls, p.characteristic)) {
      f.set(p.cls, p.characteristic, p.level + (-1));
    }
  }
  for (std::size_t s = 0; s < has_infinite.size(); ++s)
    if (has_infinite[s] && f.values()[s].is_infinite())
      throw DomainError("subset contains an infinite-level point with no finite point above it");
  admissible_closure(f, poset.oracle());
  return f;
}

void for_each_admissible(const SpectrumPoset &poset,
                         const std::function<bool(const AdmissibleFunction &)> &visit)
{
  const SubgroupLattice &lat = poset.lattice();
  if (poset.mode() == Mode::unconditional && !lat.is_square_free())
    throw DomainError("enumeration needs conjectural mode or a group of square-free order");
  if (poset.has_unknown())
    throw DomainError("topology not determined: poset has unknown inclusions");

  const std::vector<int> &primes = poset.primes();
  const std::size_t np = primes.size();
  const std::size_t slots = lat.class_count() * np;

  AdmissibleFunction f(poset.lattice_ptr(), primes, kInfinity);
  auto slot_of = [&](const TTPrime &p) {
    return p.level == ExtNat(1) ? f.slot(p.cls, primes.front()) : f.slot(p.cls, p.characteristic);
  };

  // Each reduction edge is checked once both of its endpoints are assigned.
  std::vector<std::vector<PosetEdge>> checks(slots);
  for (const PosetEdge &e : poset.edges())
    if (e.status == Verdict::yes)
      checks[std::max(slot_of(poset.points()[e.from]), slot_of(poset.points()[e.to]))].push_back(e);

  std::vector<ExtNat> choices;
  for (int v = 0; v < poset.height(); ++v)
    choices.push_back(v);
  choices.push_back(kInfinity);

  bool stop = false;
  std::function<void(std::size_t)> assign = [&](std::size_t t) {
    if (t == slots) {
      AdmissibleFunction g = f;
      admissible_closure(g, poset.oracle());
      if (!visit(g))
        stop = true;
      return;
    }
    const ClassId c = t / np;
    const std::size_t k = t % np;
    for (ExtNat v : choices) {
      if (k > 0) {
        const bool first_zero = f.get(c, primes.front()) == ExtNat(0);
        if (first_zero != (v == ExtNat(0)))
          continue;
      }
      f.set(c, primes[k], v);
      const bool ok = std::all_of(checks[t].begin(), checks[t].end(), [&](const PosetEdge &e) {
        return !in_y(f, poset.points()[e.to], primes.front()) ||
               in_y(f, poset.points()[e.from], primes.front());
      });
      if (ok)
        assign(t + 1);
      if (stop)
        break;
    }
    f.set(c, primes[k], kInfinity);
  };
  assign(0);
}

std::uint64_t count_admissible(const SpectrumPoset &poset)
{
  std::uint64_t n = 0;
  for_each_admissible(poset, [&](const AdmissibleFunction &) {
    ++n;
    return true;
  });
  return n;
}

std::vector<AdmissibleFunction> enumerate_admissible(const SpectrumPoset &poset)
{
  std::vector<AdmissibleFunction> out;
  for_each_admissible(poset, [&](const AdmissibleFunction &f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

FormalObject FormalObject::zero(const SubgroupLattice &lattice)
{
  FormalObject x;
  x.classes_.assign(lattice.class_count(), false);
  return x;
}

FormalObject FormalObject::basis_sum(const SubgroupLattice &lattice,
                                     const std::map<ClassId, std::uint64_t> &coefficients)
{
  FormalObject x = zero(lattice);
  for (const auto &[k, coeff] : coefficients) {
    if (k >= lattice.class_count())
      throw DomainError("class id out of range");
    if (coeff == 0)
      continue;
    for (ClassId h = 0; h < lattice.class_count(); ++h)
      if (lattice.class_subconjugate(h, k))
        x.classes_[h] = true;
  }
  return x;
}

bool FormalObject::is_zero() const
{
  return std::none_of(classes_.begin(), classes_.end(), [](bool b) { return b; });
}

FormalObject FormalObject::direct_sum(const FormalObject &other) const
{
  if (other.classes_.size() != classes_.size())
    throw DomainError("objects over different groups");
  FormalObject r = *this;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    r.classes_[i] = classes_[i] || other.classes_[i];
  return r;
}

FormalObject FormalObject::tensor(const FormalObject &other) const
{
  if (other.classes_.size() != classes_.size())
    throw DomainError("objects over different groups");
  FormalObject r = *this;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    r.classes_[i] = classes_[i] && other.classes_[i];
  return r;
}

bool ideal_membership(const AdmissibleFunction &f, const FormalObject &x,
                      const InclusionOracle &oracle, Mode mode)
{
  if (x.support_classes().size() != f.lattice().class_count())
    throw DomainError("object and function belong to different groups");
  if (is_admissible(f, mode, oracle).verdict != Verdict::yes)
    throw DomainError("function is not admissible");
  // supp(G/K_+) contains every level of every class below K, including
  // level 1, so each such class must have f = 0.
  for (ClassId h = 0; h < x.support_classes().size(); ++h) {
    if (!x.support_classes()[h])
      continue;
    for (int p : f.primes())
      if (f.get(h, p) != ExtNat(0))
        return false;
  }
  return true;
}

} // namespace ttspec
