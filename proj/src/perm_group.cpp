#include "ttspec/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "ttspec/error.hpp"
#include "ttspec/ext_nat.hpp"

namespace ttspec {

// ---------------------------------------------------------------------------
// small numeric helpers (declared in ext_nat.hpp)

ExtNat parse_ext_nat(const std::string &text)
{
  if (text == "inf" || text == "infinity" || text == "oo")
    return kInfinity;
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw DomainError("expected a non-negative integer or 'inf', got '" + text + "'");
  if (text.size() > 15)
    throw DomainError("integer out of range: " + text);
  return ExtNat(std::stoll(text));
}

bool is_prime(std::int64_t n)
{
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

int exact_log(std::int64_t n, std::int64_t base)
{
  if (n < 1 || base < 2)
    return -1;
  int k = 0;
  while (n % base == 0) {
    n /= base;
    ++k;
  }
  return n == 1 ? k : -1;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Point> images)
: images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw DomainError("not a bijection of {0.." + std::to_string(images_.size()) + "-1}");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>> &cycles)
{
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto &cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point a = cyc[i];
      if (a >= degree)
        throw DomainError("point " + std::to_string(a) + " out of range for degree " +
                          std::to_string(degree));
      if (used[a])
        throw DomainError("point " + std::to_string(a) + " repeated in cycle notation");
      used[a] = true;
      im[a] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation &rhs) const
{
  if (rhs.degree() != degree())
    throw DomainError("degree mismatch in permutation product");
  std::vector<Point> im(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    im[x] = rhs.images_[images_[x]];
  Permutation r;
  r.images_ = std::move(im);
  return r;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> im(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    im[images_[x]] = Point(x);
  Permutation r;
  r.images_ = std::move(im);
  return r;
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cyc;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation Permutation::shifted(std::size_t offset, std::size_t new_degree) const
{
  std::vector<Point> im(new_degree);
  std::iota(im.begin(), im.end(), Point{0});
  for (std::size_t x = 0; x < degree(); ++x)
    im[x + offset] = Point(images_[x] + offset);
  return Permutation(std::move(im));
}

// ---------------------------------------------------------------------------
// GroupDescription

GroupDescription GroupDescription::cyclic(std::size_t n)
{
  GroupDescription d;
  d.kind = Kind::cyclic;
  d.n = n;
  return d;
}

GroupDescription GroupDescription::symmetric(std::size_t n)
{
  GroupDescription d;
  d.kind = Kind::symmetric;
  d.n = n;
  return d;
}

GroupDescription GroupDescription::alternating(std::size_t n)
{
  GroupDescription d;
  d.kind = Kind::alternating;
  d.n = n;
  return d;
}

GroupDescription GroupDescription::dihedral(std::size_t order)
{
  GroupDescription d;
  d.kind = Kind::dihedral;
  d.n = order;
  return d;
}

GroupDescription GroupDescription::from_generators(std::size_t degree, std::vector<Permutation> gens)
{
  GroupDescription d;
  d.kind = Kind::explicit_perms;
  d.n = degree;
  d.generators = std::move(gens);
  return d;
}

GroupDescription GroupDescription::product(std::vector<GroupDescription> factors)
{
  GroupDescription d;
  d.kind = Kind::product;
  d.factors = std::move(factors);
  return d;
}

namespace {

struct RawGroup
{
  std::size_t degree;
  std::vector<Permutation> gens;
};

std::vector<Point> iota_points(std::size_t n)
{
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  return v;
}

RawGroup raw_generators(const GroupDescription &d)
{
  using K = GroupDescription::Kind;
  switch (d.kind) {
  case K::cyclic: {
    if (d.n == 0)
      throw DomainError("cyclic group order must be >= 1");
    if (d.n == 1)
      return {1, {}};
    return {d.n, {Permutation::from_cycles(d.n, {iota_points(d.n)})}};
  }
  case K::symmetric: {
    if (d.n <= 1)
      return {std::max<std::size_t>(d.n, 1), {}};
    std::vector<Permutation> g{Permutation::from_cycles(d.n, {{0, 1}})};
    if (d.n > 2)
      g.push_back(Permutation::from_cycles(d.n, {iota_points(d.n)}));
    return {d.n, std::move(g)};
  }
  case K::alternating: {
    if (d.n < 3)
      return {std::max<std::size_t>(d.n, 1), {}};
    std::vector<Permutation> g;
    for (Point i = 2; i < d.n; ++i)
      g.push_back(Permutation::from_cycles(d.n, {{0, 1, i}}));
    return {d.n, std::move(g)};
  }
  case K::dihedral: {
    if (d.n == 0 || d.n % 2 != 0)
      throw DomainError("dihedral group order must be even, got " + std::to_string(d.n));
    std::size_t k = d.n / 2;
    if (k == 1)
      return {2, {Permutation::from_cycles(2, {{0, 1}})}};
    if (k == 2)
      return {4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})}};
    std::vector<Point> refl(k);
    for (std::size_t i = 0; i < k; ++i)
      refl[i] = Point((k - i) % k);
    return {k, {Permutation::from_cycles(k, {iota_points(k)}), Permutation(refl)}};
  }
  case K::explicit_perms: {
    for (const auto &p : d.generators)
      if (p.degree() != d.n)
        throw DomainError("generator " + p.to_string() + " has degree " +
                          std::to_string(p.degree()) + ", expected " + std::to_string(d.n));
    return {std::max<std::size_t>(d.n, 1), d.generators};
  }
  case K::product: {
    std::vector<RawGroup> parts;
    std::size_t total = 0;
    for (const auto &f : d.factors) {
      parts.push_back(raw_generators(f));
      total += parts.back().degree;
    }
    RawGroup out{std::max<std::size_t>(total, 1), {}};
    std::size_t offset = 0;
    for (const auto &p : parts) {
      for (const auto &g : p.gens) {
        std::vector<Point> im = iota_points(out.degree);
        for (std::size_t x = 0; x < g.degree(); ++x)
          im[x + offset] = Point(g(Point(x)) + offset);
        out.gens.emplace_back(std::move(im));
      }
      offset += p.degree;
    }
    return out;
  }
  }
  throw InternalError("unhandled group kind");
}

std::string perm_key(const Permutation &p)
{
  const auto &im = p.images();
  return std::string(reinterpret_cast<const char *>(im.data()), im.size() * sizeof(Point));
}

} // namespace

// ---------------------------------------------------------------------------
// PermGroup

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> generators,
                                     std::size_t cap)
{
  if (degree == 0)
    degree = 1;
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw DomainError("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                        ", expected " + std::to_string(degree));

  PermGroup G;
  G.degree_ = degree;
  G.generators_ = std::move(generators);

  G.elements_.push_back(Permutation::identity(degree));
  G.lookup_.emplace(perm_key(G.elements_[0]), 0);
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (const auto &gen : G.generators_) {
      Permutation next = G.elements_[head] * gen;
      auto [it, inserted] = G.lookup_.emplace(perm_key(next), Elem(G.elements_.size()));
      if (inserted) {
        if (G.elements_.size() >= cap)
          throw DomainError("group order exceeds cap of " + std::to_string(cap));
        G.elements_.push_back(std::move(next));
      }
    }
  }

  const std::size_t n = G.elements_.size();
  G.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      G.table_[a * n + b] = G.lookup_.at(perm_key(G.elements_[a] * G.elements_[b]));

  G.inverse_.resize(n);
  G.element_order_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    G.inverse_[a] = G.lookup_.at(perm_key(G.elements_[a].inverse()));
    std::size_t k = 1;
    for (Elem x = Elem(a); x != PermGroup::identity(); x = G.mult(x, Elem(a)))
      ++k;
    G.element_order_[a] = k;
  }
  return G;
}

PermGroup PermGroup::construct(const GroupDescription &desc, std::size_t cap)
{
  RawGroup raw = raw_generators(desc);
  return from_generators(raw.degree, std::move(raw.gens), cap);
}

std::int64_t PermGroup::index_of(const Permutation &p) const
{
  if (p.degree() != degree_)
    return -1;
  auto it = lookup_.find(perm_key(p));
  return it == lookup_.end() ? -1 : std::int64_t(it->second);
}

std::size_t PermGroup::exponent() const
{
  return *std::max_element(element_order_.begin(), element_order_.end());
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(std::vector<Elem> members, std::size_t parent_order)
: members_(std::move(members)), mask_(parent_order, false)
{
  std::sort(members_.begin(), members_.end());
  for (Elem e : members_)
    mask_[e] = true;
}

Subgroup Subgroup::generated_by(const PermGroup &g, std::span<const Elem> gens)
{
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> found{PermGroup::identity()};
  in[PermGroup::identity()] = true;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Elem s : gens) {
      if (s >= g.order())
        throw DomainError("generator index out of range");
      Elem next = g.mult(found[head], s);
      if (!in[next]) {
        in[next] = true;
        found.push_back(next);
      }
    }
  }
  return Subgroup(std::move(found), g.order());
}

Subgroup Subgroup::trivial(const PermGroup &g)
{
  return Subgroup({PermGroup::identity()}, g.order());
}

Subgroup Subgroup::whole(const PermGroup &g)
{
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(std::move(all), g.order());
}

Subgroup Subgroup::from_members(const PermGroup &g, std::vector<Elem> members)
{
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != PermGroup::identity())
    throw DomainError("subset does not contain the identity");
  if (members.back() >= g.order())
    throw DomainError("element index out of range");
  Subgroup s(std::move(members), g.order());
  for (Elem a : s.members_)
    for (Elem b : s.members_)
      if (!s.mask_[g.mult(a, b)])
        throw DomainError("subset is not closed under multiplication");
  return s;
}

bool Subgroup::contains(const Subgroup &other) const
{
  if (other.order() > order())
    return false;
  return std::all_of(other.members_.begin(), other.members_.end(),
                     [&](Elem e) { return mask_[e]; });
}

std::vector<Elem> Subgroup::generators(const PermGroup &g) const
{
  std::vector<Elem> gens;
  std::vector<bool> covered(g.order(), false);
  covered[PermGroup::identity()] = true;
  std::size_t covered_count = 1;
  for (Elem e : members_) {
    if (covered[e])
      continue;
    gens.push_back(e);
    Subgroup sub = generated_by(g, gens);
    for (Elem m : sub.members_)
      covered[m] = true;
    covered_count = sub.order();
    if (covered_count == order())
      break;
  }
  return gens;
}

Subgroup Subgroup::conjugated_by(const PermGroup &g, Elem x) const
{
  std::vector<Elem> out;
  out.reserve(members_.size());
  for (Elem h : members_)
    out.push_back(g.conjugate(h, x));
  return Subgroup(std::move(out), mask_.size());
}

std::strong_ordering Subgroup::operator<=>(const Subgroup &rhs) const
{
  if (auto c = order() <=> rhs.order(); c != 0)
    return c;
  return members_ <=> rhs.members_;
}

void require_member_of(const PermGroup &g, const Subgroup &s, const char *what)
{
  if (s.parent_order() != g.order())
    throw DomainError(std::string(what) + " is not a subgroup of this group");
}

} // namespace ttspec
