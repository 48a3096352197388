#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "ttspec/burnside.hpp"
#include "ttspec/error.hpp"

using namespace ttspec;

namespace {

ClassId cls(const SubgroupLattice &lat, const std::string &name)
{
  auto c = lat.find_class(name);
  REQUIRE(c.has_value());
  return *c;
}

BurnsideElement random_element(const BurnsideRing &ring, std::mt19937 &rng)
{
  std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
  BurnsideElement x = ring.zero();
  for (auto &c : x.coeffs)
    c = coeff(rng);
  return x;
}

} // namespace

TEST_CASE("table_of_marks examples")
{
  auto s3 = oracle::lattice_of("sym:3");
  MarksTable m = table_of_marks(s3);
  const std::int64_t expected[4][4] = {{6, 3, 2, 1}, {0, 1, 0, 1}, {0, 0, 2, 1}, {0, 0, 0, 1}};
  REQUIRE(m.size() == 4);
  for (ClassId h = 0; h < 4; ++h)
    for (ClassId k = 0; k < 4; ++k)
      CHECK(m.entry(h, k) == expected[h][k]);

  auto c1 = oracle::lattice_of("cyclic:1");
  MarksTable t = table_of_marks(c1);
  REQUIRE(t.size() == 1);
  CHECK(t.entry(0, 0) == 1);
}

TEST_CASE("table_of_marks matches coset enumeration, triangular, diagonal [N(K):K]")
{
  for (const auto &spec : oracle::corpus()) {
    auto lat = oracle::lattice_of(spec);
    const PermGroup &g = lat->group();
    MarksTable m = table_of_marks(lat);
    CAPTURE(spec);
    for (ClassId h = 0; h < m.size(); ++h)
      for (ClassId k = 0; k < m.size(); ++k) {
        const auto &H = lat->representative(h).members();
        const auto &K = lat->representative(k).members();
        CHECK(m.entry(h, k) == std::int64_t(oracle::coset_fixed_points(g, H, K)));
        CHECK((m.entry(h, k) != 0) == lat->class_subconjugate(h, k));
        if (h > k)
          CHECK(m.entry(h, k) == 0);
      }
    for (ClassId k = 0; k < m.size(); ++k)
      CHECK(m.entry(k, k) == std::int64_t(lat->cls(k).normalizer_order / lat->cls(k).order));
    for (ClassId k = 0; k < m.size(); ++k)
      CHECK(m.entry(0, k) == std::int64_t(g.order() / lat->cls(k).order));
  }
}

TEST_CASE("mark_hom examples")
{
  auto s3 = oracle::lattice_of("sym:3");
  BurnsideRing ring(s3);
  for (ClassId h = 0; h < ring.rank(); ++h)
    CHECK(ring.mark_hom(ring.unit(), h) == 1);
  CHECK(ring.mark_hom(ring.basis(0), 0) == 6);
  CHECK(ring.mark_hom(ring.basis(cls(*s3, "C_2")), cls(*s3, "C_2")) == 1);
  CHECK_THROWS_AS(ring.mark_hom(ring.unit(), 4), DomainError);
  CHECK_THROWS_AS(ring.basis(7), DomainError);
}

TEST_CASE("multiply examples")
{
  auto s3 = oracle::lattice_of("sym:3");
  BurnsideRing ring(s3);
  const ClassId c2 = cls(*s3, "C_2");

  BurnsideElement x = ring.add(ring.basis(c2), ring.basis(cls(*s3, "C_3")));
  CHECK(ring.multiply(x, ring.unit()) == x);

  BurnsideElement sq = ring.multiply(ring.basis(c2), ring.basis(c2));
  CHECK(sq == ring.add(ring.basis(c2), ring.basis(0)));
  CHECK(sq.coeffs == oracle::product_of_cosets(*s3, c2, c2));

  for (const auto &spec : oracle::corpus()) {
    auto lat = oracle::lattice_of(spec);
    BurnsideRing r(lat);
    const auto order = std::int64_t(lat->group().order());
    for (ClassId k = 0; k < r.rank(); ++k) {
      BurnsideElement expected = r.zero();
      expected.coeffs[0] = order / std::int64_t(lat->cls(k).order);
      CHECK(r.multiply(r.basis(0), r.basis(k)) == expected);
    }
  }
}

TEST_CASE("basis products agree with orbit decomposition of G/H x G/K")
{
  for (const auto &spec : oracle::corpus()) {
    auto lat = oracle::lattice_of(spec);
    if (lat->group().order() > 12)
      continue;
    BurnsideRing ring(lat);
    CAPTURE(spec);
    for (ClassId h = 0; h < ring.rank(); ++h)
      for (ClassId k = 0; k < ring.rank(); ++k) {
        BurnsideElement prod = ring.multiply(ring.basis(h), ring.basis(k));
        CHECK(prod.coeffs == oracle::product_of_cosets(*lat, h, k));
        for (auto c : prod.coeffs)
          CHECK(c >= 0);
      }
  }
}

TEST_CASE("ghost homomorphism on random elements")
{
  std::mt19937 rng(20261019);
  for (const auto &spec : oracle::corpus()) {
    auto lat = oracle::lattice_of(spec);
    BurnsideRing ring(lat);
    for (int trial = 0; trial < 50; ++trial) {
      BurnsideElement x = random_element(ring, rng);
      BurnsideElement y = random_element(ring, rng);
      auto mx = ring.mark_vector(x);
      auto my = ring.mark_vector(y);
      auto mp = ring.mark_vector(ring.multiply(x, y));
      auto ms = ring.mark_vector(ring.add(x, y));
      for (ClassId h = 0; h < ring.rank(); ++h) {
        CHECK(mp[h] == mx[h] * my[h]);
        CHECK(ms[h] == mx[h] + my[h]);
      }
      CHECK(ring.from_marks(mx) == x);
    }
  }
}

TEST_CASE("from_marks rejects non-ghost vectors")
{
  auto c2 = oracle::lattice_of("cyclic:2");
  BurnsideRing ring(c2);
  // marks (1, 0): would need [C2/1] coefficient 1/2
  CHECK_THROWS_AS(ring.from_marks({1, 0}), InternalError);
}

TEST_CASE("burnside_spectrum examples")
{
  for (int p : {2, 3, 5}) {
    auto cp = oracle::lattice_of("cyclic:" + std::to_string(p));
    BurnsideSpectrum s = burnside_spectrum(cp, {p});
    CHECK(s.points.size() == 3);
    REQUIRE(s.collided.size() == 3);
    CHECK(s.collided[2] == std::vector<ClassId>{0, 1});
    CHECK(s.inclusions.size() == 2);
  }

  auto s3 = oracle::lattice_of("sym:3");
  BurnsideSpectrum s = burnside_spectrum(s3, {2, 3});
  std::set<std::pair<int, std::vector<ClassId>>> groups;
  for (std::size_t i = 0; i < s.points.size(); ++i)
    if (s.points[i].kind == BurnsidePrime::Kind::characteristic_p)
      groups.insert({s.points[i].prime, s.collided[i]});
  const ClassId one = 0, c2 = cls(*s3, "C_2"), a3 = cls(*s3, "C_3"), whole = s3->whole_class();
  std::set<std::pair<int, std::vector<ClassId>>> expected = {
      {2, {one, c2}}, {2, {a3, whole}}, {3, {one, a3}}, {3, {c2}}, {3, {whole}}};
  CHECK(groups == expected);

  auto c1 = oracle::lattice_of("cyclic:1");
  BurnsideSpectrum t = burnside_spectrum(c1, {2});
  CHECK(t.points.size() == 2);
  CHECK(t.inclusions.size() == 1);

  CHECK_THROWS_AS(burnside_spectrum(c1, {}), DomainError);
  CHECK_THROWS_AS(burnside_spectrum(c1, {6}), DomainError);
}

TEST_CASE("burnside_spectrum: Krull dimension 1, coprime primes do not collide")
{
  for (const auto &spec : oracle::corpus()) {
    auto lat = oracle::lattice_of(spec);
    std::vector<int> primes = lat->order_primes();
    primes.push_back(7);
    BurnsideSpectrum s = burnside_spectrum(lat, primes);
    CAPTURE(spec);
    for (auto [a, b] : s.inclusions) {
      CHECK(s.points[a].kind == BurnsidePrime::Kind::zero);
      CHECK(s.points[b].kind == BurnsidePrime::Kind::characteristic_p);
      CHECK(burnside_contains(*lat, s.points[a], s.points[b]));
    }
    // no chain of length two: nothing lies under a zero point, nothing above a p-point
    for (std::size_t i = 0; i < s.points.size(); ++i)
      for (std::size_t j = 0; j < s.points.size(); ++j)
        if (i != j && burnside_contains(*lat, s.points[i], s.points[j])) {
          CHECK(s.points[i].kind == BurnsidePrime::Kind::zero);
          CHECK(s.points[j].kind == BurnsidePrime::Kind::characteristic_p);
        }
    std::size_t sevens = 0;
    for (std::size_t i = 0; i < s.points.size(); ++i)
      if (s.points[i].prime == 7) {
        ++sevens;
        CHECK(s.collided[i].size() == 1);
      }
    CHECK(sevens == lat->class_count());
  }
}
