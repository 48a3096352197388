// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "ttspec/burnside.hpp"
#include "ttspec/serialize.hpp"
#include "ttspec/tt_ideals.hpp"
#include "ttspec/tt_spectrum.hpp"

using namespace ttspec;

namespace {

// Collects the first few mismatches so a failing line says what went wrong.
struct Check
{
  std::size_t failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string &what)
  {
    if (ok)
      return;
    if (failures < 3)
      detail << (failures ? "; " : "") << what;
    ++failures;
  }
};

using Edge = std::pair<TTPrime, TTPrime>;

std::set<Edge> reduction_edges(const SpectrumPoset &poset, Verdict status = Verdict::yes)
{
  std::set<Edge> out;
  for (const PosetEdge &e : poset.edges())
    if (e.status == status)
      out.insert({poset.points()[e.from], poset.points()[e.to]});
  return out;
}

json read_golden(const std::string &name)
{
  std::ifstream in(std::string(TTSPEC_GOLDEN_DIR) + "/" + name);
  if (!in)
    return json();
  return json::parse(in);
}

// The chain P(c,p,N) -> ... -> P(c,p,2) -> P(c,0,1), plus P(c,p,inf) -> P(c,p,N).
void add_tower(std::set<Edge> &edges, ClassId c, int p, int height, bool infinity)
{
  for (int n = 2; n <= height; ++n)
    edges.insert({TTPrime{c, p, n}, n == 2 ? TTPrime{c, 0, 1} : TTPrime{c, p, n - 1}});
  if (infinity)
    edges.insert({TTPrime{c, p, kInfinity}, TTPrime{c, p, height}});
}

// P(k,p,n) -> P(h,p,n-1) for 2 <= n <= height, level 1 read as the char-0 point.
void add_shift_one(std::set<Edge> &edges, ClassId k, ClassId h, int p, int height)
{
  for (int n = 2; n <= height; ++n)
    edges.insert({TTPrime{k, p, n}, n == 2 ? TTPrime{h, 0, 1} : TTPrime{h, p, n - 1}});
}

// ---------------------------------------------------------------------------

void criterion_1(Check &c)
{
  auto lat = oracle::lattice_of("sym:3");
  MarksTable m = table_of_marks(lat);
  c.expect(m.size() == 4, "S_3 should have 4 classes");
  for (ClassId h = 0; h < m.size(); ++h)
    for (ClassId k = 0; k < m.size(); ++k) {
      const auto expected = std::int64_t(oracle::coset_fixed_points(
          lat->group(), lat->representative(h).members(), lat->representative(k).members()));
      c.expect(m.entry(h, k) == expected,
               "entry(" + std::to_string(h) + "," + std::to_string(k) + ")");
    }
}

void criterion_2(Check &c)
{
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
  for (const char *spec : {"sym:3", "cyclic:4", "dihedral:8"}) {
    auto lat = oracle::lattice_of(spec);
    BurnsideRing ring(lat);
    for (int trial = 0; trial < 1000; ++trial) {
      BurnsideElement x = ring.zero(), y = ring.zero();
      for (auto &v : x.coeffs)
        v = coeff(rng);
      for (auto &v : y.coeffs)
        v = coeff(rng);
      auto mx = ring.mark_vector(x), my = ring.mark_vector(y);
      auto mp = ring.mark_vector(ring.multiply(x, y));
      for (ClassId h = 0; h < ring.rank(); ++h)
        c.expect(mp[h] == mx[h] * my[h], std::string(spec) + " ghost product");
    }
    for (ClassId h = 0; h < ring.rank(); ++h)
      for (ClassId k = 0; k < ring.rank(); ++k) {
        BurnsideElement prod = ring.multiply(ring.basis(h), ring.basis(k));
        c.expect(prod.coeffs == oracle::product_of_cosets(*lat, h, k),
                 std::string(spec) + " basis product vs orbit count");
        for (auto v : prod.coeffs)
          c.expect(v >= 0, std::string(spec) + " negative basis-product coefficient");
      }
  }
}

void criterion_3(Check &c)
{
  for (int p : {2, 3, 5}) {
    auto lat = oracle::lattice_of("cyclic:" + std::to_string(p));
    BurnsideSpectrum s = burnside_spectrum(lat, {p});
    c.expect(s.points.size() == 3, "C_p should have 3 Dress points");
    std::size_t collisions = 0;
    for (std::size_t i = 0; i < s.points.size(); ++i)
      if (s.collided[i].size() > 1) {
        ++collisions;
        c.expect(s.points[i].kind == BurnsidePrime::Kind::characteristic_p &&
                     s.collided[i] == std::vector<ClassId>{0, 1},
                 "C_p collision should be p(1,p)=p(C_p,p)");
      }
    c.expect(collisions == 1, "C_p should have one collision");
  }

  auto lat = oracle::lattice_of("sym:3");
  BurnsideSpectrum s = burnside_spectrum(lat, {2, 3});
  const ClassId one = 0, c2 = *lat->find_class("C_2"), a3 = *lat->find_class("C_3"),
                g = lat->whole_class();
  std::set<std::pair<int, std::vector<ClassId>>> got;
  for (std::size_t i = 0; i < s.points.size(); ++i)
    if (s.points[i].kind == BurnsidePrime::Kind::characteristic_p)
      got.insert({s.points[i].prime, s.collided[i]});
  const std::set<std::pair<int, std::vector<ClassId>>> expected = {
      {2, {one, c2}}, {2, {a3, g}}, {3, {one, a3}}, {3, {c2}}, {3, {g}}};
  c.expect(got == expected, "S_3 collision classes");
}

void criterion_4(Check &c)
{
  const int height = 6;
  for (int p : {2, 3}) {
    const std::string spec = "cyclic:" + std::to_string(p);
    auto lat = oracle::lattice_of(spec);
    SpectrumPoset poset = build_spectrum(lat, {p}, height, true, Mode::conjectural);

    std::set<Edge> expected;
    add_tower(expected, 0, p, height, true);
    add_tower(expected, 1, p, height, true);
    add_shift_one(expected, 0, 1, p, height);
    expected.insert({TTPrime{0, p, kInfinity}, TTPrime{1, p, kInfinity}});
    c.expect(reduction_edges(poset) == expected, spec + " edge set");
    c.expect(reduction_edges(poset, Verdict::unknown).empty(), spec + " unknown edges");

    for (int n = 2; n <= height; ++n) {
      auto q = poset.index_of({0, p, n});
      auto P = poset.index_of({1, p, n});
      c.expect(poset.relation(*q, *P) == Verdict::no, spec + " P(1,p,n) in P(C_p,p,n)");
    }
    json golden = read_golden("cp" + std::to_string(p) + ".json");
    c.expect(to_json(to_document(poset, spec)) == golden, spec + " golden file");
  }
}

void criterion_5(Check &c)
{
  const int height = 5;
  auto lat = oracle::lattice_of("sym:3");
  SpectrumPoset poset = build_spectrum(lat, {2, 3}, height, false, Mode::conjectural);
  const ClassId one = 0, c2 = *lat->find_class("C_2"), a3 = *lat->find_class("C_3"),
                g = lat->whole_class();

  std::set<Edge> cross;
  for (const Edge &e : reduction_edges(poset))
    if (e.first.cls != e.second.cls)
      cross.insert(e);
  std::set<Edge> expected;
  add_shift_one(expected, one, c2, 2, height);
  add_shift_one(expected, a3, g, 2, height);
  add_shift_one(expected, one, a3, 3, height);
  c.expect(cross == expected, "S_3 cross-class edges");

  std::set<Edge> within;
  for (const Edge &e : reduction_edges(poset))
    if (e.first.cls == e.second.cls)
      within.insert(e);
  std::set<Edge> towers;
  for (ClassId k : {one, c2, a3, g})
    for (int p : {2, 3})
      add_tower(towers, k, p, height, false);
  c.expect(within == towers, "S_3 within-class edges");

  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j = 0; j < poset.size(); ++j) {
      const TTPrime &q = poset.points()[i], &P = poset.points()[j];
      const bool c2_s3 = (q.cls == c2 && P.cls == g) || (q.cls == g && P.cls == c2);
      if (c2_s3 && (q.characteristic == 3 || P.characteristic == 3))
        c.expect(poset.relation(i, j) == Verdict::no, "C_2 / S_3 inclusion at p=3");
    }

  c.expect(to_json(to_document(poset, "sym:3")) == read_golden("s3_h5.json"), "S_3 golden file");
}

void criterion_6(Check &c)
{
  for (const char *spec : {"sym:3", "cyclic:6", "cyclic:30"}) {
    auto lat = oracle::lattice_of(spec);
    InclusionOracle o(lat);
    for (int height = 1; height <= 5; ++height)
      for (bool inf : {false, true}) {
        SpectrumPoset poset = build_spectrum(lat, lat->order_primes(), height, inf, Mode::unconditional);
        for (const TTPrime &q : poset.points())
          for (const TTPrime &P : poset.points())
            c.expect(o.inclusion(q, P, Mode::unconditional).verdict != Verdict::unknown,
                     std::string(spec) + " unknown verdict " + to_string(*lat, q) + " in " +
                         to_string(*lat, P));
      }
  }
}

void criterion_7(Check &c)
{
  for (const char *spec : {"cyclic:4", "cyclic:8"}) {
    auto lat = oracle::lattice_of(spec);
    InclusionOracle o(lat);
    const int s = exact_log(std::int64_t(lat->group().order()), 2);
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 7; ++n) {
        const ThreeValued v = o.inclusion(make_prime(*lat, 0, 2, n),
                                          make_prime(*lat, lat->whole_class(), 2, m), Mode::unconditional);
        const std::string at = std::string(spec) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
        if (n >= m + s)
          c.expect(v.verdict == Verdict::yes, at + " expected yes");
        else if (n <= m)
          c.expect(v.verdict == Verdict::no, at + " expected no");
        else
          c.expect(v == ThreeValued::unknown(m + 1, m + s - 1), at + " expected unknown band");
      }
  }
}

void criterion_8(Check &c)
{
  for (const char *spec : {"sym:3", "cyclic:4", "dihedral:8", "cyclic:6"}) {
    auto lat = oracle::lattice_of(spec);
    for (Mode mode : {Mode::conjectural, Mode::unconditional})
      for (int height = 1; height <= 5; ++height)
        for (bool inf : {false, true}) {
          SpectrumPoset poset = build_spectrum(lat, lat->order_primes(), height, inf, mode);
          for (std::size_t i = 0; i < poset.size(); ++i)
            for (std::size_t j = 0; j < poset.size(); ++j) {
              if (i == j || poset.relation(i, j) != Verdict::yes)
                continue;
              const TTPrime &q = poset.points()[i], &P = poset.points()[j];
              c.expect(burnside_contains(*lat, comparison_map(*lat, P), comparison_map(*lat, q)),
                       std::string(spec) + " rho(" + to_string(*lat, P) + ") not in rho(" +
                           to_string(*lat, q) + ")");
            }
        }
  }
}

void criterion_9(Check &c)
{
  for (const char *spec : {"cyclic:2", "cyclic:4", "cyclic:8", "cyclic:2 x cyclic:2"}) {
    auto lat = oracle::lattice_of(spec);
    const int r = exact_log(std::int64_t(lat->group().order()), 2);
    SpectrumPoset poset = build_spectrum(lat, {2}, 4, true, Mode::conjectural);
    for (int n = r + 1; n <= r + 3; ++n) {
      const std::string at = std::string(spec) + " N=" + std::to_string(n);
      const auto z = z_set(poset, 2, n);
      c.expect(z == closure(make_prime(*lat, lat->whole_class(), 2, n - r), poset), at + " closure");
      const ZSetReport rep = z_set_check(poset, 2, n);
      c.expect(rep.closed && rep.irreducible && rep.ok(), at + " closed/irreducible");
    }
  }
}

void criterion_10(Check &c)
{
  std::mt19937 rng(1010);
  for (const char *spec : {"cyclic:1", "cyclic:2", "cyclic:3", "sym:3"}) {
    auto lat = oracle::lattice_of(spec);
    std::vector<int> primes = lat->order_primes();
    if (primes.empty())
      primes = {2};
    for (int height = 1; height <= 3; ++height)
      for (bool inf : {false, true}) {
        SpectrumPoset poset = build_spectrum(lat, primes, height, inf, Mode::conjectural);
        if (poset.size() > 20)
          continue;
        c.expect(count_admissible(poset) == oracle::brute_force_ideal_count(poset),
                 std::string(spec) + " height " + std::to_string(height) + " count");
      }

    InclusionOracle o(lat);
    std::uniform_int_distribution<int> pick(0, 5);
    for (int trial = 0; trial < 1000; ++trial) {
      AdmissibleFunction f(lat, primes);
      for (ClassId k = 0; k < lat->class_count(); ++k)
        for (int p : primes) {
          const int v = pick(rng);
          f.set(k, p, v == 5 ? kInfinity : ExtNat(v));
        }
      const bool a = check_condition_a(f, o, Mode::conjectural) == Verdict::yes;
      c.expect(a == check_condition_a_prime(f, o), std::string(spec) + " (A) vs (A')");
    }
  }
}

void criterion_11(Check &c)
{
  for (const auto &spec : oracle::corpus()) {
    auto lat = oracle::lattice_of(spec);
    std::vector<int> primes = lat->order_primes();
    if (primes.empty())
      primes = {2};
    SpectrumPoset poset = build_spectrum(lat, primes, 3, true, Mode::conjectural);
    for (ClassId k = 0; k < lat->class_count(); ++k) {
      const auto got = support_of_basis(k, poset);
      std::vector<TTPrime> expected;
      for (const TTPrime &p : poset.points())
        if (n_transporter_size(lat->group(), lat->representative(p.cls), lat->representative(k)) != 0)
          expected.push_back(p);
      c.expect(got == expected, spec + " class " + lat->cls(k).name);
    }
  }
}

struct Criterion
{
  int id;
  const char *name;
  double limit_ms;
  std::function<void(Check &)> run;
};

} // namespace

int main()
{
  const std::vector<Criterion> criteria = {
      {1, "table of marks of S_3 vs coset enumeration", 1000, criterion_1},
      {2, "ghost homomorphism and basis products", 5000, criterion_2},
      {3, "Dress spectrum collisions for C_p and S_3", 1000, criterion_3},
      {4, "C_p spectrum edges and golden file", 1000, criterion_4},
      {5, "S_3 spectrum edges and golden file", 1000, criterion_5},
      {6, "square-free groups give no unknown verdicts", 10000, criterion_6},
      {7, "unknown band for C_4 and C_8", 1000, criterion_7},
      {8, "comparison map reverses inclusions", 5000, criterion_8},
      {9, "Z-sets are irreducible closures", 2000, criterion_9},
      {10, "tt-ideal count and (A) vs (A')", 30000, criterion_10},
      {11, "support formula vs transporter counts", 2000, criterion_11},
  };

  int failed = 0;
  for (const Criterion &cr : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.run(check);
    } catch (const std::exception &e) {
      error = e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = error.empty() && check.failures == 0 && ms < cr.limit_ms;
    failed += !ok;

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1f ms / %.0f ms", ms, cr.limit_ms);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.name << " ["
              << timing << "]";
    if (!error.empty())
      std::cout << "  exception: " << error;
    else if (check.failures)
      std::cout << "  " << check.failures << " mismatch(es): " << check.detail.str();
    else if (ms >= cr.limit_ms)
      std::cout << "  over time limit";
    std::cout << '\n';
  }
  std::cout << (criteria.size() - std::size_t(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
