#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hall/cf.hpp"
#include "hall/oracle.hpp"
#include "hall/sieve.hpp"

using hall::Integer;
using hall::Natural;
namespace sieve = hall::sieve;

namespace {

bool congruent(const Integer& a, const Integer& b, const Natural& m) {
  return hall::mod_floor(a - b, m) == 0;
}

// Brute-force stage oracles over GMP integers.
std::vector<std::uint64_t> brute_quartic(std::uint64_t q, std::uint64_t p0, long f) {
  std::vector<std::uint64_t> out;
  const Natural q2 = Natural(q) * q;
  for (std::uint64_t p1 = 0; p1 < q * q; ++p1) {
    if (p1 % q != p0) continue;
    if (congruent(hall::pow(Natural(p1), 4), f, q2)) out.push_back(p1);
  }
  return out;
}

std::vector<std::uint64_t> brute_p2(std::uint64_t q, std::uint64_t p1, std::uint64_t c, long f) {
  std::vector<std::uint64_t> out;
  const Natural q3 = Natural(q) * q * q;
  for (std::uint64_t p2 = 0; p2 < q * q * q; ++p2) {
    if (p2 % (q * q) != p1) continue;
    const Integer v = hall::pow(Natural(p2), 4) - 2 * Natural(p2) * c + f;
    if (congruent(v, 0, q3)) out.push_back(p2);
  }
  return out;
}

std::vector<Integer> brute_h(std::uint64_t q, std::uint64_t c, long f, std::uint64_t p2) {
  const Natural q3 = Natural(q) * q * q;
  const Integer target = 5 * Natural(c) * hall::pow(Natural(p2), 3) - 4 * hall::pow(Natural(p2), 6);
  const Integer neg = -8 * Natural(c) * c;
  const Natural nine_f = 9 * abs(Integer(f));
  const long bound = 72L * static_cast<long>(q * q * q * q);
  std::vector<Integer> out;
  for (long h = -bound; h <= bound; ++h) {
    if (h == 0) continue;
    if (congruent(h, target, q3) && congruent(h, neg, nine_f)) out.push_back(h);
  }
  return out;
}

std::vector<std::uint64_t> xs_of(const std::vector<hall::GoodTriplet>& ts) {
  std::vector<std::uint64_t> out;
  for (const auto& t : ts) out.push_back(t.x.get_ui());
  return out;
}

}  // namespace

TEST_CASE("enum_f") {
  std::vector<std::int64_t> expect;
  for (int i = -8; i <= 8; ++i) expect.push_back(3 * i + 1);
  CHECK(sieve::enum_f(3, 1) == expect);
  CHECK(sieve::enum_f(3, 1).front() == -23);
  CHECK(sieve::enum_f(3, 1).back() == 25);

  const auto f2 = sieve::enum_f(2, 1);
  CHECK(f2.size() == 17);
  for (auto f : f2) CHECK(f % 2 != 0);

  const auto f5 = sieve::enum_f(5, 2);
  CHECK(f5.size() == 17);
  for (auto f : f5) CHECK(((f % 5) + 5) % 5 == 1);

  // zero is removed when p0^4 mod q = 0 would place it in range; gcd makes
  // that impossible, so every list has 17 members
  for (std::uint64_t q = 2; q < 60; ++q)
    for (std::uint64_t p0 = 1; p0 < q; ++p0)
      if (std::gcd(p0, q) == 1) REQUIRE(sieve::enum_f(q, p0).size() == 17);
}

TEST_CASE("quartic_lift examples and brute force") {
  CHECK(sieve::quartic_lift(3, 1, 1) == std::vector<std::uint64_t>{1});
  // 2^4 = 16 = 7, 5^4 = 625 = 4, 8^4 = 4096 = 1 (mod 9)
  CHECK(sieve::quartic_lift(3, 2, 7) == std::vector<std::uint64_t>{2});
  CHECK(sieve::quartic_lift(3, 2, 4) == std::vector<std::uint64_t>{5});
  // mod 4 both 1 and 3 are fourth roots of 1
  CHECK(sieve::quartic_lift(2, 1, 1) == std::vector<std::uint64_t>{1, 3});
  CHECK(sieve::quartic_lift(2, 1, -3) == std::vector<std::uint64_t>{1, 3});
  CHECK(sieve::quartic_lift(2, 1, 3).empty());

  for (std::uint64_t q = 2; q <= 24; ++q)
    for (std::uint64_t p0 = 1; p0 < q; ++p0) {
      if (std::gcd(p0, q) != 1) continue;
      for (auto f : sieve::enum_f(q, p0)) REQUIRE(sieve::quartic_lift(q, p0, f) == brute_quartic(q, p0, f));
    }
}

TEST_CASE("enum_c") {
  CHECK(sieve::enum_c(3, 1, 5) == std::vector<std::uint64_t>{1, 10, 19, 28, 37});
  // c < 3*3*3 + 1 = 28 excludes 28 itself
  CHECK(sieve::enum_c(3, 1, 3) == std::vector<std::uint64_t>{1, 10, 19});
  CHECK(sieve::enum_c(2, 1, 2) == std::vector<std::uint64_t>{1, 5, 9});
  CHECK(sieve::enum_c(2, 1, 0).empty());
  for (auto c : sieve::enum_c(7, 3, 40)) {
    CHECK(c % 49 == 27 % 49);
    CHECK(c < 3 * 7 * 40 + 1);
  }
}

TEST_CASE("lift_p2 examples and brute force") {
  CHECK(sieve::lift_p2(3, 1, 1, 1) == std::vector<std::uint64_t>{1});
  CHECK(sieve::lift_p2(3, 1, 10, 1) == brute_p2(3, 1, 10, 1));
  CHECK(sieve::lift_p2(2, 1, 1, 1) == brute_p2(2, 1, 1, 1));
  CHECK(217 % 27 == 1);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    const std::uint64_t q = 2 + rng() % 22;
    std::uint64_t p0 = 1 + rng() % (q - 1);
    while (std::gcd(p0, q) != 1) p0 = 1 + rng() % (q - 1);
    const auto fs = sieve::enum_f(q, p0);
    const auto f = fs[rng() % fs.size()];
    // any p1 in the class, not only quartic roots
    const std::uint64_t p1 = p0 + q * (rng() % q);
    const std::uint64_t c = 1 + rng() % 500;
    REQUIRE(sieve::lift_p2(q, p1, c, f) == brute_p2(q, p1, c, f));
  }
}

TEST_CASE("enum_h") {
  const auto hs = sieve::enum_h(3, 1, 1, 1);
  CHECK(std::find(hs.begin(), hs.end(), Integer(-161)) != hs.end());
  for (const auto& h : hs) {
    CHECK(hall::mod_floor(h, 27) == 1);
    CHECK(abs(h) <= 5832);
  }
  CHECK(hs == brute_h(3, 1, 1, 1));

  const auto h2 = sieve::enum_h(2, 1, 1, 1);
  CHECK(h2 == brute_h(2, 1, 1, 1));
  REQUIRE(h2.size() >= 2);
  CHECK(h2[1] - h2[0] == 72);

  // q = 3, f = 3: q^3 and 9|f| = 27 share everything, so the two classes
  // must agree mod 27 or the list is empty
  CHECK(sieve::enum_h(3, 2, 3, 1) == brute_h(3, 2, 3, 1));

  std::mt19937_64 rng(23);
  int empties = 0;
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t q = 2 + rng() % 6;
    const long f = static_cast<long>(rng() % (16 * q + 1)) - static_cast<long>(8 * q);
    if (f == 0) continue;
    const std::uint64_t c = 1 + rng() % 200;
    const std::uint64_t p2 = rng() % (q * q * q);
    const auto got = sieve::enum_h(q, c, f, p2);
    if (got.empty()) ++empties;
    REQUIRE(got == brute_h(q, c, f, p2));
  }
  CHECK(empties > 0);
}

TEST_CASE("the true quadruple of x = 5234 survives every stage") {
  const auto d = hall::quadruple_from_triplet(*hall::oracle::goodness(5234));
  REQUIRE(d.quad);
  const std::uint64_t q = 3, p0 = 217 % 3;
  const long f = d.quad->f().get_si();
  const std::uint64_t c = d.quad->c().get_ui();
  const auto fs = sieve::enum_f(q, p0);
  CHECK(std::find(fs.begin(), fs.end(), f) != fs.end());
  const auto p1s = sieve::quartic_lift(q, p0, f);
  CHECK(std::find(p1s.begin(), p1s.end(), 217 % 9) != p1s.end());
  const auto cs = sieve::enum_c(q, 217 % 9, 2);
  CHECK(std::find(cs.begin(), cs.end(), c) != cs.end());
  const auto p2s = sieve::lift_p2(q, 217 % 9, c, f);
  CHECK(std::find(p2s.begin(), p2s.end(), 217 % 27) != p2s.end());
  const auto hs = sieve::enum_h(q, c, f, 217 % 27);
  CHECK(std::find(hs.begin(), hs.end(), d.quad->h()) != hs.end());
}

TEST_CASE("search_q") {
  std::vector<hall::GoodTriplet> got;
  auto sink = [&](const hall::GoodTriplet& t) { got.push_back(t); };

  sieve::Counters counters;
  const auto n = sieve::search_q(3, 10, sink, &counters);
  CHECK(n == got.size());
  CHECK(counters.found == n);
  CHECK(counters.recoveries > 0);
  auto xs = xs_of(got);
  CHECK(std::count(xs.begin(), xs.end(), 5234) == 1);
  CHECK(std::count(xs.begin(), xs.end(), 8158) == 1);

  // x = 367806 has q = 2 and C = 13 < 3*2*3 + 1
  const auto d = hall::quadruple_from_triplet(*hall::oracle::goodness(367806));
  CHECK(d.approx.q == 2);
  CHECK(d.image.c_val == 13);
  got.clear();
  sieve::search_q(2, 3, sink, nullptr);
  xs = xs_of(got);
  CHECK(std::count(xs.begin(), xs.end(), 367806) == 1);

  got.clear();
  CHECK(sieve::search_q(2, 1, sink, nullptr) == 0);
  CHECK(got.empty());

  CHECK_THROWS_AS(sieve::search_q(1, 10, sink, nullptr), std::invalid_argument);
}

TEST_CASE("search_range soundness and small-scale completeness") {
  const auto summary = sieve::search_range(2, 4, 4);
  const auto oracle_all = hall::oracle::scan(2, 1000000);
  std::set<std::uint64_t> oracle_xs;
  for (const auto& t : oracle_all) oracle_xs.insert(t.x.get_ui());

  std::set<std::uint64_t> found;
  for (const auto& t : summary.triplets) {
    CHECK(hall::is_good(t.x, t.y));
    if (t.x <= 1000000) {
      CHECK(oracle_xs.contains(t.x.get_ui()));
      found.insert(t.x.get_ui());
    }
  }
  // Every oracle triplet whose selected convergent falls in range and whose
  // C is below the enumeration bound must be found.
  for (const auto& t : oracle_all) {
    const auto d = hall::quadruple_from_triplet(t);
    if (d.approx.q < 2 || d.approx.q > 4) continue;
    if (d.image.c_val >= 3 * d.approx.q * 4 + 1) continue;
    CHECK(found.contains(t.x.get_ui()));
  }
  CHECK(std::is_sorted(summary.triplets.begin(), summary.triplets.end(),
                       [](const auto& a, const auto& b) { return a.x < b.x; }));

  CHECK(sieve::search_range(5, 4, 10).triplets.empty());
}

TEST_CASE("search_range finds every good x up to 10^6 except x = 2") {
  const auto summary = sieve::search_range(2, 10, 10);
  std::set<std::uint64_t> found;
  for (const auto& t : summary.triplets)
    if (t.x <= 1000000) found.insert(t.x.get_ui());
  CHECK(found == std::set<std::uint64_t>{5234, 8158, 93844, 367806, 421351, 720114, 939787});
}

TEST_CASE("merge_unique is order independent") {
  auto summary = sieve::search_range(2, 12, 12);
  std::vector<hall::GoodTriplet> parts;
  for (std::uint64_t q = 2; q <= 12; ++q) {
    sieve::search_q(q, 12, [&](const hall::GoodTriplet& t) { parts.push_back(t); });
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(parts.begin(), parts.end(), rng);
    std::vector<hall::GoodTriplet> merged;
    sieve::merge_unique(merged, parts);
    REQUIRE(merged.size() == summary.triplets.size());
    for (std::size_t j = 0; j < merged.size(); ++j) {
      CHECK(merged[j].x == summary.triplets[j].x);
      CHECK(merged[j].approx->q == summary.triplets[j].approx->q);
      CHECK(merged[j].approx->p == summary.triplets[j].approx->p);
    }
  }
}
