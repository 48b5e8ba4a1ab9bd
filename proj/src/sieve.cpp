#include "hall/sieve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hall/oracle.hpp"

namespace hall::sieve {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, unsigned e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

u64 reduce(std::int64_t v, u64 m) {
  const std::int64_t sm = static_cast<std::int64_t>(m);
  std::int64_t r = v % sm;
  if (r < 0) r += sm;
  return static_cast<u64>(r);
}

void check_q(u64 q) {
  if (q < 2 || q > kMaxQ) throw std::invalid_argument("sieve: q out of range");
}

// Keeps the lexicographically smallest (q, p) for each x.
bool better(const GoodTriplet& a, const GoodTriplet& b) {
  if (a.approx->q != b.approx->q) return a.approx->q < b.approx->q;
  return a.approx->p < b.approx->p;
}

}  // namespace

std::vector<std::int64_t> enum_f(u64 q, u64 p0) {
  check_q(q);
  const auto r = static_cast<std::int64_t>(powmod(p0, 4, q));
  const auto sq = static_cast<std::int64_t>(q);
  std::vector<std::int64_t> out;
  out.reserve(17);
  for (std::int64_t i = -8; i <= 8; ++i) {
    const std::int64_t f = i * sq + r;
    if (f != 0) out.push_back(f);
  }
  return out;
}

std::vector<u64> quartic_lift(u64 q, u64 p0, std::int64_t f) {
  check_q(q);
  const u64 q2 = q * q;
  const u64 target = reduce(f, q2);
  std::vector<u64> out;
  for (u64 i = 0; i < q; ++i) {
    const u64 p1 = p0 + i * q;
    if (powmod(p1, 4, q2) == target) out.push_back(p1);
  }
  return out;
}

std::vector<u64> enum_c(u64 q, u64 p1, u64 q_max) {
  check_q(q);
  const u64 q2 = q * q;
  const u64 limit = 3 * q * q_max + 1;  // c < limit
  std::vector<u64> out;
  for (u64 c = powmod(p1, 3, q2); c < limit; c += q2) out.push_back(c);
  return out;
}

std::vector<u64> lift_p2(u64 q, u64 p1, u64 c, std::int64_t f) {
  check_q(q);
  const u64 q2 = q * q;
  const u64 q3 = q2 * q;
  const u64 fm = reduce(f, q3);
  const u64 two_c = mulmod(2, c % q3, q3);
  std::vector<u64> out;
  for (u64 i = 0; i < q; ++i) {
    const u64 p2 = p1 + i * q2;
    // p2^4 + f - 2 p2 c, all mod q^3
    const u64 lhs = (powmod(p2, 4, q3) + fm) % q3;
    if (lhs == mulmod(p2 % q3, two_c, q3)) out.push_back(p2);
  }
  return out;
}

std::vector<Integer> enum_h(u64 q, u64 c, std::int64_t f, u64 p2) {
  check_q(q);
  if (f == 0) return {};
  const u64 q3 = q * q * q;
  const u64 p2_3 = powmod(p2, 3, q3);
  const u64 p2_6 = mulmod(p2_3, p2_3, q3);
  const u64 term = mulmod(mulmod(5, c % q3, q3), p2_3, q3);
  const u64 h2 = (term + q3 - mulmod(4, p2_6, q3)) % q3;

  const Natural cz(static_cast<unsigned long>(c));
  const Integer fz(static_cast<long>(f));
  auto joined = crt(Integer(static_cast<unsigned long>(h2)), Natural(static_cast<unsigned long>(q3)),
                    -8 * cz * cz, 9 * abs(fz));
  if (!joined) return {};

  const Natural qz(static_cast<unsigned long>(q));
  const Natural bound = 72 * pow(qz, 4);
  const Natural& step = joined->modulus;

  // Smallest member of the class that is >= -bound.
  Integer h = joined->residue - step * ((bound + joined->residue) / step);
  std::vector<Integer> out;
  for (; h <= bound; h += step) {
    if (h != 0) out.push_back(h);
  }
  return out;
}

std::size_t search_q(u64 q, u64 q_max, const TripletSink& sink, Counters* counters) {
  check_q(q);
  if (q_max > kMaxQ) throw std::invalid_argument("sieve: q_max too large");

  Counters local;
  std::map<Natural, GoodTriplet> found;
  const auto f_bound = static_cast<std::int64_t>(8 * q);
  const Natural qz(static_cast<unsigned long>(q));

  for (u64 p0 = 1; p0 < q; ++p0) {
    if (std::gcd(p0, q) != 1) continue;
    for (std::int64_t f : enum_f(q, p0)) {
      if (f > f_bound || f < -f_bound) continue;
      const Integer fz(static_cast<long>(f));
      for (u64 p1 : quartic_lift(q, p0, f)) {
        for (u64 c : enum_c(q, p1, q_max)) {
          const Natural cz(static_cast<unsigned long>(c));
          for (u64 p2 : lift_p2(q, p1, c, f)) {
            ++local.quadruples;
            for (Integer& h : enum_h(q, c, f, p2)) {
              ++local.recoveries;
              auto outcome = recover(Quadruple(qz, fz, cz, std::move(h)));
              auto* t = std::get_if<GoodTriplet>(&outcome);
              if (!t) continue;
              // Independent re-check before anything leaves the sieve.
              auto verified = oracle::goodness(t->x);
              if (!verified || verified->y != t->y || verified->k != t->k) continue;
              auto it = found.find(t->x);
              if (it == found.end()) {
                found.emplace(t->x, std::move(*t));
              } else if (better(*t, it->second)) {
                it->second = std::move(*t);
              }
            }
          }
        }
      }
    }
  }

  for (auto& [x, t] : found) sink(t);
  local.found = found.size();
  if (counters) *counters += local;
  return found.size();
}

void merge_unique(std::vector<GoodTriplet>& into, std::vector<GoodTriplet> more) {
  for (auto& t : more) into.push_back(std::move(t));
  std::stable_sort(into.begin(), into.end(), [](const GoodTriplet& a, const GoodTriplet& b) {
    if (a.x != b.x) return a.x < b.x;
    return better(a, b);
  });
  auto last = std::unique(into.begin(), into.end(),
                          [](const GoodTriplet& a, const GoodTriplet& b) { return a.x == b.x; });
  into.erase(last, into.end());
}

Summary search_range(u64 q_lo, u64 q_hi, u64 q_max) {
  if (q_lo < 2 || q_max > kMaxQ || (q_lo <= q_hi && q_hi > q_max)) {
    throw std::invalid_argument("search_range needs 2 <= q_lo and q_hi <= q_max");
  }
  Summary out;
  std::vector<GoodTriplet> all;
  for (u64 q = q_lo; q <= q_hi; ++q) {  // q_lo > q_hi: empty range
    search_q(q, q_max, [&](const GoodTriplet& t) { all.push_back(t); }, &out.counters);
  }
  merge_unique(out.triplets, std::move(all));
  out.counters.found = out.triplets.size();
  return out;
}

}  // namespace hall::sieve
