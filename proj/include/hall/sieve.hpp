#pragma once

// Quadruple sieve. For each denominator q, candidate (f, c, h) values are
// narrowed stage by stage with congruences mod q, q^2, q^3 and 9|f|, then
// fed to the exact recovery chain.
//
// Stage order per q:
//   p0 coprime to q -> enum_f -> quartic_lift (p1) -> enum_c -> lift_p2
//   -> enum_h -> recover
//
// Every true quadruple with q <= q_max and x < q_max^6 survives all stages.

#include <cstdint>
#include <functional>
#include <vector>

#include "hall/numeric.hpp"
#include "hall/polys.hpp"

namespace hall::sieve {

/// Largest supported q_max. Keeps q^3 and the p2 products inside 128 bits.
inline constexpr std::uint64_t kMaxQ = std::uint64_t{1} << 20;

struct Counters {
  std::uint64_t quadruples = 0;  // (q, f, c, p2) states that reached enum_h
  std::uint64_t recoveries = 0;  // h candidates passed to recover
  std::uint64_t found = 0;       // triplets emitted

  Counters& operator+=(const Counters& o) {
    quadruples += o.quadruples;
    recoveries += o.recoveries;
    found += o.found;
    return *this;
  }
};

using TripletSink = std::function<void(const GoodTriplet&)>;

/// iq + (p0^4 mod q) for i in [-8, 8], zero removed.
std::vector<std::int64_t> enum_f(std::uint64_t q, std::uint64_t p0);

/// p1 in {p0 + iq : 0 <= i < q} with p1^4 = f (mod q^2).
std::vector<std::uint64_t> quartic_lift(std::uint64_t q, std::uint64_t p0, std::int64_t f);

/// (p1^3 mod q^2) + j q^2 while below 3 q q_max + 1.
std::vector<std::uint64_t> enum_c(std::uint64_t q, std::uint64_t p1, std::uint64_t q_max);

/// p2 in {p1 + i q^2 : 0 <= i < q} with p2^4 - 2 p2 c + f = 0 (mod q^3).
std::vector<std::uint64_t> lift_p2(std::uint64_t q, std::uint64_t p1, std::uint64_t c,
                                   std::int64_t f);

/// All h with h = 5c p2^3 - 4 p2^6 (mod q^3), h = -8c^2 (mod 9|f|) and
/// 0 < |h| <= 72 q^4, ascending. Empty when the two classes are incompatible.
std::vector<Integer> enum_h(std::uint64_t q, std::uint64_t c, std::int64_t f, std::uint64_t p2);

/// Runs every stage for one q. Emits each good triplet once per distinct x
/// (smallest p wins). Returns the number emitted.
std::size_t search_q(std::uint64_t q, std::uint64_t q_max, const TripletSink& sink,
                     Counters* counters = nullptr);

struct Summary {
  std::vector<GoodTriplet> triplets;  // sorted by x, unique x
  Counters counters;
};

/// Merges results keyed by x, keeping the smallest (q, p) per x.
void merge_unique(std::vector<GoodTriplet>& into, std::vector<GoodTriplet> more);

/// search_q for q_lo..q_hi, merged and sorted by x. q_lo > q_hi is an
/// empty range.
Summary search_range(std::uint64_t q_lo, std::uint64_t q_hi, std::uint64_t q_max);

}  // namespace hall::sieve
