#pragma once

// Continued fraction of sqrt(x) and selection of the convergent p/q with
// q < x^(1/6) < Q, which bounds the quadruple of every good triplet.

#include <vector>

#include "hall/numeric.hpp"
#include "hall/polys.hpp"

namespace hall {

struct Convergent {
  Natural a;   // partial quotient a_i
  Natural h;   // numerator h_i
  Natural kk;  // denominator k_i
};

/// Lazily yields the convergents of sqrt(x) using the exact (m, d, a)
/// recurrence for quadratic irrationals. Never terminates on its own.
class ConvergentStream {
 public:
  /// Throws std::invalid_argument if x < 2 or x is a perfect square.
  explicit ConvergentStream(Natural x);

  Convergent next();

 private:
  Natural x_;
  Natural a0_;
  Natural m_ = 0;
  Natural d_ = 1;
  Natural a_ = 0;
  Natural h_prev_ = 1, h_prev2_ = 0;
  Natural k_prev_ = 0, k_prev2_ = 1;
  bool started_ = false;
};

/// First `count` convergents of sqrt(x).
std::vector<Convergent> cf_prefix(const Natural& x, std::size_t count);

struct SelectedApprox {
  Natural p;       // h_j
  Natural q;       // k_j
  Natural next_q;  // k_{j+1}
};

/// The unique convergent with k_j^6 < x < k_{j+1}^6.
SelectedApprox select_approx(const Natural& x);

/// Each bound checked separately, all in integer form.
struct BoundsReport {
  bool c_positive = false;  // 0 < C
  bool c_upper = false;     // C < 3q x^(1/6) + 1   as (C-1)^6 < 3^6 q^6 x
  bool f_bound = false;     // |F| <= 8q
  bool h_bound = false;     // |H| <= 72 q^4
  bool q_bound = false;     // q^6 < x
  bool p_bound = false;     // p < x^(2/3) + 1     as (p-1)^3 < x^2

  bool all() const {
    return c_positive && c_upper && f_bound && h_bound && q_bound && p_bound;
  }
};

struct DerivedQuadruple {
  SelectedApprox approx;
  PolyImage image;
  BoundsReport bounds;
  /// Present when C > 0 and gcd(F, q) = 1, so the values form a valid
  /// Quadruple; for a real good triplet this always holds.
  std::optional<Quadruple> quad;
};

/// Builds the quadruple (q, F, C, H) for a good triplet from its selected
/// convergent and reports which magnitude bounds hold.
DerivedQuadruple quadruple_from_triplet(const GoodTriplet& t);

BoundsReport check_bounds(const Natural& x, const Natural& p, const Natural& q,
                          const PolyImage& img);

}  // namespace hall
