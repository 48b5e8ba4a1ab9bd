#pragma once

// The polynomials B, C, F, H in (q, p, x, y), the congruences they satisfy,
// and the exact division chain that turns a quadruple (q, f, c, h) back
// into a candidate solution of x^3 - y^2 = k.

#include <array>
#include <optional>
#include <string_view>
#include <variant>

#include "hall/numeric.hpp"

namespace hall {

struct PolyImage {
  Integer b_val;
  Integer c_val;
  Integer f_val;
  Integer h_val;
};

/// A rational approximation p/q to sqrt(x).
struct Approximation {
  Natural p;
  Natural q;
};

/// x^3 - y^2 = k with k != 0 and k^2 < x. `approx` is the p/q that
/// produced the triplet, when one is known.
struct GoodTriplet {
  Natural x;
  Natural y;
  Integer k;
  std::optional<Approximation> approx;
};

/// Sieve state. f and h are signed; c is positive.
class Quadruple {
 public:
  /// Throws std::invalid_argument unless q >= 1, c > 0, f != 0 and
  /// gcd(f, q) = 1. The magnitude bounds on f and h are not enforced here;
  /// they are properties of true quadruples (see cf::BoundsReport).
  Quadruple(Natural q, Integer f, Natural c, Integer h);

  const Natural& q() const { return q_; }
  const Integer& f() const { return f_; }
  const Natural& c() const { return c_; }
  const Integer& h() const { return h_; }

  friend bool operator==(const Quadruple&, const Quadruple&) = default;

 private:
  Natural q_;
  Integer f_;
  Natural c_;
  Integer h_;
};

enum class Rejection {
  BNotInteger,
  PNotInteger,
  XNotInteger,
  YNotInteger,
  NonPositive,
  KZero,
  KTooLarge,
};

std::string_view to_string(Rejection r);

using RecoveryOutcome = std::variant<GoodTriplet, Rejection>;

Integer eval_B(const Integer& q, const Integer& p, const Integer& x);
Integer eval_C(const Integer& q, const Integer& p, const Integer& x, const Integer& y);
Integer eval_F(const Integer& q, const Integer& p, const Integer& x, const Integer& y);
Integer eval_H(const Integer& q, const Integer& p, const Integer& x, const Integer& y);
PolyImage eval_all(const Integer& q, const Integer& p, const Integer& x, const Integer& y);

// Fully expanded forms of F and H, written out monomial by monomial. They
// share no code with eval_F / eval_H and serve as a cross-check.
Integer expand_F(const Integer& q, const Integer& p, const Integer& x, const Integer& y);
Integer expand_H(const Integer& q, const Integer& p, const Integer& x, const Integer& y);

/// Clauses, in order:
///   [0] C = p^3 (mod q^2)          [3] H = -8 C^2 (mod 9|F|), true if F = 0
///   [1] F = p^4 (mod q^2)          [4] p^4 - 2pC + F = 0 (mod q^3)
///   [2] H = p^6 (mod q^2)          [5] 4p^6 - 5p^3 C + H = 0 (mod q^3)
std::array<bool, 6> check_congruences(const Integer& q, const Integer& p,
                                      const Integer& x, const Integer& y);

/// Values produced by the division chain before any goodness filtering.
struct RecoveryChain {
  Integer b;
  Integer p;
  Integer x;
  Integer y;
};

/// b = (h + 8c^2)/(9f), p = (f + 3b^2)/(4c), x = (p^2 - b)/q^2,
/// y = (3pq^2 x - p^3 + c)/(2q^3). Stops at the first inexact division.
std::variant<RecoveryChain, Rejection> recovery_chain(const Quadruple& quad);

/// The division chain followed by the positivity and goodness tests.
RecoveryOutcome recover(const Quadruple& quad);

/// x^3 - y^2 with k != 0 and k^2 < x.
bool is_good(const Natural& x, const Natural& y);

}  // namespace hall
