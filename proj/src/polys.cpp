#include "hall/polys.hpp"

#include <stdexcept>

namespace hall {

namespace {

bool divisible(const Integer& n, const Integer& d) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer exact_div(const Integer& n, const Integer& d) {
  Integer out;
  mpz_divexact(out.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return out;
}

bool congruent(const Integer& a, const Integer& b, const Integer& m) {
  if (m == 0) return a == b;
  return divisible(a - b, m);
}

}  // namespace

Quadruple::Quadruple(Natural q, Integer f, Natural c, Integer h)
    : q_(std::move(q)), f_(std::move(f)), c_(std::move(c)), h_(std::move(h)) {
  if (q_ < 1) throw std::invalid_argument("quadruple: q must be positive");
  if (sgn(c_) <= 0) throw std::invalid_argument("quadruple: c must be positive");
  if (sgn(f_) == 0) throw std::invalid_argument("quadruple: f must be nonzero");
  if (gcd(f_, q_) != 1) throw std::invalid_argument("quadruple: gcd(f, q) must be 1");
}

std::string_view to_string(Rejection r) {
  switch (r) {
    case Rejection::BNotInteger: return "B_NOT_INTEGER";
    case Rejection::PNotInteger: return "P_NOT_INTEGER";
    case Rejection::XNotInteger: return "X_NOT_INTEGER";
    case Rejection::YNotInteger: return "Y_NOT_INTEGER";
    case Rejection::NonPositive: return "NONPOSITIVE";
    case Rejection::KZero: return "K_ZERO";
    case Rejection::KTooLarge: return "K_TOO_LARGE";
  }
  return "UNKNOWN";
}

Integer eval_B(const Integer& q, const Integer& p, const Integer& x) {
  return p * p - q * q * x;
}

Integer eval_C(const Integer& q, const Integer& p, const Integer& x, const Integer& y) {
  const Integer q2 = q * q;
  return p * p * p - 3 * p * q2 * x + 2 * q2 * q * y;
}

Integer eval_F(const Integer& q, const Integer& p, const Integer& x, const Integer& y) {
  const Integer b = eval_B(q, p, x);
  return 4 * p * eval_C(q, p, x, y) - 3 * b * b;
}

Integer eval_H(const Integer& q, const Integer& p, const Integer& x, const Integer& y) {
  return eval_all(q, p, x, y).h_val;
}

PolyImage eval_all(const Integer& q, const Integer& p, const Integer& x, const Integer& y) {
  PolyImage img;
  img.b_val = eval_B(q, p, x);
  img.c_val = eval_C(q, p, x, y);
  img.f_val = 4 * p * img.c_val - 3 * img.b_val * img.b_val;
  img.h_val = 9 * img.f_val * img.b_val - 8 * img.c_val * img.c_val;
  return img;
}

Integer expand_F(const Integer& q, const Integer& p, const Integer& x, const Integer& y) {
  const Integer q2 = q * q;
  return pow(p, 4) - (6 * p * p * x - 8 * p * q * y + 3 * q2 * x * x) * q2;
}

Integer expand_H(const Integer& q, const Integer& p, const Integer& x, const Integer& y) {
  const Integer q2 = q * q;
  const Integer q3 = q2 * q;
  const Integer q4 = q2 * q2;
  const Integer inner = 15 * pow(p, 4) * x - 40 * pow(p, 3) * q * y +
                        45 * p * p * q2 * x * x - 24 * p * q3 * x * y -
                        27 * q4 * pow(x, 3) + 32 * q4 * y * y;
  return pow(p, 6) - inner * q2;
}

std::array<bool, 6> check_congruences(const Integer& q, const Integer& p,
                                      const Integer& x, const Integer& y) {
  const PolyImage img = eval_all(q, p, x, y);
  const Integer q2 = q * q;
  const Integer q3 = q2 * q;
  const Integer p3 = pow(p, 3);
  const Integer p4 = p3 * p;
  const Integer p6 = p3 * p3;
  const Integer nine_f = 9 * abs(img.f_val);

  std::array<bool, 6> out{};
  out[0] = congruent(img.c_val, p3, q2);
  out[1] = congruent(img.f_val, p4, q2);
  out[2] = congruent(img.h_val, p6, q2);
  out[3] = nine_f == 0 || congruent(img.h_val, -8 * img.c_val * img.c_val, nine_f);
  out[4] = congruent(p4 - 2 * p * img.c_val + img.f_val, 0, q3);
  out[5] = congruent(4 * p6 - 5 * p3 * img.c_val + img.h_val, 0, q3);
  return out;
}

std::variant<RecoveryChain, Rejection> recovery_chain(const Quadruple& quad) {
  const Integer& q = quad.q();
  const Integer& f = quad.f();
  const Integer& c = quad.c();
  const Integer& h = quad.h();

  RecoveryChain out;

  const Integer b_num = h + 8 * c * c;
  const Integer b_den = 9 * f;
  if (!divisible(b_num, b_den)) return Rejection::BNotInteger;
  out.b = exact_div(b_num, b_den);

  const Integer p_num = f + 3 * out.b * out.b;
  const Integer p_den = 4 * c;
  if (!divisible(p_num, p_den)) return Rejection::PNotInteger;
  out.p = exact_div(p_num, p_den);

  const Integer q2 = q * q;
  const Integer x_num = out.p * out.p - out.b;
  if (!divisible(x_num, q2)) return Rejection::XNotInteger;
  out.x = exact_div(x_num, q2);

  const Integer y_num = 3 * out.p * q2 * out.x - pow(out.p, 3) + c;
  const Integer y_den = 2 * q2 * q;
  if (!divisible(y_num, y_den)) return Rejection::YNotInteger;
  out.y = exact_div(y_num, y_den);

  return out;
}

RecoveryOutcome recover(const Quadruple& quad) {
  auto chain = recovery_chain(quad);
  if (auto* r = std::get_if<Rejection>(&chain)) return *r;
  auto& v = std::get<RecoveryChain>(chain);

  if (v.x < 2 || v.y < 1 || v.p < 1) return Rejection::NonPositive;
  Integer k = v.x * v.x * v.x - v.y * v.y;
  if (k == 0) return Rejection::KZero;
  if (k * k >= v.x) return Rejection::KTooLarge;
  return GoodTriplet{v.x, v.y, std::move(k), Approximation{v.p, quad.q()}};
}

bool is_good(const Natural& x, const Natural& y) {
  const Integer k = x * x * x - y * y;
  return k != 0 && k * k < x;
}

}  // namespace hall
