#include "hall/cf.hpp"

#include <stdexcept>

namespace hall {

ConvergentStream::ConvergentStream(Natural x) : x_(std::move(x)) {
  if (x_ < 2) throw std::invalid_argument("continued fraction needs x >= 2");
  if (is_perfect_square(x_)) {
    throw std::invalid_argument("continued fraction needs non-square x, got " + to_string(x_));
  }
  a0_ = isqrt(x_);
}

Convergent ConvergentStream::next() {
  if (!started_) {
    started_ = true;
    a_ = a0_;
  } else {
    m_ = a_ * d_ - m_;
    d_ = (x_ - m_ * m_) / d_;
    a_ = (a0_ + m_) / d_;
  }
  Natural h = a_ * h_prev_ + h_prev2_;
  Natural k = a_ * k_prev_ + k_prev2_;
  h_prev2_ = h_prev_;
  h_prev_ = h;
  k_prev2_ = k_prev_;
  k_prev_ = k;
  return Convergent{a_, std::move(h), std::move(k)};
}

std::vector<Convergent> cf_prefix(const Natural& x, std::size_t count) {
  ConvergentStream stream(x);
  std::vector<Convergent> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

SelectedApprox select_approx(const Natural& x) {
  ConvergentStream stream(x);
  Convergent cur = stream.next();
  // k_0 = 1 and 1 < x, so the first convergent always qualifies as k_j.
  for (;;) {
    Convergent nxt = stream.next();
    if (pow(nxt.kk, 6) > x) return SelectedApprox{cur.h, cur.kk, nxt.kk};
    cur = std::move(nxt);
  }
}

BoundsReport check_bounds(const Natural& x, const Natural& p, const Natural& q,
                          const PolyImage& img) {
  BoundsReport r;
  const Natural q6 = pow(q, 6);
  r.c_positive = sgn(img.c_val) > 0;
  r.c_upper = r.c_positive && pow(img.c_val - 1, 6) < 729 * q6 * x;
  r.f_bound = abs(img.f_val) <= 8 * q;
  r.h_bound = abs(img.h_val) <= 72 * pow(q, 4);
  r.q_bound = q6 < x;
  r.p_bound = p < 1 || pow(p - 1, 3) < x * x;
  return r;
}

DerivedQuadruple quadruple_from_triplet(const GoodTriplet& t) {
  DerivedQuadruple out;
  out.approx = select_approx(t.x);
  out.image = eval_all(out.approx.q, out.approx.p, t.x, t.y);
  out.bounds = check_bounds(t.x, out.approx.p, out.approx.q, out.image);
  if (sgn(out.image.c_val) > 0 && sgn(out.image.f_val) != 0 &&
      gcd(out.image.f_val, out.approx.q) == 1) {
    out.quad.emplace(out.approx.q, out.image.f_val, out.image.c_val, out.image.h_val);
  }
  return out;
}

}  // namespace hall
