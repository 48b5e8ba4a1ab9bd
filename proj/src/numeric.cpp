#include "hall/numeric.hpp"

#include <stdexcept>

namespace hall {

Natural isqrt(const Natural& n) {
  if (sgn(n) < 0) throw std::invalid_argument("isqrt of negative value");
  if (n < 2) return n;

  // Start at a power of two above the root; the Newton sequence then
  // decreases monotonically until it reaches the floor.
  Natural x = 1;
  x <<= (mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2;
  for (;;) {
    Natural next = (x + n / x) >> 1;
    if (next >= x) break;
    x = std::move(next);
  }
  while (x * x > n) --x;
  return x;
}

Natural iroot(const Natural& n, unsigned k) {
  if (k == 0) throw std::invalid_argument("iroot with k = 0");
  if (sgn(n) < 0) throw std::invalid_argument("iroot of negative value");
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt(n);

  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Natural x = 1;
  x <<= (bits + k - 1) / k;
  for (;;) {
    Natural xk1 = pow(x, k - 1);
    Natural next = ((k - 1) * x + n / xk1) / k;
    if (next >= x) break;
    x = std::move(next);
  }
  while (pow(x, k) > n) --x;
  return x;
}

std::optional<Natural> modinv(const Integer& a, const Natural& m) {
  if (m < 1) throw std::invalid_argument("modinv with modulus < 1");
  if (m == 1) return Natural(0);
  Natural out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return out;
}

std::optional<CrtResult> crt(const Integer& r1, const Natural& m1,
                             const Integer& r2, const Natural& m2) {
  if (m1 < 1 || m2 < 1) throw std::invalid_argument("crt with modulus < 1");
  const Natural g = gcd(m1, m2);
  const Integer diff = r2 - r1;
  if (mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t()) == 0) return std::nullopt;

  // x = r1 + m1 * t with (m1/g) t = (r2 - r1)/g  (mod m2/g)
  const Natural m2g = m2 / g;
  const Natural modulus = m1 * m2g;
  Natural t = 0;
  if (m2g > 1) {
    auto inv = modinv(m1 / g, m2g);
    // m1/g and m2/g are coprime by construction.
    t = mod_floor(Integer(diff / g) * *inv, m2g);
  }
  return CrtResult{mod_floor(r1 + m1 * t, modulus), modulus};
}

Natural gcd(const Integer& a, const Integer& b) {
  Natural out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Natural lcm(const Natural& a, const Natural& b) {
  Natural out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Natural mod_floor(const Integer& a, const Natural& m) {
  Natural out;
  mpz_mod(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return out;
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

bool is_perfect_square(const Natural& n) {
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::string to_string(const Integer& v) { return v.get_str(10); }

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("not a decimal integer: " + std::string(text));
    }
  }
  Integer out;
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  out.set_str(owned, 10);
  return out;
}

Natural parse_natural(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    throw std::invalid_argument("expected an unsigned integer: " + std::string(text));
  }
  return parse_integer(text);
}

}  // namespace hall
