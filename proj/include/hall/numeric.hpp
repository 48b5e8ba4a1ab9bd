#pragma once

// Exact integer primitives shared by the whole search: floor roots,
// modular inverses, and CRT over moduli that need not be coprime.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hall {

// Both are GMP integers; the aliases document which values carry a sign.
using Natural = mpz_class;
using Integer = mpz_class;

struct CrtResult {
  Integer residue;  // in [0, modulus)
  Natural modulus;  // lcm of the input moduli
};

/// Floor square root: s with s^2 <= n < (s+1)^2.
Natural isqrt(const Natural& n);

/// Floor k-th root: s with s^k <= n < (s+1)^k. Requires k >= 1.
Natural iroot(const Natural& n, unsigned k);

/// b in [0, m) with a*b = 1 (mod m), or nullopt when gcd(a, m) != 1.
std::optional<Natural> modinv(const Integer& a, const Natural& m);

/// Combines x = r1 (mod m1) and x = r2 (mod m2). Returns nullopt when the
/// residues disagree modulo gcd(m1, m2).
std::optional<CrtResult> crt(const Integer& r1, const Natural& m1,
                             const Integer& r2, const Natural& m2);

Natural gcd(const Integer& a, const Integer& b);
Natural lcm(const Natural& a, const Natural& b);

/// Least nonnegative residue of a modulo m (m >= 1).
Natural mod_floor(const Integer& a, const Natural& m);

Integer pow(const Integer& base, unsigned long exp);

bool is_perfect_square(const Natural& n);

std::string to_string(const Integer& v);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// Parses an unsigned decimal integer; throws std::invalid_argument.
Natural parse_natural(std::string_view text);

}  // namespace hall
