#include "hall/oracle.hpp"

#include <stdexcept>

namespace hall::oracle {

std::optional<GoodTriplet> goodness(const Natural& x) {
  if (x < 2) throw std::invalid_argument("goodness needs x >= 2");
  const Natural cube = x * x * x;
  const Natural s = isqrt(cube);
  const Integer below = cube - s * s;              // >= 0
  const Integer above = cube - (s + 1) * (s + 1);  // < 0
  const bool take_above = abs(above) < below;
  Natural y = take_above ? Natural(s + 1) : s;
  Integer k = take_above ? above : below;
  if (k == 0 || k * k >= x) return std::nullopt;
  return GoodTriplet{x, std::move(y), std::move(k), std::nullopt};
}

std::vector<GoodTriplet> scan(const Natural& lo, const Natural& hi) {
  if (lo < 2 || lo > hi) throw std::invalid_argument("scan needs 2 <= lo <= hi");
  std::vector<GoodTriplet> out;
  for (Natural x = lo; x <= hi; ++x) {
    if (auto t = goodness(x)) out.push_back(std::move(*t));
  }
  return out;
}

std::string hall_ratio(const Natural& x, const Integer& k) {
  if (k == 0) throw std::invalid_argument("hall ratio undefined for k = 0");
  // floor(10^4 sqrt(x) / |k|), then round half-up on the last two digits.
  const Natural scaled = isqrt(x * Natural(100000000)) / abs(k);
  const Natural hundredths = (scaled + 50) / 100;
  const Natural whole = hundredths / 100;
  const unsigned long frac = Natural(hundredths % 100).get_ui();
  std::string out = to_string(whole) + ".";
  if (frac < 10) out += '0';
  out += std::to_string(frac);
  return out;
}

}  // namespace hall::oracle
