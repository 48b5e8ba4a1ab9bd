#pragma once

// The 50 known good examples with their published Hall ratio and p/q.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hall/numeric.hpp"

namespace hall::cli {

struct KnownExample {
  int index;
  std::string_view x;
  std::string_view r;  // as printed
  std::string_view p;  // empty when no p/q was printed
  std::string_view q;
};

std::span<const KnownExample> known_examples();

std::vector<Natural> known_x_values();

const KnownExample* find_known(const Natural& x);

}  // namespace hall::cli
