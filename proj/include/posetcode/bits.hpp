#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace posetcode {

// Subsets of the ground set [n] are n-bit masks; bit i is element i+1.
using Mask = std::uint32_t;

inline constexpr std::size_t kMaxLength = 24;

// Malformed input: bad files, size mismatches, cap violations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked mathematical identity failed. Always an implementation bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

// 1-indexed element list, the external convention.
inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](std::size_t i) { out.push_back(static_cast<int>(i) + 1); });
  return out;
}

inline std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](std::size_t i) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  });
  return s + "}";
}

}  // namespace posetcode
