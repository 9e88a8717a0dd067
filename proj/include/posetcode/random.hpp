#pragma once

// Reproducible random codes and posets for property checks. Draws use only
// raw engine output so results are identical across standard libraries.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "posetcode/code.hpp"
#include "posetcode/field.hpp"
#include "posetcode/matrix.hpp"
#include "posetcode/poset.hpp"

namespace posetcode {

using Rng = std::mt19937_64;

inline std::uint64_t draw_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

inline std::size_t draw_between(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(draw_below(rng, hi - lo + 1));
}

// Each pair i < j becomes a cover with probability 1/3, then transitively closed.
inline Poset random_poset(Rng& rng, std::size_t n) {
  std::vector<CoverPair> covers;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (draw_below(rng, 3) == 0) covers.emplace_back(i, j);
  return Poset::from_cover_relations(n, covers);
}

// Uniform k x n generator matrices, redrawn until the rank is exactly k.
inline LinearCode random_code(Rng& rng, const FieldPtr& field, std::size_t n, std::size_t k) {
  const unsigned q = field->order();
  while (true) {
    Matrix g(field, k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) g(r, c) = Elem(static_cast<unsigned>(draw_below(rng, q)));
    if (rank(g) == k) return LinearCode::from_generator(g);
  }
}

struct Instance {
  LinearCode code;
  Poset poset;
};

struct InstanceShape {
  std::vector<unsigned> field_orders{2, 3, 4, 5};
  std::size_t min_length = 2;
  std::size_t max_length = 10;
  std::size_t max_dimension = 5;
};

// q from the shape's list, n in [min, max], k in [1, min(max_dimension, n - 1)].
inline Instance random_instance(Rng& rng, const InstanceShape& shape = {}) {
  const unsigned q = shape.field_orders[draw_below(rng, shape.field_orders.size())];
  const std::size_t n = draw_between(rng, shape.min_length, shape.max_length);
  const std::size_t k = draw_between(rng, 1, std::min(shape.max_dimension, n - 1));
  const auto field = Field::of_order(q);
  auto code = random_code(rng, field, n, k);
  auto poset = random_poset(rng, n);
  return {std::move(code), std::move(poset)};
}

}  // namespace posetcode
