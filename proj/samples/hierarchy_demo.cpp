// Weight hierarchy, duality partition and weight distribution of a small
// binary code under a chain and under the antichain.

#include <iostream>

#include "posetcode/posetcode.hpp"

using namespace posetcode;

int main() {
  const auto f2 = Field::of_order(2);
  const auto code = LinearCode::from_generator(Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
  const RankProfile profile(code);

  for (const auto& [name, poset] : {std::pair{"antichain", Poset::antichain(4)}, std::pair{"chain", Poset::chain(4)}}) {
    const auto h = full_hierarchy(profile, poset);
    std::cout << name << ": d =";
    for (int d : h.weights) std::cout << " " << d;

    const auto part = duality_partition(code, poset);
    std::cout << "; duality " << (part.ok ? "holds" : "FAILS");

    const auto dist = distribution(profile, poset, DistributionMethod::moebius);
    std::cout << "; A =";
    for (auto a : dist.counts) std::cout << " " << a;
    std::cout << "; " << to_string(dist.classification->kind) << "\n";
  }
}
