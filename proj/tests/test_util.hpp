#pragma once

#include <random>
#include <string>
#include <vector>

#include "luka/formula.hpp"
#include "luka/valuation.hpp"

namespace lukatest {

inline luka::Formula random_formula(std::mt19937_64& rng,
                                    const std::vector<std::string>& vars,
                                    int max_depth) {
  using luka::Formula;
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::uniform_int_distribution<int> leaf(0, 4);
  if (max_depth <= 0 || kind(rng) == 0) {
    if (leaf(rng) == 0) return Formula::bottom();
    return Formula::prop(vars[pick(rng)]);
  }
  switch (kind(rng)) {
    case 1:
      return Formula::neg(random_formula(rng, vars, max_depth - 1));
    case 2:
      return Formula::conj(random_formula(rng, vars, max_depth - 1),
                           random_formula(rng, vars, max_depth - 1));
    default:
      return Formula::implies(random_formula(rng, vars, max_depth - 1),
                              random_formula(rng, vars, max_depth - 1));
  }
}

inline luka::Valuation random_valuation(std::mt19937_64& rng,
                                        const std::set<std::string>& vars,
                                        int max_den = 7) {
  luka::Valuation v;
  std::uniform_int_distribution<int> den(1, max_den);
  for (const auto& name : vars) {
    const int d = den(rng);
    std::uniform_int_distribution<int> num(0, d);
    v.set(name, luka::Rat(num(rng), d));
  }
  return v;
}

}  // namespace lukatest
