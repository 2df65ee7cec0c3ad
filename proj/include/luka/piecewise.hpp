#pragma once

#include <utility>
#include <vector>

#include "luka/formula.hpp"
#include "luka/rational.hpp"

namespace luka {

/// Continuous piecewise-linear function on [0,1], exact rational breakpoints.
/// Used as the evaluation backend for formulas over at most one variable;
/// a conjunction of thousands of single-variable formulas stays cheap here
/// while the general region enumeration would split exponentially.
struct PLFunc {
  std::vector<Rat> xs;  // 0 = xs[0] < ... < xs.back() = 1
  std::vector<Rat> ys;  // value at each breakpoint, linear in between

  static PLFunc constant(const Rat& c) { return {{Rat(0), Rat(1)}, {c, c}}; }
  static PLFunc identity() { return {{Rat(0), Rat(1)}, {Rat(0), Rat(1)}}; }

  Rat at(const Rat& x) const;
  std::pair<Rat, Rat> minimum() const;  // (value, leftmost argmin)
  std::pair<Rat, Rat> maximum() const;  // (value, leftmost argmax)
};

PLFunc pl_neg(const PLFunc& a);
PLFunc pl_conj(const PLFunc& a, const PLFunc& b);     // max{0, a+b-1}
PLFunc pl_implies(const PLFunc& a, const PLFunc& b);  // min{1, 1-a+b}

/// Value function of a formula over the single variable `var`; every other
/// variable occurrence is rejected (std::invalid_argument).
PLFunc pl_eval(const Formula& f, const std::string& var);

}  // namespace luka
