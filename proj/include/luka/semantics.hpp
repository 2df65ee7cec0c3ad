#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "luka/formula.hpp"
#include "luka/rational.hpp"
#include "luka/valuation.hpp"

namespace luka {

/// Exact truth value of f under v:
///   V(0) = 0, V(p) = v(p), V(!a) = 1 - V(a),
///   V(a & b) = max{0, V(a)+V(b)-1}, V(a -> b) = min{1, 1-V(a)+V(b)}.
/// Throws EvalError when a variable of f is unbound (no silent default).
Rat eval(const Formula& f, const Valuation& v);

inline bool is_true_under(const Formula& f, const Valuation& v) {
  return eval(f, v) == Rat(1);
}

/// Streams all (n+1)^|vars| valuations with values in {0, 1/n, ..., 1}, in
/// lexicographic order over the sorted variable names.
class GridValuations {
 public:
  GridValuations(const std::set<std::string>& vars, int n);
  /// Writes the next valuation; returns false when exhausted.
  bool next(Valuation& out);

 private:
  std::vector<std::string> names_;
  int n_;
  std::vector<int> counters_;
  bool done_ = false;
  bool first_ = true;
};

/// Exact minimum of eval(f, .) over the n-division grid, with the first
/// witnessing valuation in enumeration order. The brute-force oracle for the
/// decision engine.
std::pair<Rat, Valuation> grid_min(const Formula& f, int n);

}  // namespace luka
