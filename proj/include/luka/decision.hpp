#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "luka/formula.hpp"
#include "luka/linear.hpp"
#include "luka/valuation.hpp"

namespace luka {

/// Decision results. Any carried witness re-evaluates (module semantics) to
/// the carried value exactly.
struct Verdict {
  enum class Kind { Tautology, Counterexample, Satisfiable, Unsatisfiable };
  Kind kind;
  Valuation witness;  // Counterexample / Satisfiable only
  Rat value;

  bool affirmative() const {
    return kind == Kind::Tautology || kind == Kind::Satisfiable;
  }
};

/// Splits the piecewise-linear value function of f into affine regions
/// covering [0,1]^vars. Each & and -> contributes one binary split (infeasible
/// sign combinations are pruned), negation none; every region carries the
/// 0 <= x <= 1 bounds. Within a region, eval(f, .) equals the region's value
/// expression, boundary points included.
std::vector<Region> linearize(const Formula& f);

/// Exact global extrema of eval(f, .) over [0,1]^vars with a witnessing
/// valuation. Single-variable formulas take an exact piecewise-linear fast
/// path; everything else enumerates regions and optimizes each with the
/// Fourier-Motzkin core.
std::pair<Rat, Valuation> min_value(const Formula& f);
std::pair<Rat, Valuation> max_value(const Formula& f);

/// Tautology iff min_value(f) = 1, else Counterexample with the minimizing
/// witness.
Verdict is_tautology(const Formula& f);

/// Decides whether eval(f, .) attains 1 (resp. exceeds 0); the witness is the
/// maximizing valuation.
Verdict sat_at_one(const Formula& f);
Verdict positively_satisfiable(const Formula& f);

/// Pins eval(formula) to an exact target value.
struct ValuePin {
  Formula formula;
  Rat target;
};

/// Extremum of eval(objective) over the valuations satisfying every pin;
/// nullopt when the pins are jointly unsatisfiable.
std::optional<std::pair<Rat, Valuation>> optimize(const Formula& objective,
                                                  const std::vector<ValuePin>& pins,
                                                  bool minimize);

namespace detail {
// Region-enumeration path with the fast path disabled; the tests cross-check
// the two routes against each other.
std::pair<Rat, Valuation> min_value_regions(const Formula& f);
std::pair<Rat, Valuation> max_value_regions(const Formula& f);
}  // namespace detail

}  // namespace luka
