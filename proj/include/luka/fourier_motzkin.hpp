#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "luka/linear.hpp"

namespace luka {

using Point = std::map<std::string, Rat>;

/// Decides feasibility of a finite system of linear constraints over the
/// rationals by Fourier-Motzkin elimination, strict inequalities and
/// equalities included. Returns an exact witness assigning a value to every
/// variable of the system, or nullopt when infeasible. Variables are
/// eliminated in lexicographic order; witness values prefer the lower bound
/// (midpoint when the lower bound is strict), which fixes tie-breaking.
std::optional<Point> lp_feasible(const std::vector<Constraint>& cs);

/// Exact minimum (or maximum) of `objective` over the feasible set of `cs`,
/// with a witness. Returns nullopt when infeasible. Throws std::runtime_error
/// if the objective is unbounded in the requested direction or the optimum is
/// approached but not attained (possible only with strict constraints).
std::optional<std::pair<Rat, Point>> lp_extremum(const LinExpr& objective,
                                                 const std::vector<Constraint>& cs,
                                                 bool minimize);

}  // namespace luka
