#include "luka/semantics.hpp"

#include <stdexcept>

namespace luka {

Rat eval(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return Rat(0);
    case Formula::Kind::Prop:
      return v.at(f.prop_name());
    case Formula::Kind::Not:
      return Rat(1) - eval(f.sub(), v);
    case Formula::Kind::And: {
      const Rat s = eval(f.left(), v) + eval(f.right(), v) - Rat(1);
      return max(Rat(0), s);
    }
    case Formula::Kind::Implies: {
      const Rat s = Rat(1) - eval(f.left(), v) + eval(f.right(), v);
      return min(Rat(1), s);
    }
  }
  throw std::logic_error("unreachable");
}

GridValuations::GridValuations(const std::set<std::string>& vars, int n)
    : names_(vars.begin(), vars.end()), n_(n), counters_(names_.size(), 0) {
  if (n < 1) throw std::invalid_argument("grid requires n >= 1");
}

bool GridValuations::next(Valuation& out) {
  if (done_) return false;
  if (!first_) {
    // odometer: last name fastest, so tuples come lexicographically
    int i = static_cast<int>(counters_.size()) - 1;
    while (i >= 0 && counters_[i] == n_) counters_[i--] = 0;
    if (i < 0) {
      done_ = true;
      return false;
    }
    ++counters_[i];
  }
  first_ = false;
  out = Valuation();
  for (std::size_t i = 0; i < names_.size(); ++i)
    out.set(names_[i], Rat(counters_[i], n_));
  if (names_.empty()) done_ = true;  // single empty valuation
  return true;
}

std::pair<Rat, Valuation> grid_min(const Formula& f, int n) {
  GridValuations grid(f.variables(), n);
  Valuation v;
  bool have = false;
  Rat best;
  Valuation best_v;
  while (grid.next(v)) {
    const Rat val = eval(f, v);
    if (!have || val < best) {
      best = val;
      best_v = v;
      have = true;
    }
  }
  return {best, best_v};
}

}  // namespace luka
