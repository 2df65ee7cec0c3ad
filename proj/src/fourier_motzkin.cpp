#include "luka/fourier_motzkin.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace luka {

namespace {

struct Row {
  LinExpr e;
  bool strict;  // e > 0 rather than e >= 0
};

struct Bound {
  Rat value;
  bool strict;
  bool present = false;
};

void raise_lower(Bound& b, const Rat& v, bool strict) {
  if (!b.present || v > b.value || (v == b.value && strict && !b.strict)) {
    b = {v, strict, true};
  }
}

void lower_upper(Bound& b, const Rat& v, bool strict) {
  if (!b.present || v < b.value || (v == b.value && strict && !b.strict)) {
    b = {v, strict, true};
  }
}

// expr with `name` replaced by `repl`.
LinExpr substitute(const LinExpr& e, const std::string& name, const LinExpr& repl) {
  const Rat c = e.coeff(name);
  if (c.is_zero()) return e;
  LinExpr out = e;
  out -= LinExpr::var(name) * c;
  out += repl * c;
  return out;
}

class Eliminator {
 public:
  // `keep` is an optional variable excluded from elimination (the objective
  // variable of lp_extremum); it must not occur in equality constraints.
  Eliminator(const std::vector<Constraint>& cs, const std::string& keep) : keep_(keep) {
    for (const auto& c : cs) {
      switch (c.rel) {
        case Rel::Eq:
          eqs_.push_back(c.expr);
          break;
        case Rel::Ge:
          rows_.push_back({c.expr, false});
          break;
        case Rel::Gt:
          rows_.push_back({c.expr, true});
          break;
      }
    }
  }

  // Returns false on infeasibility.
  bool run() {
    if (!solve_equalities()) return false;
    std::set<std::string> vars;
    for (const auto& r : rows_)
      for (const auto& [name, c] : r.e.coeffs())
        if (name != keep_) vars.insert(name);
    for (const auto& x : vars) {
      dedupe();
      if (!eliminate(x)) return false;
    }
    dedupe();
    // what remains mentions only the kept variable (or nothing)
    for (const auto& r : rows_)
      if (!r.e.is_constant() && r.e.coeff(keep_).is_zero())
        throw std::logic_error("elimination left a stray variable");
    return check_constants();
  }

  // Bounds on the kept variable after run(); rows are a*keep + r {>,>=} 0.
  void kept_bounds(Bound& lower, Bound& upper) const {
    for (const auto& r : rows_) {
      const Rat a = r.e.coeff(keep_);
      if (a.is_zero()) continue;
      LinExpr rest = r.e;
      rest -= LinExpr::var(keep_) * a;
      assert(rest.is_constant());
      const Rat bound = -rest.constant() / a;
      if (a.sign() > 0)
        raise_lower(lower, bound, r.strict);
      else
        lower_upper(upper, bound, r.strict);
    }
  }

  // Witness reconstruction; call only after run() returned true.
  Point witness() const {
    Point p;
    for (auto it = snapshots_.rbegin(); it != snapshots_.rend(); ++it) {
      Bound lo, hi;
      for (const auto& r : it->rows) {
        const Rat a = r.e.coeff(it->var);
        LinExpr rest = r.e;
        rest -= LinExpr::var(it->var) * a;
        const Rat bound = -rest.value_at(p) / a;
        if (a.sign() > 0)
          raise_lower(lo, bound, r.strict);
        else
          lower_upper(hi, bound, r.strict);
      }
      p[it->var] = pick(lo, hi);
    }
    for (auto it = substs_.rbegin(); it != substs_.rend(); ++it) {
      for (const auto& [name, c] : it->repl.coeffs()) p.emplace(name, Rat(0));
      p[it->var] = it->repl.value_at(p);
    }
    return p;
  }

  static Rat pick(const Bound& lo, const Bound& hi) {
    if (lo.present && hi.present) {
      assert(lo.value < hi.value || (lo.value == hi.value && !lo.strict && !hi.strict));
      if (!lo.strict) return lo.value;
      return (lo.value + hi.value) / Rat(2);
    }
    if (lo.present) return lo.strict ? lo.value + Rat(1) : lo.value;
    if (hi.present) {
      if (hi.strict ? Rat(0) < hi.value : Rat(0) <= hi.value) return Rat(0);
      return hi.strict ? hi.value - Rat(1) : hi.value;
    }
    return Rat(0);
  }

 private:
  bool solve_equalities() {
    while (!eqs_.empty()) {
      LinExpr e = eqs_.back();
      eqs_.pop_back();
      if (e.is_constant()) {
        if (!e.constant().is_zero()) return false;
        continue;
      }
      const auto& [name, c] = *e.coeffs().begin();  // lex-smallest variable
      LinExpr repl = e;
      repl -= LinExpr::var(name) * c;
      repl *= Rat(-1) / c;  // name = repl
      for (auto& other : eqs_) other = substitute(other, name, repl);
      for (auto& r : rows_) r.e = substitute(r.e, name, repl);
      substs_.push_back({name, repl});
    }
    return true;
  }

  bool eliminate(const std::string& x) {
    std::vector<Row> lowers, uppers, rest;
    Snapshot snap{x, {}};
    for (auto& r : rows_) {
      const Rat a = r.e.coeff(x);
      if (a.is_zero()) {
        rest.push_back(std::move(r));
      } else {
        snap.rows.push_back(r);
        (a.sign() > 0 ? lowers : uppers).push_back(std::move(r));
      }
    }
    rows_ = std::move(rest);
    for (const auto& l : lowers) {
      const Rat a = l.e.coeff(x);
      for (const auto& u : uppers) {
        const Rat b = u.e.coeff(x);  // negative
        LinExpr combined = l.e * (-b) + u.e * a;
        rows_.push_back({std::move(combined), l.strict || u.strict});
      }
    }
    snapshots_.push_back(std::move(snap));
    return check_constants();
  }

  bool check_constants() {
    std::vector<Row> kept;
    for (auto& r : rows_) {
      if (r.e.is_constant()) {
        const int s = r.e.constant().sign();
        if (s < 0 || (s == 0 && r.strict)) return false;
      } else {
        kept.push_back(std::move(r));
      }
    }
    rows_ = std::move(kept);
    return true;
  }

  // Scale each row so its lex-first coefficient is +-1, then keep only the
  // tightest row per coefficient vector. FM breeds redundant rows; without
  // this the pairing step blows up.
  void dedupe() {
    std::map<std::string, std::pair<Rat, bool>> best;  // coeff key -> (constant, strict)
    std::vector<Row> out;
    for (auto& r : rows_) {
      if (r.e.is_constant()) {
        out.push_back(std::move(r));
        continue;
      }
      const Rat lead = r.e.coeffs().begin()->second;
      Rat scale = Rat(1) / (lead.sign() > 0 ? lead : -lead);
      r.e *= scale;
      std::string key;
      for (const auto& [name, c] : r.e.coeffs()) key += name + ":" + c.str() + ";";
      auto it = best.find(key);
      if (it == best.end()) {
        best.emplace(key, std::make_pair(r.e.constant(), r.strict));
      } else if (r.e.constant() < it->second.first ||
                 (r.e.constant() == it->second.first && r.strict && !it->second.second)) {
        it->second = {r.e.constant(), r.strict};
      }
    }
    for (auto& [key, cs] : best) {
      LinExpr e(cs.first);
      // rebuild coefficients from the key
      std::size_t pos = 0;
      while (pos < key.size()) {
        const auto colon = key.find(':', pos);
        const auto semi = key.find(';', colon);
        e += LinExpr::var(key.substr(pos, colon - pos)) * Rat::parse(key.substr(colon + 1, semi - colon - 1));
        pos = semi + 1;
      }
      out.push_back({std::move(e), cs.second});
    }
    rows_ = std::move(out);
  }

  struct Subst {
    std::string var;
    LinExpr repl;
  };
  struct Snapshot {
    std::string var;
    std::vector<Row> rows;
  };

  std::string keep_;
  std::vector<LinExpr> eqs_;
  std::vector<Row> rows_;
  std::vector<Subst> substs_;
  std::vector<Snapshot> snapshots_;
};

}  // namespace

std::optional<Point> lp_feasible(const std::vector<Constraint>& cs) {
  Eliminator elim(cs, "");
  if (!elim.run()) return std::nullopt;
  Point p = elim.witness();
  // variables constrained nowhere still deserve a deterministic value
  for (const auto& c : cs)
    for (const auto& [name, coef] : c.expr.coeffs())
      p.emplace(name, Rat(0));
  return p;
}

std::optional<std::pair<Rat, Point>> lp_extremum(const LinExpr& objective,
                                                 const std::vector<Constraint>& cs,
                                                 bool minimize) {
  // The objective variable name sorts after every proposition name and is not
  // a valid proposition, so it cannot collide or disturb elimination order.
  const std::string t = "~obj";
  std::vector<Constraint> sys = cs;
  LinExpr diff = objective - LinExpr::var(t);
  sys.push_back({diff, Rel::Ge});
  sys.push_back({-diff, Rel::Ge});

  Eliminator elim(sys, t);
  if (!elim.run()) return std::nullopt;
  Bound lo, hi;
  elim.kept_bounds(lo, hi);
  const Bound& b = minimize ? lo : hi;
  if (!b.present)
    throw std::runtime_error("objective unbounded over the feasible set");
  if (b.strict)
    throw std::runtime_error("objective extremum not attained (strict constraint binding)");
  const Rat v = b.value;

  std::vector<Constraint> pinned = cs;
  LinExpr at = objective - LinExpr(v);
  pinned.push_back({at, Rel::Eq});
  auto w = lp_feasible(pinned);
  if (!w) throw std::logic_error("extremum witness system infeasible");
  return std::make_pair(v, std::move(*w));
}

}  // namespace luka
