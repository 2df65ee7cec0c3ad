#include "luka/decision.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "luka/fourier_motzkin.hpp"
#include "luka/piecewise.hpp"
#include "luka/semantics.hpp"

namespace luka {

namespace {

// Depth-first enumeration of the sign regimes of every min/max clause in a
// list of formulas. A regime whose constraint set is already infeasible is
// dropped before descending; repeated splits on the same affine expression
// follow the recorded branch. The running witness point avoids an LP call
// whenever the new constraint already holds at it.
class CellEnumerator {
 public:
  using Visitor =
      std::function<void(const std::vector<LinExpr>&, const std::vector<Constraint>&)>;

  explicit CellEnumerator(const std::vector<Formula>& fs) : fs_(fs) {
    std::set<std::string> vars;
    for (const auto& f : fs_)
      for (const auto& v : f.variables()) vars.insert(v);
    for (const auto& v : vars) {
      path_.push_back({LinExpr::var(v), Rel::Ge});
      path_.push_back({LinExpr(Rat(1)) - LinExpr::var(v), Rel::Ge});
      witness_[v] = Rat(0);
    }
  }

  void run(Visitor visit) {
    visit_ = std::move(visit);
    next_formula(0);
  }

 private:
  void next_formula(std::size_t idx) {
    if (idx == fs_.size()) {
      visit_(exprs_, path_);
      return;
    }
    lin(fs_[idx], [this, idx](const LinExpr& e) {
      exprs_.push_back(e);
      next_formula(idx + 1);
      exprs_.pop_back();
    });
  }

  void lin(const Formula& f, const std::function<void(const LinExpr&)>& k) {
    switch (f.kind()) {
      case Formula::Kind::Bottom:
        k(LinExpr(Rat(0)));
        return;
      case Formula::Kind::Prop:
        k(LinExpr::var(f.prop_name()));
        return;
      case Formula::Kind::Not:
        lin(f.sub(), [&k](const LinExpr& e) { k(LinExpr(Rat(1)) - e); });
        return;
      case Formula::Kind::And:
        lin(f.left(), [this, &f, &k](const LinExpr& ea) {
          lin(f.right(), [this, &ea, &k](const LinExpr& eb) {
            LinExpr g = ea + eb - LinExpr(Rat(1));
            branch(
                g, [&] { k(g); }, [&] { k(LinExpr(Rat(0))); });
          });
        });
        return;
      case Formula::Kind::Implies:
        lin(f.left(), [this, &f, &k](const LinExpr& ea) {
          lin(f.right(), [this, &ea, &k](const LinExpr& eb) {
            LinExpr g = eb - ea;  // value is 1 iff g >= 0, else 1 + g
            branch(
                g, [&] { k(LinExpr(Rat(1))); }, [&] { k(LinExpr(Rat(1)) + g); });
          });
        });
        return;
    }
  }

  void branch(const LinExpr& g, const std::function<void()>& on_ge,
              const std::function<void()>& on_lt) {
    if (g.is_constant()) {
      (g.constant() >= Rat(0) ? on_ge : on_lt)();
      return;
    }
    const std::string key = g.str();
    auto it = signs_.find(key);
    if (it != signs_.end()) {
      (it->second ? on_ge : on_lt)();
      return;
    }
    descend(key, {g, Rel::Ge}, true, on_ge);
    descend(key, {-g, Rel::Gt}, false, on_lt);
  }

  void descend(const std::string& key, Constraint c, bool sign,
               const std::function<void()>& fn) {
    const Point saved = witness_;
    path_.push_back(std::move(c));
    if (!path_.back().holds_at(witness_)) {
      auto w = lp_feasible(path_);
      if (!w) {
        path_.pop_back();
        return;
      }
      witness_ = std::move(*w);
    }
    signs_.emplace(key, sign);
    fn();
    signs_.erase(key);
    path_.pop_back();
    witness_ = saved;
  }

  std::vector<Formula> fs_;
  std::vector<Constraint> path_;
  std::map<std::string, bool> signs_;
  Point witness_;
  std::vector<LinExpr> exprs_;
  Visitor visit_;
};

std::vector<Constraint> relax(const std::vector<Constraint>& cs) {
  std::vector<Constraint> out = cs;
  for (auto& c : out)
    if (c.rel == Rel::Gt) c.rel = Rel::Ge;
  return out;
}

Valuation to_valuation(const Point& p) {
  Valuation v;
  for (const auto& [name, r] : p)
    if (valid_prop_name(name)) v.set(name, r);
  return v;
}

std::pair<Rat, Valuation> extremum_regions(const Formula& f, bool minimize) {
  if (f.variables().empty()) return {eval(f, Valuation()), Valuation()};
  std::optional<std::pair<Rat, Point>> best;
  CellEnumerator enumerate({f});
  enumerate.run([&](const std::vector<LinExpr>& exprs, const std::vector<Constraint>& path) {
    auto r = lp_extremum(exprs[0], relax(path), minimize);
    if (!r) throw std::logic_error("feasible cell lost under relaxation");
    if (!best || (minimize ? r->first < best->first : r->first > best->first)) best = r;
  });
  if (!best) throw std::logic_error("no region produced for a nonconstant formula");
  return {best->first, to_valuation(best->second)};
}

std::pair<Rat, Valuation> extremum(const Formula& f, bool minimize) {
  const auto vars = f.variables();
  if (vars.empty()) return {eval(f, Valuation()), Valuation()};
  if (vars.size() == 1) {
    const std::string& x = *vars.begin();
    const PLFunc pl = pl_eval(f, x);
    const auto [value, arg] = minimize ? pl.minimum() : pl.maximum();
    Valuation w;
    w.set(x, arg);
    return {value, w};
  }
  return extremum_regions(f, minimize);
}

}  // namespace

std::vector<Region> linearize(const Formula& f) {
  std::vector<Region> out;
  CellEnumerator enumerate({f});
  enumerate.run([&](const std::vector<LinExpr>& exprs, const std::vector<Constraint>& path) {
    out.push_back({relax(path), exprs[0]});
  });
  return out;
}

std::pair<Rat, Valuation> min_value(const Formula& f) { return extremum(f, true); }
std::pair<Rat, Valuation> max_value(const Formula& f) { return extremum(f, false); }

std::pair<Rat, Valuation> detail::min_value_regions(const Formula& f) {
  return extremum_regions(f, true);
}
std::pair<Rat, Valuation> detail::max_value_regions(const Formula& f) {
  return extremum_regions(f, false);
}

Verdict is_tautology(const Formula& f) {
  auto [value, witness] = min_value(f);
  if (value == Rat(1)) return {Verdict::Kind::Tautology, Valuation(), Rat(1)};
  return {Verdict::Kind::Counterexample, std::move(witness), std::move(value)};
}

Verdict sat_at_one(const Formula& f) {
  auto [value, witness] = max_value(f);
  if (value == Rat(1)) return {Verdict::Kind::Satisfiable, std::move(witness), Rat(1)};
  return {Verdict::Kind::Unsatisfiable, Valuation(), std::move(value)};
}

Verdict positively_satisfiable(const Formula& f) {
  auto [value, witness] = max_value(f);
  if (value > Rat(0))
    return {Verdict::Kind::Satisfiable, std::move(witness), std::move(value)};
  return {Verdict::Kind::Unsatisfiable, Valuation(), std::move(value)};
}

std::optional<std::pair<Rat, Valuation>> optimize(const Formula& objective,
                                                  const std::vector<ValuePin>& pins,
                                                  bool minimize) {
  std::vector<Formula> fs = {objective};
  for (const auto& p : pins) fs.push_back(p.formula);

  std::set<std::string> vars;
  for (const auto& f : fs)
    for (const auto& v : f.variables()) vars.insert(v);
  if (vars.empty()) {
    for (const auto& p : pins)
      if (eval(p.formula, Valuation()) != p.target) return std::nullopt;
    return std::make_pair(eval(objective, Valuation()), Valuation());
  }

  std::optional<std::pair<Rat, Point>> best;
  CellEnumerator enumerate(fs);
  enumerate.run([&](const std::vector<LinExpr>& exprs, const std::vector<Constraint>& path) {
    std::vector<Constraint> sys = relax(path);
    for (std::size_t i = 0; i < pins.size(); ++i)
      sys.push_back({exprs[i + 1] - LinExpr(pins[i].target), Rel::Eq});
    auto r = lp_extremum(exprs[0], sys, minimize);
    if (!r) return;  // cell does not meet the pins
    if (!best || (minimize ? r->first < best->first : r->first > best->first)) best = r;
  });
  if (!best) return std::nullopt;
  // pinned systems can leave box variables off the witness; fill them in
  Valuation v = to_valuation(best->second);
  for (const auto& name : vars)
    if (!v.contains(name)) v.set(name, Rat(0));
  return std::make_pair(best->first, std::move(v));
}

}  // namespace luka
