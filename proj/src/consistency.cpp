#include "luka/consistency.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "luka/derive.hpp"
#include "luka/parser.hpp"
#include "luka/semantics.hpp"

namespace luka {

bool set_contains(const FormulaSet& s, const Formula& f) {
  return std::find(s.begin(), s.end(), f) != s.end();
}

bool set_add(FormulaSet& s, const Formula& f) {
  if (set_contains(s, f)) return false;
  s.push_back(f);
  return true;
}

Formula set_conjunction(const FormulaSet& s) {
  if (s.empty()) return Formula::top();
  Formula acc = s[0];
  for (std::size_t i = 1; i < s.size(); ++i) acc = Formula::conj(acc, s[i]);
  return acc;
}

ConsistencyVerdict is_consistent(const FormulaSet& gamma) {
  const Verdict v = positively_satisfiable(set_conjunction(gamma));
  if (v.kind == Verdict::Kind::Satisfiable) return {true, v.witness, v.value};
  return {false, Valuation(), Rat(0)};
}

ConsistencyContext::ConsistencyContext(FormulaSet base) : base_(std::move(base)) {
  index_.insert(base_.begin(), base_.end());
  std::set<std::string> vars;
  for (const auto& f : base_)
    for (const auto& v : f.variables()) vars.insert(v);
  if (vars.size() <= 1) {
    pl_mode_ = true;
    var_ = vars.empty() ? "" : *vars.begin();
    base_pl_ = PLFunc::constant(Rat(1));  // empty conjunction
    for (const auto& f : base_) {
      if (var_.empty() && !f.variables().empty()) var_ = *f.variables().begin();
      base_pl_ = pl_conj(base_pl_, pl_eval(f, var_.empty() ? "p" : var_));
    }
  }
}

ConsistencyVerdict ConsistencyContext::from_pl(const PLFunc& f) const {
  const auto [value, arg] = f.maximum();
  if (value > Rat(0)) {
    Valuation w;
    if (!var_.empty()) w.set(var_, arg);
    return {true, std::move(w), value};
  }
  return {false, Valuation(), Rat(0)};
}

ConsistencyVerdict ConsistencyContext::current() const {
  if (pl_mode_) return from_pl(base_pl_);
  return is_consistent(base_);
}

ConsistencyVerdict ConsistencyContext::query(const Formula& extra) const {
  if (pl_mode_) {
    const auto vars = extra.variables();
    if (vars.empty() || (vars.size() == 1 && (var_.empty() || *vars.begin() == var_))) {
      const std::string v = var_.empty() ? (vars.empty() ? "p" : *vars.begin()) : var_;
      return from_pl(pl_conj(base_pl_, pl_eval(extra, v)));
    }
  }
  FormulaSet s = base_;
  set_add(s, extra);
  return is_consistent(s);
}

void ConsistencyContext::add(const Formula& f) {
  if (!index_.insert(f).second) return;
  base_.push_back(f);
  if (pl_mode_) {
    const auto vars = f.variables();
    if (vars.size() > 1 || (!vars.empty() && !var_.empty() && *vars.begin() != var_)) {
      pl_mode_ = false;  // left the single-variable regime
      return;
    }
    if (var_.empty() && !vars.empty()) {
      // the base so far was constant; rebuild over the new variable
      var_ = *vars.begin();
      base_pl_ = PLFunc::constant(Rat(1));
      for (std::size_t i = 0; i + 1 < base_.size(); ++i)
        base_pl_ = pl_conj(base_pl_, pl_eval(base_[i], var_));
    }
    base_pl_ = pl_conj(base_pl_, pl_eval(f, var_.empty() ? "p" : var_));
  }
}

Fragment Fragment::over(const std::vector<std::string>& vars, int depth) {
  if (depth < 0) throw std::invalid_argument("fragment depth must be >= 0");
  Fragment frag;
  frag.vars_ = vars;
  std::sort(frag.vars_.begin(), frag.vars_.end());
  frag.vars_.erase(std::unique(frag.vars_.begin(), frag.vars_.end()), frag.vars_.end());
  frag.depth_ = depth;

  // generate by exact height: no duplicates, no set lookups
  std::vector<Formula> exact = {Formula::bottom()};
  for (const auto& v : frag.vars_) exact.push_back(Formula::prop(v));
  std::vector<Formula> all = exact;
  for (int h = 1; h <= depth; ++h) {
    std::vector<Formula> next;
    for (const auto& f : exact) next.push_back(Formula::neg(f));
    // binaries whose higher child has exact height h-1
    for (const auto& f : exact)
      for (const auto& g : all) {
        next.push_back(Formula::conj(f, g));
        next.push_back(Formula::implies(f, g));
        if (g.depth() < h - 1) {  // asymmetric pairs not yet covered
          next.push_back(Formula::conj(g, f));
          next.push_back(Formula::implies(g, f));
        }
      }
    all.insert(all.end(), next.begin(), next.end());
    exact = std::move(next);
  }

  std::stable_sort(all.begin(), all.end(), [](const Formula& a, const Formula& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.str() < b.str();
  });
  frag.formulas_ = std::move(all);
  frag.index_.insert(frag.formulas_.begin(), frag.formulas_.end());
  return frag;
}

FragmentExtension lindenbaum_extend(const FormulaSet& seed, const Fragment& frag) {
  FormulaSet clean_seed;
  for (const auto& f : seed) set_add(clean_seed, f);
  const ConsistencyVerdict seed_v = is_consistent(clean_seed);
  if (!seed_v.consistent) throw std::invalid_argument("inconsistent seed");

  FragmentExtension ext;
  ext.seed = clean_seed;
  ext.fragment = frag;
  ext.accepted = clean_seed;
  std::unordered_set<Formula, FormulaHash> member(clean_seed.begin(), clean_seed.end());

  ConsistencyContext ctx(clean_seed);
  ConsistencyVerdict last = seed_v;
  for (const auto& f : frag.formulas()) {
    TraceStep step;
    step.formula = f;
    if (member.count(f) != 0) {
      step.accepted = true;
      step.reason = "seed";
      step.witness = last.witness;
    } else {
      const ConsistencyVerdict v = ctx.query(f);
      if (v.consistent) {
        step.accepted = true;
        step.reason = "consistent";
        step.witness = v.witness;
        ext.accepted.push_back(f);
        member.insert(f);
        ctx.add(f);
        last = v;
      } else {
        step.accepted = false;
        step.reason = "inconsistent";
      }
    }
    ext.trace.push_back(std::move(step));
  }
  return ext;
}

MaximalityReport audit_maximality(const FragmentExtension& ext, int n_max,
                                  std::size_t derive_cap) {
  MaximalityReport report;
  report.n_max = n_max;
  std::unordered_set<Formula, FormulaHash> accepted(ext.accepted.begin(),
                                                    ext.accepted.end());
  const auto in = [&](const Formula& f) { return accepted.count(f) != 0; };
  const Fragment& frag = ext.fragment;

  // (ii-1): a & b accepted iff both conjuncts accepted
  for (const auto& f : frag.formulas()) {
    if (f.kind() != Formula::Kind::And) continue;
    ++report.conj_checked;
    const bool whole = in(f), l = in(f.left()), r = in(f.right());
    if (whole != (l && r)) report.conj_violations.push_back({f, whole, l, r});
  }

  // (ii-2): accepted premise and accepted implication force the conclusion
  for (const auto& f : frag.formulas()) {
    if (f.kind() != Formula::Kind::Implies || !in(f) || !in(f.left())) continue;
    if (!frag.contains(f.right())) continue;
    ++report.mp_checked;
    if (!in(f.right())) report.mp_violations.push_back({f.left(), f, f.right()});
  }

  // (ii-3, restricted): conjunctions provable from accepted pairs are members
  {
    std::vector<Formula> small;
    for (const auto& f : ext.accepted)
      if (f.depth() < frag.depth()) small.push_back(f);
    bool capped = false;
    for (const auto& x : small) {
      for (const auto& y : small) {
        if (report.derive_checked >= derive_cap) {
          capped = true;
          break;
        }
        const Formula c = Formula::conj(x, y);
        if (!frag.contains(c)) continue;
        const Proof proof = derive_conjunction({x, y});
        const CheckResult res = check_proof(proof);
        if (!res.ok || *res.conclusion != c)
          throw std::logic_error("generated conjunction proof failed its own check");
        ++report.derive_checked;
        if (!in(c)) report.derive_violations.push_back(c);
      }
      if (capped) break;
    }
  }

  // (ii-4): some power or negated power decided for every fragment formula;
  // powers outside the fragment are decided by consistency with the accepted set
  ConsistencyContext ctx(ext.accepted);
  const auto decided_member = [&](const Formula& f) {
    if (frag.contains(f)) return in(f);
    return ctx.query(f).consistent;
  };
  for (const auto& f : frag.formulas()) {
    MaximalityReport::PowerEntry entry;
    entry.formula = f;
    for (int k = 1; k <= n_max; ++k) {
      const Formula p = power(f, k);
      if (decided_member(p)) {
        entry.k = k;
        entry.positive = true;
        break;
      }
      if (decided_member(Formula::neg(p))) {
        entry.k = k;
        entry.positive = false;
        break;
      }
    }
    if (entry.k == 0) ++report.undecided_powers;
    report.powers.push_back(std::move(entry));
  }
  return report;
}

Valuation canonical_valuation(const FragmentExtension& ext) {
  Valuation v;
  for (const auto& name : ext.fragment.vars()) {
    const Formula p = Formula::prop(name);
    const bool pos = ext.accepts(p);
    const bool negv = ext.accepts(Formula::neg(p));
    if (pos && negv)
      throw std::logic_error("extension accepts both " + name + " and its negation");
    v.set(name, pos ? Rat(1) : negv ? Rat(0) : Rat(1, 2));
  }
  return v;
}

TruthLemmaReport probe_truth_lemma(const FragmentExtension& ext) {
  TruthLemmaReport report;
  report.valuation = canonical_valuation(ext);
  std::unordered_set<Formula, FormulaHash> accepted(ext.accepted.begin(),
                                                    ext.accepted.end());
  ConsistencyContext ctx(ext.accepted);
  const Fragment& frag = ext.fragment;
  const Rat half(1, 2);

  for (const auto& f : frag.formulas()) {
    TruthLemmaReport::Entry e;
    e.formula = f;
    e.value = eval(f, report.valuation);
    e.member = accepted.count(f) != 0;
    const Formula nf = Formula::neg(f);
    if (frag.contains(nf)) {
      e.neg_member = accepted.count(nf) != 0;
    } else {
      e.neg_member = ctx.query(nf).consistent;
      e.neg_extrapolated = true;
    }
    e.holds_one = (e.value == Rat(1)) == e.member;
    e.holds_zero = (e.value == Rat(0)) == e.neg_member;
    e.holds_half = (e.value == half) == (!e.member && !e.neg_member);

    const char* label = "";
    switch (f.kind()) {
      case Formula::Kind::Bottom: label = "bottom"; break;
      case Formula::Kind::Prop: label = "prop"; break;
      case Formula::Kind::Not: label = "not"; break;
      case Formula::Kind::And: label = "and"; break;
      case Formula::Kind::Implies: label = "implies"; break;
    }
    auto& [holds, fails] = report.by_connective[label];
    (e.holds_one && e.holds_zero && e.holds_half) ? ++holds : ++fails;
    report.entries.push_back(std::move(e));
  }
  return report;
}

ExtensionLemmaReport check_extension_lemma(const FormulaSet& phi, const Formula& target) {
  ExtensionLemmaReport report;
  const Formula conj = set_conjunction(phi);
  const auto premise = optimize(target, {{conj, Rat(1)}}, /*minimize=*/true);
  if (!premise || premise->first >= Rat(1)) {
    report.premise_holds = false;
    report.summary = premise ? "premise not met: the set forces the target to 1"
                             : "premise not met: the set never reaches value 1";
    return report;
  }
  report.premise_holds = true;
  report.target_value = premise->first;
  report.premise_witness = premise->second;

  FormulaSet extended = phi;
  set_add(extended, Formula::neg(target));
  report.extension = is_consistent(extended);

  std::ostringstream os;
  os << "at " << (report.premise_witness.empty() ? "{}" : report.premise_witness.str())
     << " the set evaluates to 1 while the target evaluates to "
     << report.target_value.str() << "; the negated target has value "
     << (Rat(1) - report.target_value).str() << " there, so the extension is "
     << (report.extension.consistent ? "consistent" : "INCONSISTENT (property violated)");
  report.summary = os.str();
  return report;
}

void write_trace(std::ostream& os, const FragmentExtension& ext, int n_max) {
  nlohmann::json header;
  header["kind"] = "lindenbaum-trace";
  header["seed"] = nlohmann::json::array();
  for (const auto& f : ext.seed) header["seed"].push_back(f.str());
  header["vars"] = ext.fragment.vars();
  header["depth"] = ext.fragment.depth();
  header["nmax"] = n_max;
  os << header.dump() << "\n";
  for (const auto& step : ext.trace) {
    nlohmann::json rec;
    rec["formula"] = step.formula.str();
    rec["accepted"] = step.accepted;
    if (step.reason == "seed") rec["seed"] = true;
    if (step.witness) rec["witness"] = step.witness->str();
    os << rec.dump() << "\n";
  }
}

std::pair<FragmentExtension, int> read_trace(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty trace file");
  nlohmann::json header = nlohmann::json::parse(line);
  if (header.value("kind", "") != "lindenbaum-trace")
    throw std::invalid_argument("not a lindenbaum trace (missing header record)");

  FragmentExtension ext;
  for (const auto& s : header.at("seed")) set_add(ext.seed, parse(s.get<std::string>()));
  ext.fragment = Fragment::over(header.at("vars").get<std::vector<std::string>>(),
                                header.at("depth").get<int>());
  const int n_max = header.value("nmax", 8);
  ext.accepted = ext.seed;

  std::size_t idx = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    nlohmann::json rec = nlohmann::json::parse(line);
    if (idx >= ext.fragment.formulas().size())
      throw std::invalid_argument("trace has more steps than the fragment");
    TraceStep step;
    step.formula = parse(rec.at("formula").get<std::string>());
    if (step.formula != ext.fragment.formulas()[idx])
      throw std::invalid_argument("trace step " + std::to_string(idx + 1) +
                                  " does not match the fragment enumeration");
    step.accepted = rec.at("accepted").get<bool>();
    step.reason = step.accepted
                      ? (rec.value("seed", false) ? "seed" : "consistent")
                      : "inconsistent";
    if (rec.contains("witness"))
      step.witness = Valuation::parse(rec.at("witness").get<std::string>());
    if (step.accepted && step.reason != "seed") ext.accepted.push_back(step.formula);
    ext.trace.push_back(std::move(step));
    ++idx;
  }
  if (idx != ext.fragment.formulas().size())
    throw std::invalid_argument("trace is shorter than the fragment enumeration");
  return {std::move(ext), n_max};
}

}  // namespace luka
