#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "luka/decision.hpp"
#include "luka/formula.hpp"
#include "luka/piecewise.hpp"
#include "luka/valuation.hpp"

namespace luka {

/// Ordered list of distinct formulas (insertion order preserved).
using FormulaSet = std::vector<Formula>;

bool set_contains(const FormulaSet& s, const Formula& f);
/// Appends f unless already present; returns whether it was added.
bool set_add(FormulaSet& s, const Formula& f);

/// Left-associated strong conjunction; the empty conjunction is !0.
Formula set_conjunction(const FormulaSet& s);

struct ConsistencyVerdict {
  bool consistent = false;
  Valuation witness;  // consistent only; gives the conjunction `value` > 0
  Rat value;
};

/// Semantic consistency of a finite set: the conjunction is positively
/// satisfiable. (The derivability criterion reduces to this through
/// soundness/completeness; deciding it by proof search is out of scope.)
ConsistencyVerdict is_consistent(const FormulaSet& gamma);

/// Answers consistency queries "base ∪ {extra}" against a fixed, growable
/// base set. Over at most one variable the base conjunction is cached as a
/// piecewise-linear function, which keeps long Lindenbaum runs and audits
/// linear instead of quadratic; otherwise each query re-solves.
class ConsistencyContext {
 public:
  explicit ConsistencyContext(FormulaSet base);
  const FormulaSet& base() const { return base_; }
  ConsistencyVerdict current() const;
  ConsistencyVerdict query(const Formula& extra) const;
  void add(const Formula& f);

 private:
  FormulaSet base_;
  std::unordered_set<Formula, FormulaHash> index_;
  bool pl_mode_ = false;
  std::string var_;  // empty in constant-only mode
  PLFunc base_pl_;
  ConsistencyVerdict from_pl(const PLFunc& f) const;
};

/// Deterministic enumeration of every formula of edge-height <= depth over
/// the generator variables, ordered by size then surface text; closed under
/// subformulas.
class Fragment {
 public:
  static Fragment over(const std::vector<std::string>& vars, int depth);

  const std::vector<std::string>& vars() const { return vars_; }
  int depth() const { return depth_; }
  const std::vector<Formula>& formulas() const { return formulas_; }
  bool contains(const Formula& f) const { return index_.count(f) != 0; }

 private:
  std::vector<std::string> vars_;
  int depth_ = 0;
  std::vector<Formula> formulas_;
  std::unordered_set<Formula, FormulaHash> index_;
};

struct TraceStep {
  Formula formula;
  bool accepted = false;
  std::string reason;  // "consistent", "inconsistent", "seed"
  std::optional<Valuation> witness;
};

/// Record of one Lindenbaum run over a fragment enumeration.
struct FragmentExtension {
  FormulaSet seed;
  Fragment fragment;
  FormulaSet accepted;  // seed first, then accepted fragment formulas in order
  std::vector<TraceStep> trace;

  bool accepts(const Formula& f) const { return set_contains(accepted, f); }
};

/// Walks the fragment enumeration, keeping each formula whose addition leaves
/// the accepted set consistent. Throws std::invalid_argument on an
/// inconsistent seed.
FragmentExtension lindenbaum_extend(const FormulaSet& seed, const Fragment& frag);

struct MaximalityReport {
  struct ConjunctionViolation {
    Formula conj;
    bool conj_accepted, left_accepted, right_accepted;
  };
  struct MpViolation {
    Formula premise, implication, conclusion;
  };
  struct PowerEntry {
    Formula formula;
    int k = 0;           // least power decided, 0 = undecided up to n_max
    bool positive = false;  // power accepted vs negated power accepted
  };

  std::size_t conj_checked = 0;
  std::vector<ConjunctionViolation> conj_violations;
  std::size_t mp_checked = 0;
  std::vector<MpViolation> mp_violations;
  std::size_t derive_checked = 0;
  std::vector<Formula> derive_violations;
  std::vector<PowerEntry> powers;
  std::size_t undecided_powers = 0;
  int n_max = 0;

  bool clean() const {
    return conj_violations.empty() && mp_violations.empty() &&
           derive_violations.empty() && undecided_powers == 0;
  }
};

/// Post-hoc audit of the four maximality properties on a finished extension.
/// Membership of powers outside the fragment is decided by consistency
/// against the accepted set. The derived-membership section re-proves pair
/// conjunctions with generated proofs (capped at `derive_cap` pairs).
MaximalityReport audit_maximality(const FragmentExtension& ext, int n_max,
                                  std::size_t derive_cap = 5000);

/// The three-valued valuation read off an extension: 1 if p accepted, 0 if
/// !p accepted, 1/2 otherwise. Throws std::logic_error if both are accepted.
Valuation canonical_valuation(const FragmentExtension& ext);

struct TruthLemmaReport {
  struct Entry {
    Formula formula;
    Rat value;
    bool member = false;
    bool neg_member = false;
    bool neg_extrapolated = false;  // negation lies outside the fragment
    bool holds_one = false;         // value=1  <=>  member
    bool holds_zero = false;        // value=0  <=>  negation member
    bool holds_half = false;        // value=1/2 <=> neither
  };
  Valuation valuation;
  std::vector<Entry> entries;
  // top connective -> (entries with all three holding, entries with a failure)
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_connective;
};

/// Reports, per fragment formula, which of the three value/membership
/// biconditionals hold under the canonical valuation. A probe, not an
/// assertion.
TruthLemmaReport probe_truth_lemma(const FragmentExtension& ext);

struct ExtensionLemmaReport {
  bool premise_holds = false;      // some V: conj(phi)=1 and target<1
  Valuation premise_witness;
  Rat target_value;                // eval(target, premise_witness)
  ConsistencyVerdict extension;    // of phi ∪ {!target}, when premise holds
  std::string summary;
};

/// Semantic rendition of the consistent-extension theorem: whenever the
/// premise holds, phi ∪ {!target} must come out consistent.
ExtensionLemmaReport check_extension_lemma(const FormulaSet& phi, const Formula& target);

/// JSON-lines trace: a header record (seed, vars, depth, nmax), then one
/// record per enumeration step {formula, accepted, witness?}.
void write_trace(std::ostream& os, const FragmentExtension& ext, int n_max);
std::pair<FragmentExtension, int> read_trace(std::istream& is);

}  // namespace luka
