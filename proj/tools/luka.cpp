#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "luka/consistency.hpp"
#include "luka/decision.hpp"
#include "luka/derive.hpp"
#include "luka/parser.hpp"
#include "luka/proof.hpp"
#include "luka/semantics.hpp"

namespace {

using namespace luka;

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FormulaSet read_set_file(const std::string& path) {
  std::istringstream in(read_file(path));
  FormulaSet out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    try {
      set_add(out, parse(line.substr(begin, end - begin + 1)));
    } catch (const ParseError& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string witness_text(const Valuation& v) {
  return v.empty() ? "-" : v.str();
}

int cmd_eval(const std::string& text, const std::string& val) {
  const Formula f = parse(text);
  const Valuation v = Valuation::parse(val);
  const Rat r = eval(f, v);
  std::cout << r.str() << "\n";
  return r == Rat(1) ? kAffirmative : kNegative;
}

int cmd_decide(const std::string& text) {
  const Verdict v = is_tautology(parse(text));
  if (v.kind == Verdict::Kind::Tautology) {
    std::cout << "TAUT\n";
    return kAffirmative;
  }
  std::cout << "CEX value=" << v.value.str() << " at " << witness_text(v.witness)
            << "\n";
  return kNegative;
}

int cmd_minmax(const std::string& text) {
  const Formula f = parse(text);
  const auto [mn, wmin] = min_value(f);
  const auto [mx, wmax] = max_value(f);
  std::cout << "min " << mn.str() << " at " << witness_text(wmin) << "\n";
  std::cout << "max " << mx.str() << " at " << witness_text(wmax) << "\n";
  return mn == Rat(1) ? kAffirmative : kNegative;
}

int cmd_check(const std::string& path) {
  Proof proof;
  try {
    proof = proof_from_text(read_file(path));
  } catch (const ProofParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kInputError;
  }
  const CheckResult r = check_proof(proof);
  if (!r.ok) {
    std::cout << "error: line " << r.error_line << ": " << r.reason << "\n";
    return kNegative;
  }
  std::cout << "ok: " << r.conclusion->str() << "\n";
  if (!r.cited.empty()) {
    std::cout << "cited:";
    for (const auto id : r.cited) std::cout << " " << scheme_name(id);
    std::cout << "\n";
  }
  return kAffirmative;
}

int cmd_verify_registry() {
  const RegistryReport report = verify_registry();
  for (const auto& e : report.entries)
    std::cout << scheme_name(e.id) << (e.valid ? " valid " : " INVALID ")
              << e.instance.str() << "\n";
  return report.all_valid() ? kAffirmative : kNegative;
}

int cmd_consistent(const std::string& path) {
  const FormulaSet s = read_set_file(path);
  std::cerr << "note: consistency is decided semantically - the conjunction is "
               "checked for positive satisfiability, which matches the "
               "underivability criterion through soundness and completeness\n";
  const ConsistencyVerdict v = is_consistent(s);
  if (v.consistent) {
    std::cout << "CONSISTENT value=" << v.value.str() << " witness="
              << witness_text(v.witness) << "\n";
    return kAffirmative;
  }
  std::cout << "INCONSISTENT\n";
  return kNegative;
}

int cmd_extend(const std::string& seed_path, const std::vector<std::string>& vars,
               int depth, int nmax, const std::string& out_path) {
  const FormulaSet seed = seed_path.empty() ? FormulaSet{} : read_set_file(seed_path);
  const Fragment frag = Fragment::over(vars, depth);
  FragmentExtension ext;
  try {
    ext = lindenbaum_extend(seed, frag);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  if (out_path.empty()) {
    write_trace(std::cout, ext, nmax);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    write_trace(out, ext, nmax);
  }
  std::cerr << "accepted " << ext.accepted.size() << " of "
            << frag.formulas().size() << " enumerated formulas\n";
  return kAffirmative;
}

int cmd_audit(const std::string& trace_path, int nmax_override) {
  std::ifstream in(trace_path);
  if (!in) throw std::invalid_argument("cannot open '" + trace_path + "'");
  auto [ext, nmax] = read_trace(in);
  if (nmax_override > 0) nmax = nmax_override;
  const MaximalityReport r = audit_maximality(ext, nmax);

  std::cout << "conjunction-membership: " << r.conj_checked << " checked, "
            << r.conj_violations.size() << " violations\n";
  for (const auto& v : r.conj_violations)
    std::cout << "  violation: " << v.conj.str() << " accepted=" << v.conj_accepted
              << " left=" << v.left_accepted << " right=" << v.right_accepted << "\n";
  std::cout << "mp-closure: " << r.mp_checked << " checked, "
            << r.mp_violations.size() << " violations\n";
  for (const auto& v : r.mp_violations)
    std::cout << "  violation: " << v.premise.str() << " with " << v.implication.str()
              << " but " << v.conclusion.str() << " rejected\n";
  std::cout << "derived-membership: " << r.derive_checked << " proved, "
            << r.derive_violations.size() << " violations\n";
  for (const auto& f : r.derive_violations)
    std::cout << "  violation: provable " << f.str() << " not accepted\n";
  int max_k = 0;
  for (const auto& e : r.powers) max_k = std::max(max_k, e.k);
  std::cout << "powers: " << r.powers.size() << " formulas, decided up to k=" << max_k
            << ", undecided<=n_max(" << r.n_max << "): " << r.undecided_powers << "\n";
  return r.clean() ? kAffirmative : kNegative;
}

int cmd_probe(const std::string& trace_path) {
  std::ifstream in(trace_path);
  if (!in) throw std::invalid_argument("cannot open '" + trace_path + "'");
  auto [ext, nmax] = read_trace(in);
  (void)nmax;
  const TruthLemmaReport r = probe_truth_lemma(ext);
  std::cout << "canonical valuation: " << witness_text(r.valuation) << "\n";
  std::size_t all_hold = 0;
  for (const auto& e : r.entries)
    if (e.holds_one && e.holds_zero && e.holds_half) ++all_hold;
  std::cout << "entries: " << r.entries.size() << ", fully matching: " << all_hold
            << "\n";
  for (const auto& [label, counts] : r.by_connective)
    std::cout << "  " << label << ": holds " << counts.first << ", fails "
              << counts.second << "\n";
  for (const auto& e : r.entries) {
    if (e.holds_one && e.holds_zero && e.holds_half) continue;
    std::cout << "  mismatch: " << e.formula.str() << " value=" << e.value.str()
              << " member=" << e.member << " neg_member=" << e.neg_member
              << (e.neg_extrapolated ? " (negation extrapolated)" : "") << "\n";
  }
  return kAffirmative;
}

int cmd_fixtures(const std::string& dir, bool emit) {
  namespace fs = std::filesystem;
  const auto suite = fixture_suite();
  if (emit) {
    fs::create_directories(dir);
    for (const auto& fx : suite) {
      std::ofstream out(fs::path(dir) / (fx.name + ".proof"));
      out << "# " << fx.description << "\n" << proof_to_text(fx.proof);
    }
  }
  if (!fs::is_directory(dir)) {
    std::cerr << "error: fixture directory '" << dir << "' not found\n";
    return kInputError;
  }
  bool all_ok = true;
  for (const auto& fx : suite) {
    const fs::path path = fs::path(dir) / (fx.name + ".proof");
    std::string status;
    if (!fs::exists(path)) {
      status = "MISSING";
      all_ok = false;
    } else {
      try {
        const Proof proof = proof_from_text(read_file(path.string()));
        const CheckResult r = check_proof(proof);
        if (r.ok) {
          status = "pass (" + std::to_string(proof.lines.size()) +
                   " lines, concludes " + r.conclusion->str() + ")";
        } else {
          status = "FAIL at line " + std::to_string(r.error_line) + ": " + r.reason;
          all_ok = false;
        }
      } catch (const ProofParseError& e) {
        status = std::string("FAIL to parse: ") + e.what();
        all_ok = false;
      }
    }
    std::cout << fx.name << ": " << status << "\n";
  }
  const RegistryReport reg = verify_registry();
  std::cout << "registry: " << (reg.all_valid() ? "pass" : "FAIL") << " ("
            << reg.entries.size() << " schemes)\n";
  if (!reg.all_valid()) all_ok = false;
  return all_ok ? kAffirmative : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"infinite-valued Lukasiewicz logic toolkit"};
  app.require_subcommand(1);

  std::string formula_text, val_text, file_path, seed_path, trace_path, out_path;
  std::string fixture_dir = "fixtures";
  std::vector<std::string> vars;
  int depth = 3, nmax = 8, nmax_override = 0;
  bool emit = false;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula under a valuation");
  eval_cmd->add_option("formula", formula_text)->required();
  eval_cmd->add_option("--val", val_text, "valuation, e.g. p=1/2,q=1");

  auto* decide_cmd = app.add_subcommand("decide", "tautology or counterexample");
  decide_cmd->add_option("formula", formula_text)->required();

  auto* minmax_cmd = app.add_subcommand("minmax", "exact extrema over all valuations");
  minmax_cmd->add_option("formula", formula_text)->required();

  auto* check_cmd = app.add_subcommand("check", "check a proof file");
  check_cmd->add_option("file", file_path)->required();

  auto* registry_cmd =
      app.add_subcommand("verify-registry", "validate every registered scheme");

  auto* cons_cmd = app.add_subcommand("consistent", "consistency of a formula set file");
  cons_cmd->add_option("file", file_path)->required();

  auto* extend_cmd =
      app.add_subcommand("extend", "bounded Lindenbaum extension over a fragment");
  extend_cmd->add_option("--seed", seed_path, "seed set file (may be omitted)");
  extend_cmd->add_option("--vars", vars, "generator variables")
      ->delimiter(',')
      ->required();
  extend_cmd->add_option("--depth", depth, "fragment depth bound");
  extend_cmd->add_option("--nmax", nmax, "power cap recorded for audits");
  extend_cmd->add_option("-o,--out", out_path, "trace output file (default stdout)");

  auto* audit_cmd = app.add_subcommand("audit", "maximality audit of a trace");
  audit_cmd->add_option("trace", trace_path)->required();
  audit_cmd->add_option("--nmax", nmax_override, "override the recorded power cap");

  auto* probe_cmd = app.add_subcommand("probe", "truth-lemma probe of a trace");
  probe_cmd->add_option("trace", trace_path)->required();

  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "check the bundled derivations and the registry");
  fixtures_cmd->add_option("--dir", fixture_dir, "fixture directory");
  fixtures_cmd->add_flag("--emit", emit, "write the bundled fixtures into the directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(formula_text, val_text);
    if (decide_cmd->parsed()) return cmd_decide(formula_text);
    if (minmax_cmd->parsed()) return cmd_minmax(formula_text);
    if (check_cmd->parsed()) return cmd_check(file_path);
    if (registry_cmd->parsed()) return cmd_verify_registry();
    if (cons_cmd->parsed()) return cmd_consistent(file_path);
    if (extend_cmd->parsed()) return cmd_extend(seed_path, vars, depth, nmax, out_path);
    if (audit_cmd->parsed()) return cmd_audit(trace_path, nmax_override);
    if (probe_cmd->parsed()) return cmd_probe(trace_path);
    if (fixtures_cmd->parsed()) return cmd_fixtures(fixture_dir, emit);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
