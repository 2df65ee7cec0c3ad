#include "luka/proof.hpp"

#include <algorithm>
#include <sstream>

#include "luka/decision.hpp"
#include "luka/parser.hpp"

namespace luka {

Justification Justification::axiom(SchemeId id, Binding b) {
  Justification j;
  j.kind = Kind::Axiom;
  j.scheme = id;
  j.binding = std::move(b);
  return j;
}

Justification Justification::lemma(SchemeId id, Binding b) {
  Justification j;
  j.kind = Kind::Lemma;
  j.scheme = id;
  j.binding = std::move(b);
  return j;
}

Justification Justification::mp(std::size_t premise, std::size_t implication) {
  Justification j;
  j.kind = Kind::MP;
  j.premise = premise;
  j.implication = implication;
  return j;
}

namespace {

CheckResult fail(std::size_t line, std::string reason) {
  CheckResult r;
  r.ok = false;
  r.error_line = line;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

CheckResult check_proof(const Proof& p) {
  if (p.lines.empty()) return fail(0, "empty proof");
  CheckResult result;
  for (std::size_t k = 0; k < p.lines.size(); ++k) {
    const std::size_t lineno = k + 1;
    const auto& [formula, just] = p.lines[k];
    switch (just.kind) {
      case Justification::Kind::Hyp: {
        if (std::find(p.hypotheses.begin(), p.hypotheses.end(), formula) ==
            p.hypotheses.end())
          return fail(lineno, "formula is not among the hypotheses");
        break;
      }
      case Justification::Kind::Axiom:
      case Justification::Kind::Lemma: {
        const bool as_axiom = just.kind == Justification::Kind::Axiom;
        const auto& info = scheme_info(just.scheme);
        if (as_axiom != info.axiom)
          return fail(lineno, "scheme " + info.name +
                                  (info.axiom ? " must be cited as an axiom"
                                              : " must be cited as a lemma"));
        Formula expect;
        try {
          expect = instantiate(info.pattern, just.binding);
        } catch (const std::invalid_argument& e) {
          return fail(lineno, e.what());
        }
        if (expect != formula)
          return fail(lineno, "formula is not the stated instance of " + info.name);
        auto m = match(info.pattern, formula);
        if (!m) return fail(lineno, "instance does not match scheme " + info.name);
        if (!as_axiom &&
            std::find(result.cited.begin(), result.cited.end(), just.scheme) ==
                result.cited.end())
          result.cited.push_back(just.scheme);
        break;
      }
      case Justification::Kind::MP: {
        const std::size_t i = just.premise, j = just.implication;
        if (i == 0 || j == 0 || i >= lineno || j >= lineno)
          return fail(lineno, "mp must cite earlier lines");
        const Formula& impl = p.lines[j - 1].formula;
        if (impl.kind() != Formula::Kind::Implies)
          return fail(lineno, "mp: line " + std::to_string(j) + " is not an implication");
        if (impl.left() != p.lines[i - 1].formula)
          return fail(lineno, "mp: line " + std::to_string(i) +
                                  " is not the antecedent of line " + std::to_string(j));
        if (impl.right() != formula)
          return fail(lineno, "mp: formula is not the consequent of line " +
                                  std::to_string(j));
        break;
      }
    }
  }
  result.ok = true;
  result.conclusion = p.conclusion();
  return result;
}

bool RegistryReport::all_valid() const {
  for (const auto& e : entries)
    if (!e.valid) return false;
  return true;
}

RegistryReport verify_registry() {
  static const std::vector<std::string> fresh = {"a", "b", "c", "d"};
  RegistryReport report;
  for (const auto& info : scheme_registry()) {
    Binding b;
    std::size_t i = 0;
    for (const auto& mv : info.metavars) b.emplace(mv, Formula::prop(fresh.at(i++)));
    Formula inst = instantiate(info.pattern, b);
    const bool valid = is_tautology(inst).kind == Verdict::Kind::Tautology;
    report.entries.push_back({info.id, std::move(inst), valid});
  }
  return report;
}

std::string proof_to_text(const Proof& p) {
  std::ostringstream out;
  for (const auto& h : p.hypotheses) out << "hyp: " << h.str() << "\n";
  for (std::size_t k = 0; k < p.lines.size(); ++k) {
    const auto& [formula, just] = p.lines[k];
    out << (k + 1) << ". " << formula.str() << " ; ";
    switch (just.kind) {
      case Justification::Kind::Hyp:
        out << "hyp";
        break;
      case Justification::Kind::Axiom:
      case Justification::Kind::Lemma: {
        const auto& info = scheme_info(just.scheme);
        out << (just.kind == Justification::Kind::Axiom ? "axiom " : "lemma ")
            << info.name << " [";
        bool first = true;
        for (const auto& mv : info.metavars) {
          auto it = just.binding.find(mv);
          if (it == just.binding.end()) continue;
          if (!first) out << ", ";
          out << mv << ":=" << it->second.str();
          first = false;
        }
        out << "]";
        break;
      }
      case Justification::Kind::MP:
        out << "mp " << just.premise << "," << just.implication;
        break;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Binding parse_binding(const std::string& text, std::size_t lineno) {
  Binding b;
  const std::string inner = strip(text);
  if (inner.empty()) return b;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    auto comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    const std::string item = strip(inner.substr(pos, comma - pos));
    const auto sep = item.find(":=");
    if (sep == std::string::npos)
      throw ProofParseError(lineno, "expected metavar:=formula in binding");
    const std::string name = strip(item.substr(0, sep));
    try {
      b[name] = parse(item.substr(sep + 2));
    } catch (const ParseError& e) {
      throw ProofParseError(lineno, std::string("in binding for ") + name + ": " + e.what());
    }
    pos = comma + 1;
  }
  return b;
}

}  // namespace

Proof proof_from_text(const std::string& text) {
  Proof p;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::size_t expected_index = 1;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("hyp:", 0) == 0) {
      if (!p.lines.empty())
        throw ProofParseError(lineno, "hypotheses must precede numbered lines");
      try {
        p.hypotheses.push_back(parse(line.substr(4)));
      } catch (const ParseError& e) {
        throw ProofParseError(lineno, e.what());
      }
      continue;
    }
    const auto dot = line.find('.');
    if (dot == std::string::npos)
      throw ProofParseError(lineno, "expected '<k>. <formula> ; <justification>'");
    std::size_t index = 0;
    try {
      index = std::stoul(line.substr(0, dot));
    } catch (...) {
      throw ProofParseError(lineno, "bad line number");
    }
    if (index != expected_index)
      throw ProofParseError(lineno, "line numbered " + std::to_string(index) +
                                        ", expected " + std::to_string(expected_index));
    ++expected_index;
    const auto semi = line.find(';', dot);
    if (semi == std::string::npos)
      throw ProofParseError(lineno, "missing ';' before justification");
    Formula formula;
    try {
      formula = parse(line.substr(dot + 1, semi - dot - 1));
    } catch (const ParseError& e) {
      throw ProofParseError(lineno, e.what());
    }
    const std::string just = strip(line.substr(semi + 1));
    if (just == "hyp") {
      p.lines.push_back({formula, Justification::hyp()});
    } else if (just.rfind("mp", 0) == 0) {
      const std::string args = strip(just.substr(2));
      const auto comma = args.find(',');
      if (comma == std::string::npos)
        throw ProofParseError(lineno, "mp needs '<premise>,<implication>'");
      std::size_t i = 0, j = 0;
      try {
        i = std::stoul(strip(args.substr(0, comma)));
        j = std::stoul(strip(args.substr(comma + 1)));
      } catch (...) {
        throw ProofParseError(lineno, "bad mp line numbers");
      }
      p.lines.push_back({formula, Justification::mp(i, j)});
    } else if (just.rfind("axiom", 0) == 0 || just.rfind("lemma", 0) == 0) {
      const bool axiom = just[0] == 'a';
      std::string rest = strip(just.substr(5));
      const auto lb = rest.find('[');
      std::string name = strip(lb == std::string::npos ? rest : rest.substr(0, lb));
      auto id = scheme_by_name(name);
      if (!id) throw ProofParseError(lineno, "unknown scheme id '" + name + "'");
      Binding b;
      if (lb != std::string::npos) {
        const auto rb = rest.rfind(']');
        if (rb == std::string::npos || rb < lb)
          throw ProofParseError(lineno, "unterminated binding");
        b = parse_binding(rest.substr(lb + 1, rb - lb - 1), lineno);
      }
      p.lines.push_back({formula, axiom ? Justification::axiom(*id, std::move(b))
                                        : Justification::lemma(*id, std::move(b))});
    } else {
      throw ProofParseError(lineno, "unknown justification '" + just + "'");
    }
  }
  if (p.lines.empty()) throw ProofParseError(lineno, "proof has no lines");
  return p;
}

}  // namespace luka
