#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "luka/formula.hpp"
#include "luka/pattern.hpp"
#include "luka/schemes.hpp"

namespace luka {

/// How a proof line is licensed. MP cites (premise, implication), 1-based.
struct Justification {
  enum class Kind { Hyp, Axiom, Lemma, MP };
  Kind kind = Kind::Hyp;
  SchemeId scheme = SchemeId::A1;  // Axiom / Lemma
  Binding binding;                 // Axiom / Lemma
  std::size_t premise = 0;         // MP
  std::size_t implication = 0;     // MP

  static Justification hyp() { return {}; }
  static Justification axiom(SchemeId id, Binding b);
  static Justification lemma(SchemeId id, Binding b);
  static Justification mp(std::size_t premise, std::size_t implication);
};

struct ProofLine {
  Formula formula;
  Justification just;
};

/// Hilbert-style proof: hypotheses, then numbered lines. The last line is the
/// proved formula.
struct Proof {
  std::vector<Formula> hypotheses;
  std::vector<ProofLine> lines;

  const Formula& conclusion() const { return lines.back().formula; }
};

struct CheckResult {
  bool ok = false;
  std::optional<Formula> conclusion;
  std::size_t error_line = 0;  // 1-based; 0 when ok
  std::string reason;
  std::vector<SchemeId> cited;  // lemma schemes used; their own validity is
                                // established separately (verify_registry)
};

/// Validates every line: Hyp lines appear among the hypotheses; Axiom/Lemma
/// lines equal the instantiation of the registered scheme under the stated
/// binding; MP(i,j) needs line j = (line i -> this line) with i,j earlier.
CheckResult check_proof(const Proof& p);

/// Runs is_tautology over a fresh-variable instance of every registered
/// scheme; `failures` lists any scheme that is not a tautology (expected
/// empty).
struct RegistryReport {
  struct Entry {
    SchemeId id;
    Formula instance;
    bool valid;
  };
  std::vector<Entry> entries;
  bool all_valid() const;
};
RegistryReport verify_registry();

class ProofParseError : public std::runtime_error {
 public:
  ProofParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Line-oriented proof text:
///   hyp: <formula>
///   <k>. <formula> ; axiom <ID> [phi:=<formula>, ...]
///   <k>. <formula> ; lemma <ID> [...]
///   <k>. <formula> ; hyp
///   <k>. <formula> ; mp <i>,<j>
std::string proof_to_text(const Proof& p);
Proof proof_from_text(const std::string& text);

}  // namespace luka
