#pragma once

#include <string>
#include <vector>

#include "luka/proof.hpp"

namespace luka {

/// Appends checker-ready lines; every combinator computes the produced
/// formula from the scheme registry or the cited lines, so a bug surfaces as
/// a check_proof failure rather than a silently wrong fixture.
class ProofBuilder {
 public:
  explicit ProofBuilder(std::vector<Formula> hypotheses);

  std::size_t hyp(const Formula& f);
  std::size_t ax(SchemeId id, const Binding& b);
  std::size_t lem(SchemeId id, const Binding& b);
  std::size_t mp(std::size_t premise, std::size_t implication);

  // A<->B stored as (A->B)&(B->A); projections cost one lemma line + one MP.
  std::size_t iff_left(std::size_t iff_line);   // yields A->B
  std::size_t iff_right(std::size_t iff_line);  // yields B->A
  std::size_t compose(std::size_t ab, std::size_t bc);   // A->B, B->C  =>  A->C
  std::size_t conj_intro(std::size_t x, std::size_t y);  // X, Y  =>  X & Y
  // W->(Y->Z) together with Y  =>  W->Z (residuation shuffle through A5/A3)
  std::size_t apply_under(std::size_t wyz, std::size_t y);
  std::size_t neg_cong(std::size_t iff_line);  // A<->B  =>  !A<->!B

  const Formula& at(std::size_t k) const { return proof_.lines.at(k - 1).formula; }
  std::size_t size() const { return proof_.lines.size(); }
  Proof take() { return std::move(proof_); }

 private:
  std::size_t push(Formula f, Justification j);
  Proof proof_;
};

/// Proof of the left-associated strong conjunction of gamma from gamma,
/// iterating the two-hypothesis template. Throws std::invalid_argument on an
/// empty list.
Proof derive_conjunction(const std::vector<Formula>& gamma);

/// Proof of (a->b) -> (!b->!a) from no hypotheses.
Proof contraposition_step(const Formula& a, const Formula& b);

struct NamedProof {
  std::string name;
  std::string description;
  Proof proof;
};

/// The bundled derivations at two hypotheses: the conjunction derivation, the
/// membership chain ending in a negated conjunction, the power-membership
/// chain, the consistent-extension chain, and the case-3 chain.
std::vector<NamedProof> fixture_suite();

}  // namespace luka
