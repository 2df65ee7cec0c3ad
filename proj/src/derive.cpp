#include "luka/derive.hpp"

#include <stdexcept>

namespace luka {

namespace {

Formula instance_of(SchemeId id, const Binding& b) {
  return instantiate(scheme_info(id).pattern, b);
}

void expect(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("proof builder misuse: ") + what);
}

// components of a stored equivalence (A->B)&(B->A)
std::pair<Formula, Formula> iff_parts(const Formula& f) {
  expect(f.kind() == Formula::Kind::And && f.left().kind() == Formula::Kind::Implies &&
             f.right().kind() == Formula::Kind::Implies,
         "line is not an equivalence");
  return {f.left().left(), f.left().right()};
}

}  // namespace

ProofBuilder::ProofBuilder(std::vector<Formula> hypotheses) {
  proof_.hypotheses = std::move(hypotheses);
}

std::size_t ProofBuilder::push(Formula f, Justification j) {
  proof_.lines.push_back({std::move(f), std::move(j)});
  return proof_.lines.size();
}

std::size_t ProofBuilder::hyp(const Formula& f) {
  return push(f, Justification::hyp());
}

std::size_t ProofBuilder::ax(SchemeId id, const Binding& b) {
  return push(instance_of(id, b), Justification::axiom(id, b));
}

std::size_t ProofBuilder::lem(SchemeId id, const Binding& b) {
  return push(instance_of(id, b), Justification::lemma(id, b));
}

std::size_t ProofBuilder::mp(std::size_t premise, std::size_t implication) {
  const Formula& impl = at(implication);
  expect(impl.kind() == Formula::Kind::Implies, "mp on a non-implication");
  expect(impl.left() == at(premise), "mp premise mismatch");
  return push(impl.right(), Justification::mp(premise, implication));
}

std::size_t ProofBuilder::iff_left(std::size_t iff_line) {
  const auto [a, b] = iff_parts(at(iff_line));
  const std::size_t t = lem(SchemeId::IffElimL, {{"phi", a}, {"psi", b}});
  return mp(iff_line, t);
}

std::size_t ProofBuilder::iff_right(std::size_t iff_line) {
  const auto [a, b] = iff_parts(at(iff_line));
  const std::size_t t = lem(SchemeId::IffElimR, {{"phi", a}, {"psi", b}});
  return mp(iff_line, t);
}

std::size_t ProofBuilder::compose(std::size_t ab, std::size_t bc) {
  const Formula& f = at(ab);
  const Formula& g = at(bc);
  expect(f.kind() == Formula::Kind::Implies && g.kind() == Formula::Kind::Implies &&
             f.right() == g.left(),
         "compose needs chained implications");
  const std::size_t t =
      ax(SchemeId::A1, {{"phi", f.left()}, {"psi", f.right()}, {"chi", g.right()}});
  return mp(bc, mp(ab, t));
}

std::size_t ProofBuilder::conj_intro(std::size_t x, std::size_t y) {
  const Formula X = at(x);
  const Formula Y = at(y);
  const std::size_t a3 = ax(SchemeId::A3, {{"phi", Y}, {"psi", X}});
  const std::size_t a5 =
      ax(SchemeId::A5, {{"phi", Y}, {"psi", X}, {"chi", Formula::conj(X, Y)}});
  const std::size_t dir = mp(a3, iff_right(a5));  // Y -> (X -> (X & Y))
  return mp(x, mp(y, dir));
}

std::size_t ProofBuilder::apply_under(std::size_t wyz, std::size_t y) {
  const Formula& f = at(wyz);
  expect(f.kind() == Formula::Kind::Implies &&
             f.right().kind() == Formula::Kind::Implies,
         "apply_under needs W->(Y->Z)");
  const Formula W = f.left();
  const Formula Y = f.right().left();
  const Formula Z = f.right().right();
  expect(at(y) == Y, "apply_under premise mismatch");
  const std::size_t a5a = ax(SchemeId::A5, {{"phi", W}, {"psi", Y}, {"chi", Z}});
  const std::size_t f1 = mp(wyz, iff_left(a5a));  // (W & Y) -> Z
  const std::size_t a3 = ax(SchemeId::A3, {{"phi", Y}, {"psi", W}});
  const std::size_t f2 = compose(a3, f1);  // (Y & W) -> Z
  const std::size_t a5b = ax(SchemeId::A5, {{"phi", Y}, {"psi", W}, {"chi", Z}});
  const std::size_t f3 = mp(f2, iff_right(a5b));  // Y -> (W -> Z)
  return mp(y, f3);
}

std::size_t ProofBuilder::neg_cong(std::size_t iff_line) {
  const auto [a, b] = iff_parts(at(iff_line));
  const Formula bot = Formula::bottom();
  const std::size_t l13 = lem(SchemeId::L13, {{"phi", a}, {"psi", b}, {"chi", bot}});
  const std::size_t i = mp(iff_line, l13);  // (A->0) <-> (B->0)
  const std::size_t i1 = iff_left(i);
  const std::size_t i2 = iff_right(i);
  const std::size_t l9a = lem(SchemeId::L9, {{"phi", a}});  // (A->0) <-> !A
  const std::size_t ja1 = iff_left(l9a);
  const std::size_t ja2 = iff_right(l9a);
  const std::size_t l9b = lem(SchemeId::L9, {{"phi", b}});
  const std::size_t jb1 = iff_left(l9b);
  const std::size_t jb2 = iff_right(l9b);
  const std::size_t ab = compose(compose(ja2, i1), jb1);  // !A -> !B
  const std::size_t ba = compose(compose(jb2, i2), ja1);  // !B -> !A
  return conj_intro(ab, ba);
}

Proof derive_conjunction(const std::vector<Formula>& gamma) {
  if (gamma.empty()) throw std::invalid_argument("derive_conjunction of an empty set");
  ProofBuilder pb(gamma);
  std::size_t acc = pb.hyp(gamma[0]);
  for (std::size_t k = 1; k < gamma.size(); ++k) {
    const Formula A = pb.at(acc);
    const Formula& F = gamma[k];
    const std::size_t a3 = pb.ax(SchemeId::A3, {{"phi", F}, {"psi", A}});
    const std::size_t a5 =
        pb.ax(SchemeId::A5, {{"phi", F}, {"psi", A}, {"chi", Formula::conj(A, F)}});
    const std::size_t dir = pb.mp(a3, pb.iff_right(a5));  // F -> (A -> (A & F))
    const std::size_t hf = pb.hyp(F);
    acc = pb.mp(acc, pb.mp(hf, dir));
  }
  return pb.take();
}

Proof contraposition_step(const Formula& a, const Formula& b) {
  const Formula nna = Formula::neg(Formula::neg(a));
  const Formula nnb = Formula::neg(Formula::neg(b));
  ProofBuilder pb({});
  const std::size_t dne = pb.ax(SchemeId::DNE, {{"phi", a}});  // !!a -> a
  const std::size_t a1 = pb.ax(SchemeId::A1, {{"phi", nna}, {"psi", a}, {"chi", b}});
  const std::size_t s1 = pb.mp(dne, a1);  // (a->b) -> (!!a->b)
  const std::size_t intro = pb.iff_right(pb.lem(SchemeId::L8, {{"phi", b}}));  // b -> !!b
  const std::size_t a1b = pb.ax(SchemeId::A1, {{"phi", nna}, {"psi", b}, {"chi", nnb}});
  const std::size_t s2 = pb.compose(s1, a1b);  // (a->b) -> ((b->!!b) -> (!!a->!!b))
  const std::size_t s3 = pb.apply_under(s2, intro);  // (a->b) -> (!!a->!!b)
  const std::size_t l3 =
      pb.ax(SchemeId::L3, {{"phi", Formula::neg(a)}, {"psi", Formula::neg(b)}});
  pb.compose(s3, l3);  // (a->b) -> (!b->!a)
  return pb.take();
}

namespace {

// From the line !((g1 & g2) & t), derives !(!g1 (+) !g2) -> !t; the
// disjunctive normal step of the membership/power/extension chains.
std::size_t disjunction_stage(ProofBuilder& pb, std::size_t hyp_line, const Formula& g1,
                              const Formula& g2, const Formula& t) {
  const Formula g12 = Formula::conj(g1, g2);
  const Formula nt = Formula::neg(t);
  const std::size_t l5a = pb.lem(SchemeId::L5, {{"phi", g12}, {"psi", t}});
  const std::size_t q1 = pb.mp(hyp_line, pb.iff_left(l5a));  // !!(g1&g2) -> !t
  const std::size_t l5b = pb.lem(SchemeId::L5, {{"phi", g1}, {"psi", g2}});
  const std::size_t nc = pb.neg_cong(l5b);  // !!(g1&g2) <-> !(!g1 (+) !g2)
  const auto [lhs, rhs] = std::pair(Formula::neg(Formula::neg(g12)),
                                    Formula::neg(Formula::strong_or(Formula::neg(g1),
                                                                    Formula::neg(g2))));
  const std::size_t l13 =
      pb.lem(SchemeId::L13, {{"phi", lhs}, {"psi", rhs}, {"chi", nt}});
  const std::size_t m = pb.mp(nc, l13);
  return pb.mp(q1, pb.iff_left(m));  // !(!g1 (+) !g2) -> !t
}

// From the line !(!g1 (+) !g2) -> T, derives (g1 & g2) -> T.
std::size_t conjunction_stage(ProofBuilder& pb, std::size_t line, const Formula& g1,
                              const Formula& g2, const Formula& target) {
  const Formula c = Formula::neg(
      Formula::strong_or(Formula::neg(g1), Formula::neg(g2)));
  const Formula dn = Formula::conj(Formula::neg(Formula::neg(g1)),
                                   Formula::neg(Formula::neg(g2)));
  const std::size_t l6 =
      pb.lem(SchemeId::L6, {{"phi", Formula::neg(g1)}, {"psi", Formula::neg(g2)}});
  const std::size_t l13 = pb.lem(SchemeId::L13, {{"phi", c}, {"psi", dn}, {"chi", target}});
  const std::size_t m = pb.mp(l6, l13);
  const std::size_t q = pb.mp(line, pb.iff_left(m));  // (!!g1 & !!g2) -> T
  const std::size_t da = pb.iff_right(pb.lem(SchemeId::L8, {{"phi", g1}}));
  const std::size_t db = pb.iff_right(pb.lem(SchemeId::L8, {{"phi", g2}}));
  const std::size_t cj = pb.conj_intro(da, db);
  const std::size_t l11 = pb.lem(SchemeId::L11, {{"phi1", g1},
                                                 {"psi1", Formula::neg(Formula::neg(g1))},
                                                 {"phi2", g2},
                                                 {"psi2", Formula::neg(Formula::neg(g2))}});
  const std::size_t li = pb.mp(cj, l11);  // (g1&g2) -> (!!g1 & !!g2)
  return pb.compose(li, q);
}

Proof membership_chain() {
  // hypotheses: !((a & b) & f) and f; conclusion !(a & b)
  const Formula a = Formula::prop("a");
  const Formula b = Formula::prop("b");
  const Formula f = Formula::prop("f");
  const Formula nf = Formula::neg(f);
  const Formula bot = Formula::bottom();
  const Formula c = Formula::neg(Formula::strong_or(Formula::neg(a), Formula::neg(b)));

  ProofBuilder pb({Formula::neg(Formula::conj(Formula::conj(a, b), f)), f});
  const std::size_t h1 = pb.hyp(Formula::neg(Formula::conj(Formula::conj(a, b), f)));
  const std::size_t q2 = disjunction_stage(pb, h1, a, b, f);  // !(!a (+) !b) -> !f

  // from the second hypothesis: !f <-> 0
  const std::size_t h2 = pb.hyp(f);
  const std::size_t nn = pb.mp(h2, pb.iff_right(pb.lem(SchemeId::L8, {{"phi", f}})));
  const std::size_t l9 = pb.lem(SchemeId::L9, {{"phi", nf}});  // (!f->0) <-> !!f
  const std::size_t t1 = pb.mp(nn, pb.iff_right(l9));          // !f -> 0
  const std::size_t a7 = pb.ax(SchemeId::A7, {{"phi", nf}});   // 0 -> !f
  const std::size_t iffb = pb.conj_intro(t1, a7);              // !f <-> 0

  const std::size_t l14 = pb.lem(SchemeId::L14, {{"phi", nf}, {"psi", bot}, {"chi", c}});
  const std::size_t m = pb.mp(iffb, l14);
  const std::size_t q4 = pb.mp(q2, pb.iff_left(m));  // !(!a (+) !b) -> 0
  const std::size_t q6 = conjunction_stage(pb, q4, a, b, bot);  // (a & b) -> 0
  const std::size_t l9ab = pb.lem(SchemeId::L9, {{"phi", Formula::conj(a, b)}});
  pb.mp(q6, pb.iff_left(l9ab));  // !(a & b)
  return pb.take();
}

Proof power_chain() {
  // hypothesis: !((a & b) & (f & f)); conclusion (a & b) -> !(f & f)
  const Formula a = Formula::prop("a");
  const Formula b = Formula::prop("b");
  const Formula ff = power(Formula::prop("f"), 2);
  ProofBuilder pb({Formula::neg(Formula::conj(Formula::conj(a, b), ff))});
  const std::size_t h1 = pb.hyp(Formula::neg(Formula::conj(Formula::conj(a, b), ff)));
  const std::size_t q2 = disjunction_stage(pb, h1, a, b, ff);
  conjunction_stage(pb, q2, a, b, Formula::neg(ff));
  return pb.take();
}

Proof extension_chain() {
  // hypothesis: !((a & b) & !g); conclusion (a & b) -> g
  const Formula a = Formula::prop("a");
  const Formula b = Formula::prop("b");
  const Formula g = Formula::prop("g");
  const Formula ng = Formula::neg(g);
  ProofBuilder pb({Formula::neg(Formula::conj(Formula::conj(a, b), ng))});
  const std::size_t h1 = pb.hyp(Formula::neg(Formula::conj(Formula::conj(a, b), ng)));
  const std::size_t q2 = disjunction_stage(pb, h1, a, b, ng);  // !(!a (+) !b) -> !!g
  const std::size_t dne = pb.ax(SchemeId::DNE, {{"phi", g}});
  const std::size_t q3 = pb.compose(q2, dne);  // !(!a (+) !b) -> g
  conjunction_stage(pb, q3, a, b, g);
  return pb.take();
}

Proof case3_chain() {
  // hypothesis: !((a & b) & (x -> y)); conclusion (a & b) -> !(x -> y)
  const Formula a = Formula::prop("a");
  const Formula b = Formula::prop("b");
  const Formula imp = Formula::implies(Formula::prop("x"), Formula::prop("y"));
  ProofBuilder pb({Formula::neg(Formula::conj(Formula::conj(a, b), imp))});
  const std::size_t h1 = pb.hyp(Formula::neg(Formula::conj(Formula::conj(a, b), imp)));
  const std::size_t q2 = disjunction_stage(pb, h1, a, b, imp);
  conjunction_stage(pb, q2, a, b, Formula::neg(imp));
  return pb.take();
}

}  // namespace

std::vector<NamedProof> fixture_suite() {
  std::vector<NamedProof> out;
  out.push_back({"lemma2",
                 "two hypotheses entail their strong conjunction",
                 derive_conjunction({Formula::prop("p"), Formula::prop("q")})});
  out.push_back({"lemma3-ii3",
                 "inconsistency of {a,b,f} plus f yields the negated conjunction",
                 membership_chain()});
  out.push_back({"lemma3-ii4",
                 "inconsistency with a square exports its negation",
                 power_chain()});
  out.push_back({"theorem3-chain",
                 "inconsistency with !g turns into (a & b) -> g",
                 extension_chain()});
  out.push_back({"theorem4-case3",
                 "inconsistency with an implication exports its negation",
                 case3_chain()});
  return out;
}

}  // namespace luka
