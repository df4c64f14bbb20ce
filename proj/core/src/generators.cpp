#include "lndt/generators.hpp"

namespace lndt {

Proof finish_proof(ProofBuilder& b, LineId root, const Sequent* order) {
  if (order) b.set_display_order(root, *order);
  Proof p = prune(b.proof(), root);
  p.intermediate = p.hypotheses.empty() && !ext_free(p.conclusion());
  return p;
}

namespace {

template <std::size_t N>
std::array<Proof, N> finish_all(ProofBuilder& b, const std::array<LineId, N>& roots) {
  std::array<Proof, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = finish_proof(b, roots[i]);
  return out;
}

ProofBuilder with_axioms(const ExtAxiomSet& ax, Dialect d = Dialect::plus()) {
  ProofBuilder b(std::move(d));
  b.axioms().merge(ax);
  return b;
}

}  // namespace

Proof gen_identity(Formula a, const ExtAxiomSet& ax) {
  ProofBuilder b = with_axioms(ax);
  Lemmas lm(b, true);
  return finish_proof(b, lm.identity(a));
}

std::array<Proof, 4> gen_truth(Formula a, Literal p, Formula bf, const ExtAxiomSet& ax) {
  ProofBuilder b = with_axioms(ax, p.negative ? Dialect::plus_minus() : Dialect::plus());
  Lemmas lm(b, true);
  return finish_all<4>(b, {lm.truth(1, a, p, bf), lm.truth(2, a, p, bf), lm.truth(3, a, p, bf), lm.truth(4, a, p, bf)});
}

Proof gen_replacement(const std::vector<Formula>& gamma, const std::vector<Formula>& delta, Formula a, Formula a2,
                      Formula bf, Formula b2, Literal p) {
  ProofBuilder b;
  Lemmas lm(b);
  Sequent s1{ms_plus(gamma, {a}), ms_plus(delta, {a2})};
  Sequent s2{ms_plus(gamma, {bf}), ms_plus(delta, {b2})};
  Formula d = mk_pdec(a, p, bf), d2 = mk_pdec(a2, p, b2);
  LineId l = lm.replacement(b.hyp("h1", s1), b.hyp("h2", s2), d, d2);
  l = b.adapt(l, {ms_plus(gamma, {d}), ms_plus(delta, {d2})});
  return finish_proof(b, l);
}

std::array<Proof, 2> gen_pos_medial(Formula a, Formula bf, Formula c, Formula d, Literal p, Literal q) {
  ProofBuilder b;
  Lemmas lm(b);
  Equiv e = lm.medial(a, bf, c, d, p, q);
  return finish_all<2>(b, {e.fwd, e.bwd});
}

std::array<Proof, 3> gen_thr_monotone(const Word& w, int k) {
  ProofBuilder b;
  Lemmas lm(b);
  int big = std::max(k, static_cast<int>(w.size()) + 1);
  return finish_all<3>(b, {lm.thr_true(w), lm.thr_step(w, k), lm.thr_false(w, big)});
}

std::array<Proof, 2> gen_case_analysis(const Word& pv, Var q, const Word& qv, int k) {
  ProofBuilder b;
  Lemmas lm(b);
  Equiv e = lm.case_analysis(pv, q, qv, k);
  return finish_all<2>(b, {e.fwd, e.bwd});
}

std::array<Proof, 2> gen_symmetry(const Word& w, const Word& target, int k) {
  ProofBuilder b;
  Lemmas lm(b);
  Equiv e = lm.symmetry(w, target, k);
  return finish_all<2>(b, {e.fwd, e.bwd});
}

Proof gen_merge(const Word& pv, const Word& qv, int k, int l) {
  ProofBuilder b;
  Lemmas lm(b);
  return finish_proof(b, lm.merge(pv, qv, k, l));
}

Proof gen_split(const Word& pv, const Word& qv, int k, int l) {
  ProofBuilder b;
  Lemmas lm(b);
  return finish_proof(b, lm.split(pv, qv, k, l));
}

std::array<Proof, 3> gen_unit_thr(const Word& qs, std::size_t j) {
  ProofBuilder b;
  Lemmas lm(b);
  Equiv e = lm.unit(qs.at(j));
  return finish_all<3>(b, {e.fwd, e.bwd, lm.unit_in(qs, j)});
}

std::array<Proof, 2> gen_thresh_increment(const Word& w, std::size_t i, int k) {
  ProofBuilder b;
  Lemmas lm(b);
  return finish_all<2>(b, {lm.increment_left(w, i, k), lm.increment_right(w, i, k)});
}

Proof gen_two_in_hole(const Word& qs) {
  ProofBuilder b;
  Lemmas lm(b);
  return finish_proof(b, lm.two_in_hole(qs));
}

std::array<Proof, 4> gen_refthr_truth(const Word& w, int k, Formula a, Formula bf) {
  Dialect d = a.has_neg() || bf.has_neg() ? Dialect::plus_minus() : Dialect::plus();
  ProofBuilder b(d);
  Lemmas lm(b);
  return finish_all<4>(b, {lm.refthr_truth(1, w, k, a, bf), lm.refthr_truth(2, w, k, a, bf),
                           lm.refthr_truth(3, w, k, a, bf), lm.refthr_truth(4, w, k, a, bf)});
}

std::array<Proof, 4> gen_negtrans_truth(Formula na, Var p, Formula nb) {
  ProofBuilder b(Dialect::plus_minus());
  Lemmas lm(b);
  return finish_all<4>(b, {lm.negtrans_truth(1, na, p, nb), lm.negtrans_truth(2, na, p, nb),
                           lm.negtrans_truth(3, na, p, nb), lm.negtrans_truth(4, na, p, nb)});
}

}  // namespace lndt
