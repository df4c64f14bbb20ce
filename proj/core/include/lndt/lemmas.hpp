#pragma once

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "lndt/builder.hpp"
#include "lndt/semantics.hpp"

namespace lndt {

struct LemmaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Generators for the basic positive lemmas and the counting lemmas over threshold
// variables. All lemmas are emitted into one builder and memoised by their parameters,
// so every instance is proved once and shared by later lines.
class Lemmas {
 public:
  // With faithful_identity, e |- e unfolds the body of e recursively instead of
  // cutting the two extension axioms against each other.
  explicit Lemmas(ProofBuilder& b, bool faithful_identity = false);

  ProofBuilder& builder() { return b_; }

  LineId identity(Formula a);

  // item 1: pdec(a,p,b) |- a, p    item 2: pdec(a,p,b) |- a, b
  // item 3: a |- pdec(a,p,b)       item 4: p, b |- pdec(a,p,b)
  LineId truth(int item, Formula a, Literal p, Formula b);

  // From G, A |- D, A' and G, B |- D, B' derives G, d |- D, d2 for d = pdec(A,p,B),
  // d2 = pdec(A',p,B').
  LineId replacement(LineId h1, LineId h2, Formula d, Formula d2);
  Equiv replace_equiv(const Equiv& a, const Equiv& b, Formula d, Formula d2);

  Equiv unfold(const ExtVar* e);  // e == body
  Equiv refl(Formula a);
  static Equiv reverse(const Equiv& e) { return {e.bwd, e.fwd}; }

  // pdec(pdec(a,q,b),p,pdec(c,q,d)) == pdec(pdec(a,p,c),q,pdec(b,p,d))
  Equiv medial(Formula a, Formula b, Formula c, Formula d, Literal p, Literal q);
  LineId medial(Formula a, Formula b, Formula c, Formula d, Literal p, Literal q, bool forward);

  LineId thr_true(const Word& w);               // |- thr^w_0
  LineId thr_step(const Word& w, int k);        // thr^w_{k+1} |- thr^w_k, k >= 0
  LineId thr_false(const Word& w, int k);       // thr^w_k |- , k > |w|
  LineId thr_down(const Word& w, int from, int to);  // thr^w_from |- thr^w_to, from >= to >= 0

  // thr^{pv q qv}_k == thr^{q pv qv}_k
  Equiv case_analysis(const Word& pv, Var q, const Word& qv, int k);
  // One direction only; each direction depends only on the same direction below.
  LineId case_analysis(const Word& pv, Var q, const Word& qv, int k, bool forward);
  // thr^w_k == thr^target_k for a permutation target of w
  Equiv symmetry(const Word& w, const Word& target, int k);
  LineId symmetry(const Word& w, const Word& target, int k, bool forward);

  LineId merge(const Word& pv, const Word& qv, int k, int l);  // thr^pv_k, thr^qv_l |- thr^{pv qv}_{k+l}
  LineId split(const Word& pv, const Word& qv, int k, int l);  // thr^{pv qv}_{k+l} |- thr^pv_{k+1}, thr^qv_l

  Equiv unit(Var q);                                // q == thr^q_1
  LineId unit_in(const Word& qs, std::size_t j);    // q_j |- thr^qs_1
  LineId increment_left(const Word& w, std::size_t i, int k);   // p_i, thr^{w\i}_k |- thr^w_{k+1}
  LineId increment_right(const Word& w, std::size_t i, int k);  // thr^w_k |- p_i, thr^{w\i}_k

  LineId thr1_split(const Word& qs);                // thr^qs_1 |- or_fold(thr^{q_i}_1)
  LineId xthr(Var q, const Word& qs);               // q, thr^qs_1 |- {pdec(0,q,q_i)}
  LineId two_in_hole(const Word& qs);               // thr^qs_2 |- {pdec(0,q_i,q_j)}_{i<j}

  // item 1: R |- A, T   item 2: R |- A, B   item 3: A |- R   item 4: T, B |- R
  // with R = refthr^w_k[A,B] and T = thr^w_k.
  LineId refthr_truth(int item, const Word& w, int k, Formula a, Formula b);

  // Truth items for nd = or(pdec(0,~p,na), pdec(0,p,nb)):
  // item 1: nd |- na, p   item 2: nd, p |- nb   item 3: na |- nd, p   item 4: p, nb |- nd
  LineId negtrans_truth(int item, Formula na, Var p, Formula nb);

  // Re-emits a proof under a substitution of formulas for propositional variables.
  LineId substitute_proof(const Proof& src, const Substitution& sigma);

 private:
  using Key = std::tuple<int, Word, Word, int, int, std::uint32_t, std::uint32_t>;
  template <class F>
  LineId memo(const Key& k, F&& make);
  template <class F>
  Equiv memo_equiv(const Key& k, F&& make);

  ProofBuilder& b_;
  bool faithful_;
  std::map<Key, LineId> lines_;
  std::map<Key, Equiv> equivs_;
};

Word without(const Word& w, std::size_t i);
Word concat(const Word& a, const Word& b);

}  // namespace lndt
