#pragma once

#include <array>
#include <vector>

#include "lndt/lemmas.hpp"

namespace lndt {

// Standalone proofs of the basic lemmas. Each result is pruned to the lines its
// conclusion depends on; results mentioning extension variables in the conclusion
// are flagged intermediate.

Proof finish_proof(ProofBuilder& b, LineId root, const Sequent* order = nullptr);

Proof gen_identity(Formula a, const ExtAxiomSet& ax = {});
std::array<Proof, 4> gen_truth(Formula a, Literal p, Formula b, const ExtAxiomSet& ax = {});
// Derivation from the hypotheses h1: G, A |- D, A' and h2: G, B |- D, B'.
Proof gen_replacement(const std::vector<Formula>& gamma, const std::vector<Formula>& delta, Formula a, Formula a2,
                      Formula b, Formula b2, Literal p);
std::array<Proof, 2> gen_pos_medial(Formula a, Formula b, Formula c, Formula d, Literal p, Literal q);

// |- thr^w_0, thr^w_{k+1} |- thr^w_k, and thr^w_{max(k,|w|+1)} |-
std::array<Proof, 3> gen_thr_monotone(const Word& w, int k);
std::array<Proof, 2> gen_case_analysis(const Word& pv, Var q, const Word& qv, int k);
std::array<Proof, 2> gen_symmetry(const Word& w, const Word& target, int k);
Proof gen_merge(const Word& pv, const Word& qv, int k, int l);
Proof gen_split(const Word& pv, const Word& qv, int k, int l);
// q_j == thr^{q_j}_1 (two proofs) and q_j |- thr^qs_1
std::array<Proof, 3> gen_unit_thr(const Word& qs, std::size_t j);
std::array<Proof, 2> gen_thresh_increment(const Word& w, std::size_t i, int k);
Proof gen_two_in_hole(const Word& qs);
std::array<Proof, 4> gen_refthr_truth(const Word& w, int k, Formula a, Formula b);
std::array<Proof, 4> gen_negtrans_truth(Formula na, Var p, Formula nb);

}  // namespace lndt
