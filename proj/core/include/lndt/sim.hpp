#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lndt/proof.hpp"

namespace lndt {

struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Negation translation: Dec(A,p,B) becomes pdec(0,~p,A') or pdec(0,p,B'). Positive
// decisions are read as Dec(A,p,A or B).
Formula negtrans(Formula f);
ExtAxiomSet negtrans_axioms(const ExtAxiomSet& ax);

// eLNDT -> eLNDT+- concluding negtrans(G) |- negtrans(D).
Proof translate_to_minus(const Proof& p);
// Appends A == negtrans(A) for every formula of the positive, extension-free target
// and cuts, giving an eLNDT+- proof of the target itself.
Proof strip_negtrans(const Proof& pm, const Sequent& target);

// Variables p_0..p_{m-1} of a fixed eLNDT+- proof and its axiom set.
struct SimContext {
  Word vars;
  ExtAxiomSet axioms;
  std::uint32_t stride = 1;  // e_i^k is plain variable stride*(k+1) + i

  static SimContext of(const Proof& pm);
  std::size_t index_of(Var v) const;
};

// Threshold substitution for one k. Emits e_i^k and the refthr/thr entries it needs
// into `out` in a well-founded order.
class ThresholdTranslation {
 public:
  ThresholdTranslation(const SimContext& ctx, int k, ExtAxiomSet& out);
  Formula operator()(Formula f);
  const ExtVar* ext(const ExtVar* e) const;

 private:
  const SimContext& ctx_;
  int k_;
  ExtAxiomSet& out_;
  std::unordered_map<const Node*, Formula> memo_;
};

Formula ttrans(Formula f, int k, const SimContext& ctx);

// eLNDT+- -> T_k.
Proof translate_to_Tk(const Proof& pm, int k, const SimContext& ctx);
// T_k proof of G |- D -> eLNDT+ proof of thr^p_k, G |- D, thr^p_{k+1}.
Proof eliminate_Tk(const Proof& pk, int k, const SimContext& ctx);

struct SimStats {
  std::size_t vars = 0;
  std::uint64_t source = 0;
  std::uint64_t minus = 0;
  std::uint64_t stripped = 0;
  std::vector<std::uint64_t> tk;
  std::vector<std::uint64_t> bracketed;
  std::uint64_t output = 0;
};

// eLNDT proof of a positive, extension-free sequent -> eLNDT+ proof of the same sequent.
// The per-k translations run on up to `jobs` threads.
Proof simulate(const Proof& p, SimStats* stats = nullptr, unsigned jobs = 1);

}  // namespace lndt
