#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lndt/proof.hpp"

namespace lndt {

struct BuildError : std::logic_error {
  using std::logic_error::logic_error;
};

using LineId = std::uint32_t;

// Both directions of an equivalence A == B: fwd proves A |- B, bwd proves B |- A.
struct Equiv {
  LineId fwd = 0;
  LineId bwd = 0;
};

// Incremental dag-like proof construction. Lines are deduplicated by the multiset
// pair they conclude, so a lemma requested twice is proved once.
class ProofBuilder {
 public:
  explicit ProofBuilder(Dialect d = Dialect::plus());

  Proof& proof() { return proof_; }
  const Proof& proof() const { return proof_; }
  ExtAxiomSet& axioms() { return proof_.axioms; }
  const Dialect& dialect() const { return proof_.dialect; }
  void set_dedup(bool on) { dedup_ = on; }
  bool dedup() const { return dedup_; }
  std::size_t size() const { return proof_.lines.size(); }
  const Sequent& seq(LineId l) const { return proof_.lines.at(l).seq; }

  std::optional<LineId> find(const Sequent& s) const;

  // Appends a line verbatim (after dedup). No local check is performed.
  LineId add(Sequent s, Justification j);

  LineId ax0();
  LineId ax1();
  LineId id(Literal p);
  LineId neg_l(Var p);
  LineId neg_r(Var p);
  LineId thr_l(std::uint32_t i);
  LineId thr_r(std::uint32_t i);
  LineId ext_lr(const ExtVar* e);
  LineId ext_rl(const ExtVar* e);
  LineId hyp(const std::string& tag, const Sequent& s);

  LineId wl(LineId l, Formula a);
  LineId wr(LineId l, Formula a);
  LineId cl(LineId l, Formula a);
  LineId cr(LineId l, Formula a);

  // Context-merging rules: premise contexts are joined (maximum multiplicity) and
  // each premise is weakened or contracted to fit before the rule is applied.
  LineId cut(LineId l1, LineId l2, Formula a);
  LineId or_l(LineId l1, LineId l2, Formula d);
  LineId or_r(LineId l, Formula d);
  LineId pos_pl(LineId l1, LineId l2, Formula d);
  LineId pos_pr(LineId l1, LineId l2, Formula d);
  LineId pl(LineId l1, LineId l2, Formula d);
  LineId pr(LineId l1, LineId l2, Formula d);

  // Weakens and contracts a line to conclude exactly `target`.
  LineId adapt(LineId l, const Sequent& target);
  bool can_adapt(LineId l, const Sequent& target) const;
  // Re-emits the conclusion of l with the stored order of `target` (a permutation).
  LineId set_display_order(LineId l, const Sequent& target);

  // Chains A |- B and B |- C into A |- C.
  LineId chain(LineId ab, LineId bc, Formula b) { return cut(ab, bc, b); }
  Equiv compose(const Equiv& ab, const Equiv& bc, Formula b);

  Proof take();

 private:
  LineId emit(Sequent s, Justification j);
  LineId rule2(Rule r, LineId l1, LineId l2, Formula d, const Sequent& prem1, const Sequent& prem2,
               const Sequent& concl);

  Proof proof_;
  bool dedup_ = true;
  std::unordered_map<SeqKey, LineId, SeqKeyHash> index_;
};

// Multiset helpers on formula lists (stored order is kept where possible).
std::vector<Formula> ms_minus(const std::vector<Formula>& a, std::initializer_list<Formula> remove);
std::vector<Formula> ms_plus(const std::vector<Formula>& a, std::initializer_list<Formula> add);
std::vector<Formula> ms_union(const std::vector<Formula>& a, const std::vector<Formula>& b);

}  // namespace lndt
