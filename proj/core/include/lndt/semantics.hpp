#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lndt/axioms.hpp"
#include "lndt/formula.hpp"
#include "lndt/sequent.hpp"

namespace lndt {

inline constexpr int kDefaultOracleCap = 16;
inline constexpr int kMaxOracleCap = 24;

// Finite support; variables outside it are 0.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const Var, bool>> init) : m_(init) {}
  bool operator()(Var v) const {
    auto it = m_.find(v);
    return it != m_.end() && it->second;
  }
  void set(Var v, bool b) { m_[v] = b; }
  const std::map<Var, bool>& values() const { return m_; }
  std::string to_string() const;
  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<Var, bool> m_;
};

struct OracleCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool eval(Formula f, const ExtAxiomSet& ax, const Assignment& alpha);

// Evaluates with memoisation per extension variable; `trace` records the order in
// which extension-variable bodies were consulted.
class Evaluator {
 public:
  Evaluator(const ExtAxiomSet& ax, const Assignment& alpha) : ax_(ax), alpha_(alpha) {}
  bool operator()(Formula f);
  std::vector<const ExtVar*> trace;

 private:
  const ExtAxiomSet& ax_;
  const Assignment& alpha_;
  std::unordered_map<const ExtVar*, bool> memo_;
};

class TruthTable {
 public:
  TruthTable() = default;
  explicit TruthTable(Word vars);
  TruthTable(Word vars, std::vector<std::uint64_t> bits);

  const Word& vars() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  std::uint64_t size() const { return std::uint64_t{1} << vars_.size(); }
  bool get(std::uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i, bool b);
  const std::vector<std::uint64_t>& bits() const { return bits_; }
  std::uint64_t popcount() const;
  // i-th assignment in lexicographic order (vars[0] most significant).
  Assignment assignment(std::uint64_t i) const;
  std::string to_bitstring() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  Word vars_;
  std::vector<std::uint64_t> bits_;
};

// Bit-parallel evaluation over all 2^n assignments of a fixed variable list.
class TableEvaluator {
 public:
  using Bits = std::vector<std::uint64_t>;
  TableEvaluator(const ExtAxiomSet& ax, Word vars, int cap = kDefaultOracleCap);
  const Bits& operator()(Formula f);
  TruthTable table(Formula f);
  const Word& vars() const { return vars_; }
  std::size_t words() const { return words_; }
  std::uint64_t mask_last() const { return last_mask_; }
  // valid, or the first falsifying assignment
  std::optional<Assignment> countermodel(const Sequent& s);

 private:
  const Bits& var_bits(Literal l);
  const ExtAxiomSet& ax_;
  Word vars_;
  std::size_t words_ = 1;
  std::uint64_t last_mask_ = ~std::uint64_t{0};
  std::unordered_map<Var, std::size_t> index_;
  std::unordered_map<const Node*, Bits> memo_;
  std::unordered_map<const ExtVar*, Bits> ext_memo_;
  std::unordered_map<std::uint64_t, Bits> lit_memo_;
};

// Propositional variables f depends on, following extension bodies; sorted.
Word support(Formula f, const ExtAxiomSet& ax);
Word support(const Sequent& s, const ExtAxiomSet& ax);

TruthTable truth_table(Formula f, const ExtAxiomSet& ax, const Word& vars, int cap = kDefaultOracleCap);
bool is_monotone(const TruthTable& t);
TruthTable monotone_closure(const TruthTable& t);

// nullopt when valid, otherwise a countermodel.
std::optional<Assignment> sequent_valid(const Sequent& s, const ExtAxiomSet& ax, int cap = kDefaultOracleCap);

bool is_positive(Formula f);
Formula desugar(Formula f);

struct SubstitutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
using Substitution = std::unordered_map<Var, Formula>;
// Extension bodies are substituted consistently; substituted plain variables are
// renamed by adding `rename_offset` to their index.
std::pair<Formula, ExtAxiomSet> substitute(Formula f, const Substitution& sigma, const ExtAxiomSet& ax,
                                           std::uint32_t rename_offset = 1000000);
// Extension-free substitution used by proof transformers.
Formula substitute(Formula f, const Substitution& sigma);

Formula posterm(const Word& vars);

// A DNF term is a list of literals; the DNF is the disjunction of its terms.
using DnfTerm = std::vector<Literal>;
using Dnf = std::vector<DnfTerm>;
struct PositiveEncoding {
  Sequent sequent;
  std::map<Var, Var> primed;  // p -> p'
};
PositiveEncoding dnf_to_positive_sequent(const Dnf& dnf);
bool dnf_valid(const Dnf& dnf, int cap = kDefaultOracleCap);

}  // namespace lndt
