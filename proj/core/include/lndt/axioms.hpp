#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lndt/formula.hpp"

namespace lndt {

struct AxiomEntry {
  const ExtVar* var = nullptr;
  Formula body;
  int stage = 0;  // 1 + max stage of the variables in the body
};

// Ordered family e <-> A. Entry order is the well-foundedness witness: a body may
// only mention variables of strictly earlier entries.
class ExtAxiomSet {
 public:
  bool defines(const ExtVar* v) const { return pos_.count(v) != 0; }
  Formula body(const ExtVar* v) const;
  std::size_t position(const ExtVar* v) const;
  int stage(const ExtVar* v) const { return entries_[position(v)].stage; }
  const std::vector<AxiomEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Appends an entry. Redefinition with the same body is a no-op, otherwise an error.
  void define(const ExtVar* v, Formula body);
  // Raw append used by file loading; no checks beyond duplicate detection.
  void append_unchecked(const ExtVar* v, Formula body);

  // Instantiates family-keyed variables (exact, thr, refthr) together with their
  // whole descendant cone. Plain variables must already be defined.
  void ensure(const ExtVar* v);
  void ensure_in(Formula f);

  // Appends every entry of other not yet present, in other's order.
  void merge(const ExtAxiomSet& other);

 private:
  std::vector<AxiomEntry> entries_;
  std::unordered_map<const ExtVar*, std::size_t> pos_;
  std::unordered_set<const Node*> covered_;
  bool duplicate_ = false;
};

// Canonical body of a family variable; throws for plain variables.
Formula family_body(const ExtVar* v);

struct AxiomCheck {
  bool ok = true;
  std::size_t entry = 0;
  std::string var;
  std::string message;
};

// With strict_indices, plain variables eN must additionally reference only smaller N.
AxiomCheck check_axiom_set(const ExtAxiomSet& ax, bool strict_indices = false);

ExtAxiomSet instantiate_exact(const Word& word, int k);
ExtAxiomSet instantiate_thr(const Word& word, int k);
ExtAxiomSet instantiate_refthr(const Word& word, int k, Formula a, Formula b);

// Distinct extension variables occurring in f (not descending into bodies), in
// first-occurrence order.
std::vector<const ExtVar*> ext_vars_in(Formula f);
// Distinct propositional variables occurring in f, including through refthr parameters.
std::vector<Var> vars_in(Formula f);

ExtAxiomSet parse_axiom_file(const std::string& text);
std::string axiom_file_string(const ExtAxiomSet& ax);

}  // namespace lndt
