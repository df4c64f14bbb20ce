#pragma once

#include <optional>
#include <stdexcept>

#include "lndt/builder.hpp"
#include "lndt/semantics.hpp"

namespace lndt {

struct SearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  // eLNDT mode: decisions (general or positive) are decomposed with pL/pR.
  bool general = false;
  int cap = kDefaultOracleCap;
  std::size_t max_lines = 1000000;
  // Before decomposing, drop formulas the sequent remains valid without (checked by
  // the oracle) and weaken them back in afterwards.
  bool trim = true;
};

struct SearchResult {
  std::optional<Proof> proof;
  std::optional<Assignment> countermodel;
};

// Cut-free bottom-up search; extension variables are unwound through extension-axiom
// cuts once a sequent is otherwise atomic.
SearchResult prove_by_search(const Sequent& s, const ExtAxiomSet& ax, const SearchOptions& opt = {});

// Same search emitting into an existing builder; the caller guarantees validity.
LineId search_into(ProofBuilder& b, const Sequent& s, const SearchOptions& opt = {});

}  // namespace lndt
