#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lndt/proof.hpp"

namespace lndt {

// Random positive formula over vars with at most `depth` nested connectives.
Formula random_positive_formula(std::mt19937_64& rng, const Word& vars, int depth);

// Random valid positive, extension-free sequent over vars.
Sequent random_valid_sequent(std::mt19937_64& rng, const Word& vars, int depth);

// Rewrites a proof into an eLNDT proof with genuine general decisions: selected lines
// are routed through C == dec(C,p,C) detours, half of them via a plain extension
// variable e <-> dec(C,p,C), plus weakening/contraction noise.
Proof depositivise(const Proof& p, std::mt19937_64& rng, int detours);

struct CorpusOptions {
  std::size_t count = 50;
  std::uint64_t seed = 1;
  int max_vars = 6;
  std::uint64_t max_tokens = 2000;
  int depth = 2;
  int detours = 3;
};

struct CorpusEntry {
  Proof proof;  // eLNDT, concludes `sequent`
  Sequent sequent;
  int vars = 0;
};

std::vector<CorpusEntry> make_corpus(const CorpusOptions& opt);

}  // namespace lndt
