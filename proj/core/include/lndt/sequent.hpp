#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lndt/formula.hpp"

namespace lndt {

// Multiset pair. Stored order is presentation only; all comparisons are up to permutation.
struct Sequent {
  std::vector<Formula> ant;
  std::vector<Formula> suc;
};

std::string to_string(const Sequent& s);
std::uint64_t sequent_tokens(const Sequent& s);
bool same_multiset(const std::vector<Formula>& a, const std::vector<Formula>& b);
bool same_sequent(const Sequent& a, const Sequent& b);
bool ext_free(const Sequent& s);

// Canonical form used for hashing: sorted node ids of both cedents.
struct SeqKey {
  std::vector<std::uint32_t> ids;
  std::uint32_t nant = 0;
  friend bool operator==(const SeqKey&, const SeqKey&) = default;
};
struct SeqKeyHash {
  std::size_t operator()(const SeqKey& k) const;
};
SeqKey seq_key(const Sequent& s);

}  // namespace lndt
