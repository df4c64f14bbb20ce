#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lndt/proof.hpp"
#include "lndt/semantics.hpp"

namespace lndt {

struct CheckResult {
  bool ok = true;
  std::size_t line = 0;  // 0-based index of the offending line
  std::string reason;

  explicit operator bool() const { return ok; }
  std::string message() const;
};

CheckResult check_proof(const Proof& p);

// Oracle pass over every line of a proof. Lines whose support exceeds the cap are
// skipped and counted.
struct SoundnessReport {
  bool ok = true;
  std::size_t line = 0;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::optional<Assignment> countermodel;
};
SoundnessReport check_soundness(const Proof& p, int cap = kDefaultOracleCap);

// Samples random assignments over the proof's whole support instead of sweeping.
SoundnessReport check_soundness_sampled(const Proof& p, std::size_t samples, std::uint64_t seed);

}  // namespace lndt
