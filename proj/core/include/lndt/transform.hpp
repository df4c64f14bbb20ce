#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lndt/builder.hpp"

namespace lndt {

// Hooks for re-emitting a proof line by line into another builder. Every rule is
// re-applied through the builder, so contexts are recomputed and extra side formulas
// introduced by overridden lines propagate downwards automatically.
struct ReplayHooks {
  // Image of a formula; identity when empty.
  std::function<Formula(Formula)> map;
  // Proof of A |- A for the image of an id line; atomic id when empty.
  std::function<LineId(Formula)> identity;
  // Image of an extension variable on an axiom line; identity when empty.
  std::function<const ExtVar*(const ExtVar*)> ext;
  // Full override for a line. Receives the images of the premises.
  std::function<std::optional<LineId>(const ProofLine&, const std::vector<LineId>&)> line;
  // Post-processing of the emitted image of line i.
  std::function<LineId(std::size_t, LineId)> after;
};

// Returns the image of every source line.
std::vector<LineId> replay(const Proof& src, ProofBuilder& b, const ReplayHooks& h);

std::vector<Formula> map_all(const std::vector<Formula>& v, const std::function<Formula(Formula)>& f);
Sequent map_sequent(const Sequent& s, const std::function<Formula(Formula)>& f);

}  // namespace lndt
