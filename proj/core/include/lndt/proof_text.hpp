#pragma once

#include <string>

#include "lndt/proof.hpp"

namespace lndt {

// Text format:
//   % lndt proof v1
//   dialect eLNDT+
//   intermediate 1
//   axiom NAME <-> F
//   hyp TAG: G |- D
//   L1: G1, G2 |- D1 ; rule[args](L3, L5)
// Lines are numbered from 1; premises must refer to earlier lines.
std::string write_proof(const Proof& p);
Proof parse_proof(const std::string& text);

std::string justification_string(const Justification& j);
Sequent parse_sequent(const std::string& text);

}  // namespace lndt
