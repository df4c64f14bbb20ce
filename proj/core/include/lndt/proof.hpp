#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lndt/axioms.hpp"
#include "lndt/dialect.hpp"
#include "lndt/formula.hpp"
#include "lndt/sequent.hpp"

namespace lndt {

enum class Rule : std::uint8_t {
  Ax0,
  Ax1,
  Id,
  NegL,
  NegR,
  ThrL,
  ThrR,
  ExtLR,
  ExtRL,
  Hyp,
  Cut,
  WL,
  WR,
  CL,
  CR,
  PL,
  PR,
  PosPL,
  PosPR,
  OrL,
  OrR,
};

inline constexpr int kRuleCount = 21;

std::string rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);
int rule_arity(Rule r);

struct Justification {
  Rule rule = Rule::Ax0;
  Formula formula;             // principal, cut or weakened formula
  Literal lit;                 // id, negL, negR
  std::uint32_t index = 0;     // thrL, thrR: position in the dialect's variable list
  const ExtVar* ext = nullptr; // extLR, extRL
  std::string tag;             // hyp
  std::vector<std::uint32_t> premises;
};

struct ProofLine {
  Sequent seq;
  Justification just;
};

struct Hypothesis {
  std::string tag;
  Sequent seq;
};

struct Proof {
  Dialect dialect = Dialect::plus();
  ExtAxiomSet axioms;
  std::vector<Hypothesis> hypotheses;
  std::vector<ProofLine> lines;
  // Allows an extension variable in the conclusion of a hypothesis-free proof.
  bool intermediate = false;

  const Sequent& conclusion() const { return lines.back().seq; }
};

std::uint64_t proof_size(const Proof& p);
std::map<std::string, std::uint64_t> rule_histogram(const Proof& p);

// Keeps only the lines `root` depends on (default: the last line), renumbering
// premises; root becomes the last line.
Proof prune(const Proof& p, std::optional<std::size_t> root = std::nullopt);

}  // namespace lndt
