#pragma once

#include <string>
#include <vector>

#include "lndt/formula.hpp"

namespace lndt {

enum class DialectKind { LNDT, ELNDT, Plus, PlusMinus, Tk };

struct Dialect {
  DialectKind kind = DialectKind::Plus;
  int k = 0;
  Word vars;  // Tk only

  static Dialect lndt() { return {DialectKind::LNDT, 0, {}}; }
  static Dialect elndt() { return {DialectKind::ELNDT, 0, {}}; }
  static Dialect plus() { return {DialectKind::Plus, 0, {}}; }
  static Dialect plus_minus() { return {DialectKind::PlusMinus, 0, {}}; }
  static Dialect tk(int k, Word vars) { return {DialectKind::Tk, k, std::move(vars)}; }

  // "LNDT", "eLNDT", "eLNDT+", "eLNDT+-", "Tk <k> <vars...>"
  std::string name() const;
  static Dialect parse(const std::string& text);

  // Syntax policy for a single formula (extension-variable bodies are checked separately).
  bool admits(Formula f) const;
  bool allows_ext() const { return kind != DialectKind::LNDT; }
  bool positive_rules() const {
    return kind == DialectKind::Plus || kind == DialectKind::PlusMinus || kind == DialectKind::Tk;
  }

  friend bool operator==(const Dialect&, const Dialect&) = default;
};

}  // namespace lndt
