#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lndt {

using Var = std::uint32_t;
using Word = std::vector<Var>;

struct Literal {
  Var var = 0;
  bool negative = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

enum class Kind : std::uint8_t { Zero, One, Lit, Ext, Or, Dec, PosDec };
enum class Family : std::uint8_t { Plain, Exact, Thr, RefThr };

struct Node;
struct ExtVar;

// Handle into the hash-consed term graph. Equality is node identity.
class Formula {
 public:
  Formula() = default;
  explicit Formula(const Node* n) : n_(n) {}

  const Node* node() const { return n_; }
  bool valid() const { return n_ != nullptr; }

  Kind kind() const;
  Formula left() const;   // Or: lhs; Dec/PosDec: 0-branch
  Formula right() const;  // Or: rhs; Dec/PosDec: 1-branch
  Literal lit() const;    // Lit atom or decision literal
  const ExtVar* ext() const;
  std::uint32_t id() const;
  std::uint64_t tokens() const;

  bool has_ext() const;
  bool has_neg() const;
  bool has_dec() const;
  bool has_posdec() const;
  bool is_atomic() const;  // 0, 1, literal or extension variable

  friend bool operator==(Formula a, Formula b) { return a.n_ == b.n_; }
  friend bool operator!=(Formula a, Formula b) { return a.n_ != b.n_; }

 private:
  const Node* n_ = nullptr;
};

struct ExtVar {
  Family family = Family::Plain;
  std::uint32_t index = 0;
  Word word;
  int k = 0;
  Formula a;  // refthr left argument
  Formula b;  // refthr right argument
  std::uint32_t id = 0;
  std::size_t hash = 0;
};

enum NodeFlag : std::uint8_t {
  kHasExt = 1,
  kHasNeg = 2,
  kHasDec = 4,
  kHasPosDec = 8,
};

struct Node {
  Kind kind = Kind::Zero;
  Literal lit;
  Formula a;
  Formula b;
  const ExtVar* ext = nullptr;
  std::uint32_t id = 0;
  std::uint8_t flags = 0;
  std::uint64_t tokens = 0;
  std::size_t hash = 0;
};

inline Kind Formula::kind() const { return n_->kind; }
inline Formula Formula::left() const { return n_->a; }
inline Formula Formula::right() const { return n_->b; }
inline Literal Formula::lit() const { return n_->lit; }
inline const ExtVar* Formula::ext() const { return n_->ext; }
inline std::uint32_t Formula::id() const { return n_->id; }
inline std::uint64_t Formula::tokens() const { return n_->tokens; }
inline bool Formula::has_ext() const { return n_->flags & kHasExt; }
inline bool Formula::has_neg() const { return n_->flags & kHasNeg; }
inline bool Formula::has_dec() const { return n_->flags & kHasDec; }
inline bool Formula::has_posdec() const { return n_->flags & kHasPosDec; }
inline bool Formula::is_atomic() const {
  return n_->kind != Kind::Or && n_->kind != Kind::Dec && n_->kind != Kind::PosDec;
}

struct FormulaHash {
  std::size_t operator()(Formula f) const { return std::hash<const Node*>{}(f.node()); }
};

// Constructors. All are thread-safe and return interned nodes.
Formula zero();
Formula one();
Formula lit(Literal l);
Formula pos(Var v);
Formula neg(Var v);
Formula ext(const ExtVar* e);
Formula mk_or(Formula a, Formula b);
Formula mk_dec(Formula a, Literal p, Formula b);
Formula mk_pdec(Formula a, Literal p, Formula b);

const ExtVar* plain_var(std::uint32_t index);
const ExtVar* exact_var(const Word& word, int k);
const ExtVar* thr_var(const Word& word, int k);
const ExtVar* refthr_var(const Word& word, int k, Formula a, Formula b);

inline Formula thr(const Word& word, int k) { return ext(thr_var(word, k)); }
inline Formula exact(const Word& word, int k) { return ext(exact_var(word, k)); }

// Left-folded disjunction; the empty list yields 0.
Formula or_fold(const std::vector<Formula>& parts);

std::string var_name(Var v);
std::string literal_string(Literal l);
std::string ext_name(const ExtVar* e);
std::string to_string(Formula f);

// Number of distinct interned nodes so far (diagnostics).
std::size_t term_store_size();

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::size_t p, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(p) + ": " + msg), pos(p) {}
};

}  // namespace lndt
