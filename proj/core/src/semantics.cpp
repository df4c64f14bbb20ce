#include "lndt/semantics.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

namespace lndt {

std::string Assignment::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto [v, b] : m_) {
    if (!first) s += ", ";
    first = false;
    s += var_name(v) + "=" + (b ? "1" : "0");
  }
  return s + "}";
}

bool Evaluator::operator()(Formula f) {
  switch (f.kind()) {
    case Kind::Zero:
      return false;
    case Kind::One:
      return true;
    case Kind::Lit:
      return alpha_(f.lit().var) != f.lit().negative;
    case Kind::Ext: {
      auto it = memo_.find(f.ext());
      if (it != memo_.end()) return it->second;
      trace.push_back(f.ext());
      bool r = (*this)(ax_.body(f.ext()));
      memo_.emplace(f.ext(), r);
      return r;
    }
    case Kind::Or:
      return (*this)(f.left()) || (*this)(f.right());
    case Kind::Dec: {
      bool p = alpha_(f.lit().var) != f.lit().negative;
      return p ? (*this)(f.right()) : (*this)(f.left());
    }
    case Kind::PosDec: {
      bool p = alpha_(f.lit().var) != f.lit().negative;
      return (*this)(f.left()) || (p && (*this)(f.right()));
    }
  }
  return false;
}

bool eval(Formula f, const ExtAxiomSet& ax, const Assignment& alpha) { return Evaluator(ax, alpha)(f); }

TruthTable::TruthTable(Word vars) : vars_(std::move(vars)) {
  bits_.assign(std::max<std::uint64_t>(1, size() / 64), 0);
}

TruthTable::TruthTable(Word vars, std::vector<std::uint64_t> bits) : vars_(std::move(vars)), bits_(std::move(bits)) {
  if (size() < 64) bits_[0] &= (std::uint64_t{1} << size()) - 1;
}

void TruthTable::set(std::uint64_t i, bool b) {
  if (b) bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
  else bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::uint64_t TruthTable::popcount() const {
  std::uint64_t c = 0;
  for (auto w : bits_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

Assignment TruthTable::assignment(std::uint64_t i) const {
  Assignment a;
  std::size_t n = vars_.size();
  for (std::size_t j = 0; j < n; ++j) a.set(vars_[j], (i >> (n - 1 - j)) & 1u);
  return a;
}

std::string TruthTable::to_bitstring() const {
  std::string s;
  for (std::uint64_t i = 0; i < size(); ++i) s += get(i) ? '1' : '0';
  return s;
}

TableEvaluator::TableEvaluator(const ExtAxiomSet& ax, Word vars, int cap) : ax_(ax), vars_(std::move(vars)) {
  if (static_cast<int>(vars_.size()) > cap || cap > kMaxOracleCap)
    throw OracleCapExceeded("oracle cap of " + std::to_string(cap) + " variables exceeded (" +
                            std::to_string(vars_.size()) + ")");
  std::size_t n = vars_.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (!index_.emplace(vars_[j], j).second) throw std::invalid_argument("duplicate variable in table");
  }
  if (n >= 6) {
    words_ = std::size_t{1} << (n - 6);
  } else {
    words_ = 1;
    last_mask_ = (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  }
}

const TableEvaluator::Bits& TableEvaluator::var_bits(Literal l) {
  std::uint64_t key = (std::uint64_t{l.var} << 1) | (l.negative ? 1u : 0u);
  auto it = lit_memo_.find(key);
  if (it != lit_memo_.end()) return it->second;
  auto jt = index_.find(l.var);
  if (jt == index_.end()) throw std::invalid_argument("variable " + var_name(l.var) + " outside table support");
  std::size_t n = vars_.size();
  std::size_t b = n - 1 - jt->second;
  Bits bits(words_, 0);
  static const std::uint64_t patterns[6] = {0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
                                            0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  for (std::size_t w = 0; w < words_; ++w) {
    if (b < 6) bits[w] = patterns[b];
    else bits[w] = ((w >> (b - 6)) & 1u) ? ~std::uint64_t{0} : 0;
    if (l.negative) bits[w] = ~bits[w];
  }
  bits[words_ - 1] &= last_mask_;
  return lit_memo_.emplace(key, std::move(bits)).first->second;
}

const TableEvaluator::Bits& TableEvaluator::operator()(Formula f) {
  auto it = memo_.find(f.node());
  if (it != memo_.end()) return it->second;
  Bits r(words_, 0);
  switch (f.kind()) {
    case Kind::Zero:
      break;
    case Kind::One:
      for (auto& w : r) w = ~std::uint64_t{0};
      r[words_ - 1] &= last_mask_;
      break;
    case Kind::Lit:
      r = var_bits(f.lit());
      break;
    case Kind::Ext: {
      auto et = ext_memo_.find(f.ext());
      if (et != ext_memo_.end()) {
        r = et->second;
      } else {
        r = (*this)(ax_.body(f.ext()));
        ext_memo_.emplace(f.ext(), r);
      }
      break;
    }
    case Kind::Or: {
      const Bits& a = (*this)(f.left());
      const Bits& b = (*this)(f.right());
      for (std::size_t w = 0; w < words_; ++w) r[w] = a[w] | b[w];
      break;
    }
    case Kind::Dec:
    case Kind::PosDec: {
      Bits a = (*this)(f.left());
      const Bits& b = (*this)(f.right());
      const Bits& p = var_bits(f.lit());
      for (std::size_t w = 0; w < words_; ++w) {
        r[w] = f.kind() == Kind::Dec ? ((~p[w] & a[w]) | (p[w] & b[w])) : (a[w] | (p[w] & b[w]));
      }
      r[words_ - 1] &= last_mask_;
      break;
    }
  }
  return memo_.emplace(f.node(), std::move(r)).first->second;
}

TruthTable TableEvaluator::table(Formula f) { return TruthTable(vars_, (*this)(f)); }

std::optional<Assignment> TableEvaluator::countermodel(const Sequent& s) {
  Bits bad(words_, ~std::uint64_t{0});
  bad[words_ - 1] &= last_mask_;
  for (Formula f : s.ant) {
    const Bits& b = (*this)(f);
    for (std::size_t w = 0; w < words_; ++w) bad[w] &= b[w];
  }
  for (Formula f : s.suc) {
    const Bits& b = (*this)(f);
    for (std::size_t w = 0; w < words_; ++w) bad[w] &= ~b[w];
  }
  for (std::size_t w = 0; w < words_; ++w) {
    if (bad[w]) {
      std::uint64_t i = w * 64 + static_cast<std::uint64_t>(std::countr_zero(bad[w]));
      return TruthTable(vars_).assignment(i);
    }
  }
  return std::nullopt;
}

Word support(Formula f, const ExtAxiomSet& ax) {
  std::set<Var> vs;
  std::unordered_set<const Node*> seen;
  std::unordered_set<const ExtVar*> seen_ext;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!seen.insert(g.node()).second) continue;
    switch (g.kind()) {
      case Kind::Lit:
        vs.insert(g.lit().var);
        break;
      case Kind::Ext:
        if (seen_ext.insert(g.ext()).second) stack.push_back(ax.body(g.ext()));
        break;
      case Kind::Or:
        stack.push_back(g.left());
        stack.push_back(g.right());
        break;
      case Kind::Dec:
      case Kind::PosDec:
        vs.insert(g.lit().var);
        stack.push_back(g.left());
        stack.push_back(g.right());
        break;
      default:
        break;
    }
  }
  return Word(vs.begin(), vs.end());
}

Word support(const Sequent& s, const ExtAxiomSet& ax) {
  std::set<Var> vs;
  for (const auto* side : {&s.ant, &s.suc})
    for (Formula f : *side)
      for (Var v : support(f, ax)) vs.insert(v);
  return Word(vs.begin(), vs.end());
}

TruthTable truth_table(Formula f, const ExtAxiomSet& ax, const Word& vars, int cap) {
  TableEvaluator ev(ax, vars, cap);
  return ev.table(f);
}

bool is_monotone(const TruthTable& t) {
  std::size_t n = t.arity();
  for (std::uint64_t i = 0; i < t.size(); ++i) {
    if (!t.get(i)) continue;
    for (std::size_t b = 0; b < n; ++b) {
      std::uint64_t j = i | (std::uint64_t{1} << b);
      if (j != i && !t.get(j)) return false;
    }
  }
  return true;
}

TruthTable monotone_closure(const TruthTable& t) {
  TruthTable r = t;
  std::size_t n = t.arity();
  // Upward propagation along each coordinate (zeta transform over the subset lattice).
  for (std::size_t b = 0; b < n; ++b) {
    std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t i = 0; i < t.size(); ++i) {
      if ((i & bit) && r.get(i ^ bit)) r.set(i, true);
    }
  }
  return r;
}

std::optional<Assignment> sequent_valid(const Sequent& s, const ExtAxiomSet& ax, int cap) {
  TableEvaluator ev(ax, support(s, ax), cap);
  return ev.countermodel(s);
}

bool is_positive(Formula f) {
  if (f.has_neg()) return false;
  if (!f.has_dec()) return true;
  std::unordered_set<const Node*> seen;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!g.has_dec() || !seen.insert(g.node()).second) continue;
    if (g.kind() == Kind::Dec) {
      Formula b = g.right();
      if (b.kind() != Kind::Or || b.left() != g.left()) return false;
    }
    if (!g.is_atomic()) {
      stack.push_back(g.left());
      stack.push_back(g.right());
    }
  }
  return true;
}

Formula desugar(Formula f) {
  if (!f.has_posdec()) return f;
  std::unordered_map<const Node*, Formula> memo;
  auto go = [&](auto&& self, Formula g) -> Formula {
    if (!g.has_posdec()) return g;
    auto it = memo.find(g.node());
    if (it != memo.end()) return it->second;
    Formula r;
    Formula a = self(self, g.left());
    Formula b = self(self, g.right());
    switch (g.kind()) {
      case Kind::Or:
        r = mk_or(a, b);
        break;
      case Kind::Dec:
        r = mk_dec(a, g.lit(), b);
        break;
      case Kind::PosDec:
        r = mk_dec(a, g.lit(), mk_or(a, b));
        break;
      default:
        r = g;
    }
    memo.emplace(g.node(), r);
    return r;
  };
  return go(go, f);
}

static Literal subst_literal(Literal l, const Substitution& sigma) {
  auto it = sigma.find(l.var);
  if (it == sigma.end()) return l;
  Formula img = it->second;
  if (img.kind() != Kind::Lit)
    throw SubstitutionError("substitution places " + to_string(img) + " in decision position");
  Literal r = img.lit();
  if (l.negative) r.negative = !r.negative;
  return r;
}

static Formula subst_lit_atom(Literal l, const Substitution& sigma) {
  auto it = sigma.find(l.var);
  if (it == sigma.end()) return lit(l);
  if (!l.negative) return it->second;
  if (it->second.kind() == Kind::Lit) {
    Literal r = it->second.lit();
    r.negative = !r.negative;
    return lit(r);
  }
  throw SubstitutionError("cannot substitute a compound formula under a negative literal");
}

Formula substitute(Formula f, const Substitution& sigma) {
  std::unordered_map<const Node*, Formula> memo;
  auto go = [&](auto&& self, Formula g) -> Formula {
    auto it = memo.find(g.node());
    if (it != memo.end()) return it->second;
    Formula r;
    switch (g.kind()) {
      case Kind::Zero:
      case Kind::One:
        r = g;
        break;
      case Kind::Lit:
        r = subst_lit_atom(g.lit(), sigma);
        break;
      case Kind::Ext:
        if (g.ext()->family != Family::Plain) {
          for (Var v : g.ext()->word)
            if (sigma.count(v)) throw SubstitutionError("substitution into a family-keyed extension variable");
          if (g.ext()->family == Family::RefThr) {
            Formula a = self(self, g.ext()->a);
            Formula b = self(self, g.ext()->b);
            r = ext(refthr_var(g.ext()->word, g.ext()->k, a, b));
            break;
          }
        }
        r = g;
        break;
      case Kind::Or:
        r = mk_or(self(self, g.left()), self(self, g.right()));
        break;
      case Kind::Dec:
        r = mk_dec(self(self, g.left()), subst_literal(g.lit(), sigma), self(self, g.right()));
        break;
      case Kind::PosDec:
        r = mk_pdec(self(self, g.left()), subst_literal(g.lit(), sigma), self(self, g.right()));
        break;
    }
    memo.emplace(g.node(), r);
    return r;
  };
  return go(go, f);
}

std::pair<Formula, ExtAxiomSet> substitute(Formula f, const Substitution& sigma, const ExtAxiomSet& ax,
                                           std::uint32_t rename_offset) {
  ExtAxiomSet out;
  std::unordered_map<const ExtVar*, Formula> renamed;
  std::uint32_t counter = 0;
  std::unordered_map<const Node*, Formula> memo;

  auto go = [&](auto&& self, Formula g) -> Formula {
    auto it = memo.find(g.node());
    if (it != memo.end()) return it->second;
    Formula r;
    switch (g.kind()) {
      case Kind::Zero:
      case Kind::One:
        r = g;
        break;
      case Kind::Lit:
        r = subst_lit_atom(g.lit(), sigma);
        break;
      case Kind::Ext: {
        const ExtVar* e = g.ext();
        auto rt = renamed.find(e);
        if (rt != renamed.end()) {
          r = rt->second;
          break;
        }
        Formula body = ax.body(e);
        Word sup = support(g, ax);
        bool touched = std::any_of(sup.begin(), sup.end(), [&](Var v) { return sigma.count(v) != 0; });
        if (!touched) {
          for (const ExtVar* u : ext_vars_in(body)) self(self, ext(u));
          out.define(e, body);
          r = g;
        } else {
          Formula nb = self(self, body);
          const ExtVar* fresh = plain_var(rename_offset + counter++);
          out.define(fresh, nb);
          r = ext(fresh);
        }
        renamed.emplace(e, r);
        break;
      }
      case Kind::Or:
        r = mk_or(self(self, g.left()), self(self, g.right()));
        break;
      case Kind::Dec:
        r = mk_dec(self(self, g.left()), subst_literal(g.lit(), sigma), self(self, g.right()));
        break;
      case Kind::PosDec:
        r = mk_pdec(self(self, g.left()), subst_literal(g.lit(), sigma), self(self, g.right()));
        break;
    }
    memo.emplace(g.node(), r);
    return r;
  };
  Formula r = go(go, f);
  return {r, std::move(out)};
}

Formula posterm(const Word& vars) {
  if (vars.empty()) throw std::invalid_argument("posterm of an empty list");
  Formula acc = pos(vars.back());
  for (std::size_t i = vars.size() - 1; i-- > 0;) acc = mk_pdec(zero(), {vars[i], false}, acc);
  return acc;
}

PositiveEncoding dnf_to_positive_sequent(const Dnf& dnf) {
  std::set<Var> vars;
  for (const auto& t : dnf)
    for (Literal l : t) vars.insert(l.var);
  Var next = vars.empty() ? 0 : *vars.rbegin() + 1;
  PositiveEncoding enc;
  for (Var v : vars) enc.primed[v] = next++;
  for (Var v : vars) enc.sequent.ant.push_back(mk_or(pos(v), pos(enc.primed[v])));
  for (const auto& t : dnf) {
    Word w;
    for (Literal l : t) w.push_back(l.negative ? enc.primed[l.var] : l.var);
    enc.sequent.suc.push_back(w.empty() ? one() : posterm(w));
  }
  return enc;
}

bool dnf_valid(const Dnf& dnf, int cap) {
  std::set<Var> vs;
  for (const auto& t : dnf)
    for (Literal l : t) vs.insert(l.var);
  Word vars(vs.begin(), vs.end());
  if (static_cast<int>(vars.size()) > cap) throw OracleCapExceeded("oracle cap exceeded");
  TruthTable tt(vars);
  for (std::uint64_t i = 0; i < tt.size(); ++i) {
    Assignment a = tt.assignment(i);
    bool any = false;
    for (const auto& t : dnf) {
      bool all = true;
      for (Literal l : t) all = all && (a(l.var) != l.negative);
      if (all) {
        any = true;
        break;
      }
    }
    if (!any) return false;
  }
  return true;
}

}  // namespace lndt
