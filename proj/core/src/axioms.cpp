#include "lndt/axioms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lndt/parse.hpp"

namespace lndt {

Formula ExtAxiomSet::body(const ExtVar* v) const { return entries_[position(v)].body; }

std::size_t ExtAxiomSet::position(const ExtVar* v) const {
  auto it = pos_.find(v);
  if (it == pos_.end()) throw std::out_of_range("undefined extension variable " + ext_name(v));
  return it->second;
}

void ExtAxiomSet::define(const ExtVar* v, Formula body) {
  auto it = pos_.find(v);
  if (it != pos_.end()) {
    if (entries_[it->second].body != body)
      throw std::invalid_argument("conflicting definitions of " + ext_name(v));
    return;
  }
  int stage = 0;
  for (const ExtVar* u : ext_vars_in(body)) {
    auto jt = pos_.find(u);
    if (jt == pos_.end())
      throw std::invalid_argument("body of " + ext_name(v) + " mentions undefined " + ext_name(u));
    stage = std::max(stage, entries_[jt->second].stage + 1);
  }
  pos_.emplace(v, entries_.size());
  entries_.push_back({v, body, stage});
}

void ExtAxiomSet::append_unchecked(const ExtVar* v, Formula body) {
  if (pos_.count(v)) {
    duplicate_ = true;
    entries_.push_back({v, body, 0});
    return;
  }
  int stage = 0;
  for (const ExtVar* u : ext_vars_in(body)) {
    auto jt = pos_.find(u);
    if (jt != pos_.end()) stage = std::max(stage, entries_[jt->second].stage + 1);
  }
  pos_.emplace(v, entries_.size());
  entries_.push_back({v, body, stage});
}

void ExtAxiomSet::ensure(const ExtVar* v) {
  if (pos_.count(v)) return;
  if (v->family == Family::Plain) throw std::out_of_range("undefined extension variable " + ext_name(v));
  Formula b = family_body(v);
  ensure_in(b);
  if (!pos_.count(v)) define(v, b);
}

void ExtAxiomSet::ensure_in(Formula f) {
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!g.has_ext() || covered_.count(g.node())) continue;
    covered_.insert(g.node());
    switch (g.kind()) {
      case Kind::Ext:
        ensure(g.ext());
        break;
      case Kind::Or:
      case Kind::Dec:
      case Kind::PosDec:
        stack.push_back(g.right());
        stack.push_back(g.left());
        break;
      default:
        break;
    }
  }
}

void ExtAxiomSet::merge(const ExtAxiomSet& other) {
  for (const AxiomEntry& e : other.entries_) define(e.var, e.body);
}

Formula family_body(const ExtVar* v) {
  const Word& w = v->word;
  switch (v->family) {
    case Family::Plain:
      throw std::invalid_argument("plain extension variables have no canonical body");
    case Family::Exact: {
      if (w.empty()) return v->k == 0 ? one() : zero();
      Word tail(w.begin() + 1, w.end());
      return mk_dec(exact(tail, v->k), {w[0], false}, exact(tail, v->k - 1));
    }
    case Family::Thr: {
      if (w.empty()) return v->k == 0 ? one() : zero();
      Word tail(w.begin() + 1, w.end());
      return mk_pdec(thr(tail, v->k), {w[0], false}, thr(tail, v->k - 1));
    }
    case Family::RefThr: {
      if (w.empty()) return v->k == 0 ? mk_or(v->a, v->b) : v->a;
      Word tail(w.begin() + 1, w.end());
      return mk_pdec(ext(refthr_var(tail, v->k, v->a, v->b)), {w[0], false},
                     ext(refthr_var(tail, v->k - 1, v->a, v->b)));
    }
  }
  return zero();
}

AxiomCheck check_axiom_set(const ExtAxiomSet& ax, bool strict_indices) {
  AxiomCheck r;
  std::unordered_map<const ExtVar*, std::size_t> seen;
  for (std::size_t i = 0; i < ax.entries().size(); ++i) {
    const AxiomEntry& e = ax.entries()[i];
    if (seen.count(e.var)) {
      return {false, i, ext_name(e.var), "duplicate definition"};
    }
    for (const ExtVar* u : ext_vars_in(e.body)) {
      auto it = seen.find(u);
      if (u == e.var || it == seen.end()) {
        return {false, i, ext_name(e.var), "body mentions " + ext_name(u) + " which does not precede it"};
      }
      if (strict_indices && e.var->family == Family::Plain && u->family == Family::Plain &&
          u->index >= e.var->index) {
        return {false, i, ext_name(e.var), "subscript condition violated by " + ext_name(u)};
      }
    }
    if (e.var->family != Family::Plain && family_body(e.var) != e.body) {
      return {false, i, ext_name(e.var), "body differs from the family definition"};
    }
    seen.emplace(e.var, i);
  }
  return r;
}

static ExtAxiomSet instantiate(const ExtVar* v) {
  ExtAxiomSet ax;
  ax.ensure(v);
  return ax;
}

ExtAxiomSet instantiate_exact(const Word& word, int k) { return instantiate(exact_var(word, k)); }
ExtAxiomSet instantiate_thr(const Word& word, int k) { return instantiate(thr_var(word, k)); }
ExtAxiomSet instantiate_refthr(const Word& word, int k, Formula a, Formula b) {
  ExtAxiomSet ax;
  ax.ensure_in(a);
  ax.ensure_in(b);
  ax.ensure(refthr_var(word, k, a, b));
  return ax;
}

std::vector<const ExtVar*> ext_vars_in(Formula f) {
  std::vector<const ExtVar*> out;
  if (!f.has_ext()) return out;
  std::unordered_set<const Node*> seen;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!g.has_ext() || !seen.insert(g.node()).second) continue;
    if (g.kind() == Kind::Ext) {
      out.push_back(g.ext());
    } else if (!g.is_atomic()) {
      stack.push_back(g.right());
      stack.push_back(g.left());
    }
  }
  return out;
}

std::vector<Var> vars_in(Formula f) {
  std::vector<Var> out;
  std::unordered_set<const Node*> seen;
  std::unordered_set<Var> have;
  std::vector<Formula> stack{f};
  auto add = [&](Var v) {
    if (have.insert(v).second) out.push_back(v);
  };
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!seen.insert(g.node()).second) continue;
    switch (g.kind()) {
      case Kind::Lit:
        add(g.lit().var);
        break;
      case Kind::Ext:
        for (Var v : g.ext()->word) add(v);
        if (g.ext()->family == Family::RefThr) {
          stack.push_back(g.ext()->b);
          stack.push_back(g.ext()->a);
        }
        break;
      case Kind::Or:
        stack.push_back(g.right());
        stack.push_back(g.left());
        break;
      case Kind::Dec:
      case Kind::PosDec:
        stack.push_back(g.right());
        add(g.lit().var);
        stack.push_back(g.left());
        break;
      default:
        break;
    }
  }
  return out;
}

ExtAxiomSet parse_axiom_file(const std::string& text) {
  ExtAxiomSet ax;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == '%') continue;
    auto arrow = t.find("<->");
    if (arrow == std::string::npos) throw ParseError(lineno, "axiom line without '<->'");
    const ExtVar* v = parse_ext_name(trim(t.substr(0, arrow)));
    Formula body = parse_formula(trim(t.substr(arrow + 3)));
    ax.append_unchecked(v, body);
  }
  return ax;
}

std::string axiom_file_string(const ExtAxiomSet& ax) {
  std::string out;
  for (const AxiomEntry& e : ax.entries()) out += ext_name(e.var) + " <-> " + to_string(e.body) + "\n";
  return out;
}

}  // namespace lndt
