#include "lndt/formula.hpp"

#include <deque>
#include <mutex>
#include <unordered_set>

namespace lndt {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r < a ? UINT64_MAX : r;
}

struct NodePtrHash {
  std::size_t operator()(const Node* n) const { return n->hash; }
};
struct NodePtrEq {
  bool operator()(const Node* x, const Node* y) const {
    return x->kind == y->kind && x->lit == y->lit && x->a == y->a && x->b == y->b && x->ext == y->ext;
  }
};
struct ExtPtrHash {
  std::size_t operator()(const ExtVar* e) const { return e->hash; }
};
struct ExtPtrEq {
  bool operator()(const ExtVar* x, const ExtVar* y) const {
    return x->family == y->family && x->index == y->index && x->k == y->k && x->word == y->word &&
           x->a == y->a && x->b == y->b;
  }
};

class TermStore {
 public:
  static TermStore& get() {
    static TermStore store;
    return store;
  }

  Formula intern(Node proto) {
    proto.hash = node_hash(proto);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = nodes_.find(&proto);
    if (it != nodes_.end()) return Formula(*it);
    proto.id = static_cast<std::uint32_t>(node_arena_.size());
    node_arena_.push_back(proto);
    const Node* n = &node_arena_.back();
    nodes_.insert(n);
    return Formula(n);
  }

  const ExtVar* intern(ExtVar proto) {
    std::size_t h = mix(static_cast<std::size_t>(proto.family), proto.index);
    h = mix(h, static_cast<std::size_t>(static_cast<std::int64_t>(proto.k)));
    for (Var v : proto.word) h = mix(h, v);
    h = mix(h, std::hash<const Node*>{}(proto.a.node()));
    h = mix(h, std::hash<const Node*>{}(proto.b.node()));
    proto.hash = h;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = exts_.find(&proto);
    if (it != exts_.end()) return *it;
    proto.id = static_cast<std::uint32_t>(ext_arena_.size());
    ext_arena_.push_back(std::move(proto));
    const ExtVar* e = &ext_arena_.back();
    exts_.insert(e);
    return e;
  }

  std::size_t size() {
    std::lock_guard<std::mutex> lock(mu_);
    return node_arena_.size();
  }

 private:
  static std::size_t node_hash(const Node& n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 1315423911u;
    h = mix(h, n.lit.var * 2u + (n.lit.negative ? 1u : 0u));
    h = mix(h, std::hash<const Node*>{}(n.a.node()));
    h = mix(h, std::hash<const Node*>{}(n.b.node()));
    h = mix(h, std::hash<const ExtVar*>{}(n.ext));
    return h;
  }

  std::mutex mu_;
  std::deque<Node> node_arena_;
  std::deque<ExtVar> ext_arena_;
  std::unordered_set<const Node*, NodePtrHash, NodePtrEq> nodes_;
  std::unordered_set<const ExtVar*, ExtPtrHash, ExtPtrEq> exts_;
};

std::uint64_t literal_tokens(Literal l) { return l.negative ? 2 : 1; }

}  // namespace

Formula zero() {
  static const Formula f = [] {
    Node n;
    n.kind = Kind::Zero;
    n.tokens = 1;
    return TermStore::get().intern(n);
  }();
  return f;
}

Formula one() {
  static const Formula f = [] {
    Node n;
    n.kind = Kind::One;
    n.tokens = 1;
    return TermStore::get().intern(n);
  }();
  return f;
}

Formula lit(Literal l) {
  Node n;
  n.kind = Kind::Lit;
  n.lit = l;
  n.tokens = literal_tokens(l);
  n.flags = l.negative ? kHasNeg : 0;
  return TermStore::get().intern(n);
}

Formula pos(Var v) { return lit({v, false}); }
Formula neg(Var v) { return lit({v, true}); }

Formula ext(const ExtVar* e) {
  if (e == nullptr) throw std::invalid_argument("null extension variable");
  Node n;
  n.kind = Kind::Ext;
  n.ext = e;
  n.tokens = 1;
  n.flags = kHasExt;
  return TermStore::get().intern(n);
}

Formula mk_or(Formula a, Formula b) {
  Node n;
  n.kind = Kind::Or;
  n.a = a;
  n.b = b;
  n.tokens = sat_add(sat_add(a.tokens(), b.tokens()), 1);
  n.flags = a.node()->flags | b.node()->flags;
  return TermStore::get().intern(n);
}

static Formula make_decision(Kind kind, Formula a, Literal p, Formula b) {
  Node n;
  n.kind = kind;
  n.a = a;
  n.b = b;
  n.lit = p;
  n.tokens = sat_add(sat_add(a.tokens(), b.tokens()), 1 + literal_tokens(p));
  n.flags = a.node()->flags | b.node()->flags | (p.negative ? kHasNeg : 0) |
            (kind == Kind::Dec ? kHasDec : kHasPosDec);
  return TermStore::get().intern(n);
}

Formula mk_dec(Formula a, Literal p, Formula b) { return make_decision(Kind::Dec, a, p, b); }
Formula mk_pdec(Formula a, Literal p, Formula b) { return make_decision(Kind::PosDec, a, p, b); }

const ExtVar* plain_var(std::uint32_t index) {
  ExtVar e;
  e.family = Family::Plain;
  e.index = index;
  return TermStore::get().intern(std::move(e));
}

const ExtVar* exact_var(const Word& word, int k) {
  ExtVar e;
  e.family = Family::Exact;
  e.word = word;
  e.k = k;
  return TermStore::get().intern(std::move(e));
}

const ExtVar* thr_var(const Word& word, int k) {
  ExtVar e;
  e.family = Family::Thr;
  e.word = word;
  e.k = k;
  return TermStore::get().intern(std::move(e));
}

const ExtVar* refthr_var(const Word& word, int k, Formula a, Formula b) {
  ExtVar e;
  e.family = Family::RefThr;
  e.word = word;
  e.k = k;
  e.a = a;
  e.b = b;
  return TermStore::get().intern(std::move(e));
}

Formula or_fold(const std::vector<Formula>& parts) {
  if (parts.empty()) return zero();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = mk_or(acc, parts[i]);
  return acc;
}

std::string var_name(Var v) { return "p" + std::to_string(v); }

std::string literal_string(Literal l) { return (l.negative ? "~" : "") + var_name(l.var); }

static std::string word_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += var_name(w[i]);
  }
  return s;
}

std::string ext_name(const ExtVar* e) {
  switch (e->family) {
    case Family::Plain:
      return "e" + std::to_string(e->index);
    case Family::Exact:
      return "ex[" + word_string(e->word) + "; " + std::to_string(e->k) + "]";
    case Family::Thr:
      return "thr[" + word_string(e->word) + "; " + std::to_string(e->k) + "]";
    case Family::RefThr:
      return "rthr[" + word_string(e->word) + "; " + std::to_string(e->k) + "; " + to_string(e->a) + "; " +
             to_string(e->b) + "]";
  }
  return "?";
}

static void print(Formula f, std::string& out) {
  switch (f.kind()) {
    case Kind::Zero:
      out += '0';
      return;
    case Kind::One:
      out += '1';
      return;
    case Kind::Lit:
      out += literal_string(f.lit());
      return;
    case Kind::Ext:
      out += ext_name(f.ext());
      return;
    case Kind::Or:
      out += "or(";
      print(f.left(), out);
      out += ", ";
      print(f.right(), out);
      out += ')';
      return;
    case Kind::Dec:
    case Kind::PosDec:
      out += f.kind() == Kind::Dec ? "dec(" : "pdec(";
      print(f.left(), out);
      out += ", ";
      out += literal_string(f.lit());
      out += ", ";
      print(f.right(), out);
      out += ')';
      return;
  }
}

std::string to_string(Formula f) {
  std::string s;
  print(f, s);
  return s;
}

std::size_t term_store_size() { return TermStore::get().size(); }

}  // namespace lndt
