#include "lndt/search.hpp"

namespace lndt {

namespace {

class Searcher {
 public:
  Searcher(ProofBuilder& b, const SearchOptions& opt) : b_(b), opt_(opt) {}

  LineId prove(const Sequent& s, bool trimmed = false) {
    if (auto l = b_.find(s)) return *l;
    if (b_.size() > opt_.max_lines) throw SearchError("search line budget exhausted");
    if (opt_.trim && !trimmed) {
      Sequent t = trim(s);
      if (t.ant.size() + t.suc.size() < s.ant.size() + s.suc.size()) return finish(prove(t, true), s);
    }
    for (std::size_t i = 0; i < s.ant.size(); ++i)
      if (!s.ant[i].is_atomic()) return left(s, i);
    for (std::size_t i = 0; i < s.suc.size(); ++i)
      if (!s.suc[i].is_atomic()) return right(s, i);
    return atomic(s);
  }

 private:
  static std::vector<Formula> replace(const std::vector<Formula>& v, std::size_t i, std::initializer_list<Formula> by) {
    std::vector<Formula> out(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i));
    out.insert(out.end(), by.begin(), by.end());
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end());
    return out;
  }

  LineId finish(LineId l, const Sequent& s) { return b_.adapt(l, s); }

  bool valid(const Sequent& s) {
    try {
      return !sequent_valid(s, b_.axioms(), opt_.cap).has_value();
    } catch (const OracleCapExceeded&) {
      return false;
    }
  }

  Sequent trim(const Sequent& s) {
    Sequent t = s;
    for (int side = 0; side < 2; ++side) {
      auto& v = side == 0 ? t.ant : t.suc;
      for (std::size_t i = v.size(); i-- > 0;) {
        Formula f = v[i];
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        if (!valid(t)) v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), f);
      }
    }
    return t;
  }

  LineId left(const Sequent& s, std::size_t i) {
    Formula d = s.ant[i];
    Formula a = d.left(), b = d.right();
    switch (d.kind()) {
      case Kind::Or: {
        LineId l1 = prove({replace(s.ant, i, {a}), s.suc});
        LineId l2 = prove({replace(s.ant, i, {b}), s.suc});
        return finish(b_.or_l(l1, l2, d), s);
      }
      case Kind::PosDec:
        if (!opt_.general) {
          Formula p = lit(d.lit());
          LineId l1 = prove({replace(s.ant, i, {a}), s.suc});
          LineId l2 = prove({replace(s.ant, i, {p, b}), s.suc});
          return finish(b_.pos_pl(l1, l2, d), s);
        }
        [[fallthrough]];
      case Kind::Dec: {
        if (!opt_.general) throw SearchError("general decision outside eLNDT mode");
        Formula p = lit(d.lit());
        Formula bb = d.kind() == Kind::Dec ? b : mk_or(a, b);
        std::vector<Formula> suc1 = s.suc;
        suc1.push_back(p);
        LineId l1 = prove({replace(s.ant, i, {a}), suc1});
        LineId l2 = prove({replace(s.ant, i, {p, bb}), s.suc});
        return finish(b_.pl(l1, l2, d), s);
      }
      default:
        throw SearchError("unexpected formula");
    }
  }

  LineId right(const Sequent& s, std::size_t i) {
    Formula d = s.suc[i];
    Formula a = d.left(), b = d.right();
    switch (d.kind()) {
      case Kind::Or: {
        LineId l = prove({s.ant, replace(s.suc, i, {a, b})});
        return finish(b_.or_r(l, d), s);
      }
      case Kind::PosDec:
        if (!opt_.general) {
          Formula p = lit(d.lit());
          LineId l1 = prove({s.ant, replace(s.suc, i, {a, p})});
          LineId l2 = prove({s.ant, replace(s.suc, i, {a, b})});
          return finish(b_.pos_pr(l1, l2, d), s);
        }
        [[fallthrough]];
      case Kind::Dec: {
        if (!opt_.general) throw SearchError("general decision outside eLNDT mode");
        Formula p = lit(d.lit());
        Formula bb = d.kind() == Kind::Dec ? b : mk_or(a, b);
        std::vector<Formula> ant2 = s.ant;
        ant2.push_back(p);
        LineId l1 = prove({s.ant, replace(s.suc, i, {a, p})});
        LineId l2 = prove({ant2, replace(s.suc, i, {bb})});
        return finish(b_.pr(l1, l2, d), s);
      }
      default:
        throw SearchError("unexpected formula");
    }
  }

  LineId atomic(const Sequent& s) {
    for (Formula f : s.ant)
      if (f.kind() == Kind::Zero) return finish(b_.ax0(), s);
    for (Formula f : s.suc)
      if (f.kind() == Kind::One) return finish(b_.ax1(), s);
    for (Formula f : s.ant) {
      if (f.kind() != Kind::Lit) continue;
      for (Formula g : s.suc)
        if (g == f) return finish(b_.id(f.lit()), s);
    }
    for (std::size_t i = 0; i < s.ant.size(); ++i) {
      if (s.ant[i].kind() != Kind::Ext) continue;
      const ExtVar* e = s.ant[i].ext();
      LineId ax = b_.ext_lr(e);
      Formula body = b_.axioms().body(e);
      LineId l = prove({replace(s.ant, i, {body}), s.suc});
      return finish(b_.cut(ax, l, body), s);
    }
    for (std::size_t i = 0; i < s.suc.size(); ++i) {
      if (s.suc[i].kind() != Kind::Ext) continue;
      const ExtVar* e = s.suc[i].ext();
      LineId ax = b_.ext_rl(e);
      Formula body = b_.axioms().body(e);
      LineId l = prove({s.ant, replace(s.suc, i, {body})});
      return finish(b_.cut(l, ax, body), s);
    }
    throw SearchError("no rule applies to " + to_string(s));
  }

  ProofBuilder& b_;
  const SearchOptions& opt_;
};

bool admissible(const Sequent& s, bool general) {
  for (const auto* side : {&s.ant, &s.suc})
    for (Formula f : *side) {
      if (f.has_neg()) return false;
      if (!general && f.has_dec()) return false;
    }
  return true;
}

}  // namespace

LineId search_into(ProofBuilder& b, const Sequent& s, const SearchOptions& opt) {
  if (!admissible(s, opt.general)) throw SearchError("search input must be positive: " + to_string(s));
  Searcher searcher(b, opt);
  return b.adapt(searcher.prove(s), s);
}

SearchResult prove_by_search(const Sequent& s, const ExtAxiomSet& ax, const SearchOptions& opt) {
  if (!admissible(s, opt.general)) throw SearchError("search input must be positive: " + to_string(s));
  SearchResult r;
  if (auto cm = sequent_valid(s, ax, opt.cap)) {
    r.countermodel = cm;
    return r;
  }
  ProofBuilder b(opt.general ? Dialect::elndt() : Dialect::plus());
  b.axioms() = ax;
  LineId l = search_into(b, s, opt);
  b.set_display_order(l, s);
  Proof p = prune(b.take(), l);
  p.intermediate = !ext_free(s);
  r.proof = std::move(p);
  return r;
}

}  // namespace lndt
