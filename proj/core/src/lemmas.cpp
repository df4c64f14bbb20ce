#include "lndt/lemmas.hpp"

#include <algorithm>
#include <mutex>

#include "lndt/search.hpp"
#include "lndt/transform.hpp"

namespace lndt {

Word without(const Word& w, std::size_t i) {
  Word out;
  for (std::size_t t = 0; t < w.size(); ++t)
    if (t != i) out.push_back(w[t]);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

namespace {

enum Tag : int {
  kIdentity,
  kTruth,
  kMedial,
  kThrTrue,
  kThrStep,
  kThrFalse,
  kCase,
  kMerge,
  kSplit,
  kUnit,
  kUnitIn,
  kThr1Split,
  kXthr,
  kTwo,
  kRefthr,
  kNegtrans,
};

Word tail(const Word& w) { return Word(w.begin() + 1, w.end()); }
Word prefix(const Word& w, std::size_t n) { return Word(w.begin(), w.begin() + n); }
Word suffix(const Word& w, std::size_t n) { return Word(w.begin() + n, w.end()); }
Literal pv(Var v) { return {v, false}; }

constexpr Var kMedialBase = 1000000;

struct MedialSkeleton {
  Proof fwd, bwd;
  Sequent sf, sb;
};

const MedialSkeleton& medial_skeleton() {
  static MedialSkeleton sk;
  static std::once_flag once;
  std::call_once(once, [] {
    Formula a = pos(kMedialBase), b = pos(kMedialBase + 1), c = pos(kMedialBase + 2), d = pos(kMedialBase + 3);
    Literal p = pv(kMedialBase + 4), q = pv(kMedialBase + 5);
    Formula lhs = mk_pdec(mk_pdec(a, q, b), p, mk_pdec(c, q, d));
    Formula rhs = mk_pdec(mk_pdec(a, p, c), q, mk_pdec(b, p, d));
    sk.sf = {{lhs}, {rhs}};
    sk.sb = {{rhs}, {lhs}};
    auto r1 = prove_by_search(sk.sf, {});
    auto r2 = prove_by_search(sk.sb, {});
    if (!r1.proof || !r2.proof) throw LemmaError("medial skeleton search failed");
    sk.fwd = std::move(*r1.proof);
    sk.bwd = std::move(*r2.proof);
  });
  return sk;
}

// From |- a_0, ..., a_{n-1} (as separate formulas) derives |- or_fold(a).
LineId or_right_fold(ProofBuilder& b, LineId l, const std::vector<Formula>& parts) {
  Formula acc = parts.empty() ? zero() : parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = mk_or(acc, parts[i]);
    l = b.or_r(l, acc);
  }
  return l;
}

}  // namespace

Lemmas::Lemmas(ProofBuilder& b, bool faithful_identity) : b_(b), faithful_(faithful_identity) {}

template <class F>
LineId Lemmas::memo(const Key& k, F&& make) {
  auto it = lines_.find(k);
  if (it != lines_.end()) return it->second;
  LineId l = make();
  lines_.emplace(k, l);
  return l;
}

template <class F>
Equiv Lemmas::memo_equiv(const Key& k, F&& make) {
  auto it = equivs_.find(k);
  if (it != equivs_.end()) return it->second;
  Equiv e = make();
  equivs_.emplace(k, e);
  return e;
}

LineId Lemmas::identity(Formula a) {
  return memo({kIdentity, {}, {}, 0, 0, a.id(), 0}, [&]() -> LineId {
    switch (a.kind()) {
      case Kind::Zero:
        return b_.wr(b_.ax0(), a);
      case Kind::One:
        return b_.wl(b_.ax1(), a);
      case Kind::Lit:
        return b_.id(a.lit());
      case Kind::Ext: {
        const ExtVar* e = a.ext();
        if (e->family != Family::Plain) b_.axioms().ensure(e);
        Formula body = b_.axioms().body(e);
        if (!faithful_) return b_.cut(b_.ext_lr(e), b_.ext_rl(e), body);
        // Both cuts repeat the sequents of the extension axioms, so dedup is paused.
        LineId ib = identity(body), lr = b_.ext_lr(e), rl = b_.ext_rl(e);
        bool dedup = b_.dedup();
        b_.set_dedup(false);
        LineId out = b_.cut(b_.cut(lr, ib, body), rl, body);
        b_.set_dedup(dedup);
        return out;
      }
      case Kind::Or: {
        LineId l = b_.or_r(identity(a.left()), a);
        LineId r = b_.or_r(identity(a.right()), a);
        return b_.or_l(l, r, a);
      }
      case Kind::PosDec: {
        Formula x = a.left(), y = a.right();
        LineId ix = identity(x);
        LineId l = b_.pos_pr(ix, ix, a);
        LineId r = b_.pos_pr(b_.id(a.lit()), identity(y), a);
        return b_.pos_pl(l, r, a);
      }
      case Kind::Dec: {
        Formula x = a.left(), y = a.right();
        LineId ip = b_.id(a.lit());
        LineId l = b_.pr(identity(x), ip, a);
        LineId r = b_.pr(ip, identity(y), a);
        return b_.pl(l, r, a);
      }
    }
    throw LemmaError("identity: unknown formula kind");
  });
}

LineId Lemmas::truth(int item, Formula a, Literal p, Formula b) {
  return memo({kTruth, {a.id(), b.id()}, {}, item, p.negative, p.var, 0}, [&]() -> LineId {
    Formula d = mk_pdec(a, p, b);
    switch (item) {
      case 1:
        return b_.pos_pl(identity(a), b_.id(p), d);
      case 2:
        return b_.pos_pl(identity(a), identity(b), d);
      case 3: {
        LineId ia = identity(a);
        return b_.pos_pr(ia, ia, d);
      }
      case 4:
        return b_.pos_pr(b_.id(p), identity(b), d);
      default:
        throw LemmaError("truth: item must be 1..4");
    }
  });
}

LineId Lemmas::replacement(LineId h1, LineId h2, Formula d, Formula d2) {
  if (d.kind() != Kind::PosDec || d2.kind() != Kind::PosDec || d.lit() != d2.lit())
    throw LemmaError("replacement: decisions on different literals");
  Literal p = d.lit();
  // Truth items 3 and 4 inlined over the hypotheses.
  LineId x1 = b_.pos_pr(h1, h1, d2);
  LineId x2 = b_.pos_pr(b_.id(p), h2, d2);
  return b_.pos_pl(x1, x2, d);
}

Equiv Lemmas::replace_equiv(const Equiv& a, const Equiv& b, Formula d, Formula d2) {
  return {replacement(a.fwd, b.fwd, d, d2), replacement(a.bwd, b.bwd, d2, d)};
}

Equiv Lemmas::unfold(const ExtVar* e) { return {b_.ext_lr(e), b_.ext_rl(e)}; }

Equiv Lemmas::refl(Formula a) {
  LineId i = identity(a);
  return {i, i};
}

Equiv Lemmas::medial(Formula a, Formula b, Formula c, Formula d, Literal p, Literal q) {
  return {medial(a, b, c, d, p, q, true), medial(a, b, c, d, p, q, false)};
}

LineId Lemmas::medial(Formula a, Formula b, Formula c, Formula d, Literal p, Literal q, bool forward) {
  Key k{kMedial, {a.id(), b.id(), c.id(), d.id()}, {p.var, p.negative, q.var, q.negative}, forward, 0, 0, 0};
  return memo(k, [&] {
    const MedialSkeleton& sk = medial_skeleton();
    Substitution sigma{{kMedialBase, a},     {kMedialBase + 1, b},   {kMedialBase + 2, c},
                       {kMedialBase + 3, d}, {kMedialBase + 4, lit(p)}, {kMedialBase + 5, lit(q)}};
    ReplayHooks h;
    h.map = [&](Formula f) { return substitute(f, sigma); };
    h.identity = [&](Formula f) { return identity(f); };
    const Proof& src = forward ? sk.fwd : sk.bwd;
    LineId l = replay(src, b_, h).back();
    return b_.adapt(l, map_sequent(forward ? sk.sf : sk.sb, h.map));
  });
}

LineId Lemmas::thr_true(const Word& w) {
  return memo({kThrTrue, w, {}, 0, 0, 0, 0}, [&]() -> LineId {
    Formula t = thr(w, 0);
    if (w.empty()) return b_.cut(b_.ax1(), b_.ext_rl(t.ext()), one());
    Word r = tail(w);
    Formula body = mk_pdec(thr(r, 0), pv(w[0]), thr(r, -1));
    LineId l = b_.cut(thr_true(r), truth(3, thr(r, 0), pv(w[0]), thr(r, -1)), thr(r, 0));
    return b_.cut(l, b_.ext_rl(t.ext()), body);
  });
}

LineId Lemmas::thr_step(const Word& w, int k) {
  if (k < 0) throw LemmaError("thr_step: k must be non-negative");
  return memo({kThrStep, w, {}, k, 0, 0, 0}, [&]() -> LineId {
    Formula hi = thr(w, k + 1), lo = thr(w, k);
    if (k == 0) return b_.wl(thr_true(w), hi);
    if (w.empty()) return b_.wr(b_.cut(b_.ext_lr(hi.ext()), b_.ax0(), zero()), lo);
    Word r = tail(w);
    Literal p = pv(w[0]);
    Formula d = mk_pdec(thr(r, k + 1), p, thr(r, k));
    Formula d2 = mk_pdec(thr(r, k), p, thr(r, k - 1));
    LineId x = replacement(thr_step(r, k), thr_step(r, k - 1), d, d2);
    x = b_.cut(b_.ext_lr(hi.ext()), x, d);
    return b_.cut(x, b_.ext_rl(lo.ext()), d2);
  });
}

LineId Lemmas::thr_false(const Word& w, int k) {
  if (k >= 0 && k <= static_cast<int>(w.size())) throw LemmaError("thr_false: threshold is satisfiable");
  return memo({kThrFalse, w, {}, k, 0, 0, 0}, [&]() -> LineId {
    Formula t = thr(w, k);
    if (w.empty()) return b_.cut(b_.ext_lr(t.ext()), b_.ax0(), zero());
    Word r = tail(w);
    Literal p = pv(w[0]);
    Formula d = mk_pdec(thr(r, k), p, thr(r, k - 1));
    LineId x;
    if (k < 0) {
      x = b_.pos_pl(thr_false(r, k), thr_false(r, k - 1), d);
    } else {
      // both branches false: thr^r_k |- thr^r_{k-1} and thr^r_{k-1} |-
      x = b_.cut(truth(2, thr(r, k), p, thr(r, k - 1)), thr_step(r, k - 1), thr(r, k));
      x = b_.cut(x, thr_false(r, k - 1), thr(r, k - 1));
    }
    return b_.cut(b_.ext_lr(t.ext()), x, d);
  });
}

LineId Lemmas::thr_down(const Word& w, int from, int to) {
  if (to < 0 || from < to) throw LemmaError("thr_down: need from >= to >= 0");
  if (from == to) return identity(thr(w, to));
  LineId l = thr_step(w, from - 1);
  for (int k = from - 1; k > to; --k) l = b_.cut(l, thr_step(w, k - 1), thr(w, k));
  return l;
}

Equiv Lemmas::case_analysis(const Word& pvw, Var q, const Word& qv, int k) {
  return {case_analysis(pvw, q, qv, k, true), case_analysis(pvw, q, qv, k, false)};
}

LineId Lemmas::case_analysis(const Word& pvw, Var q, const Word& qv, int k, bool forward) {
  return memo({kCase, pvw, qv, k, forward, q, 0}, [&]() -> LineId {
    Word xw = concat(concat(pvw, {q}), qv);
    Word yw = concat(concat({q}, pvw), qv);
    Formula x = thr(xw, k), y = thr(yw, k);
    if (pvw.empty()) return identity(x);
    int n = static_cast<int>(xw.size());
    if (k == 0) return forward ? b_.wl(thr_true(yw), x) : b_.wl(thr_true(xw), y);
    if (k < 0 || k > n) return forward ? b_.wr(thr_false(xw, k), y) : b_.wr(thr_false(yw, k), x);

    Literal p = pv(pvw[0]), lq = pv(q);
    Word pr = tail(pvw);
    Word sw = concat(concat(pr, {q}), qv);       // S
    Word uw = concat(concat({q}, pr), qv);       // U
    Word tw = concat(pr, qv);                    // T
    Word vw = concat(concat({pvw[0]}, pr), qv);  // V
    auto S = [&](int j) { return thr(sw, j); };
    auto U = [&](int j) { return thr(uw, j); };
    auto T = [&](int j) { return thr(tw, j); };
    auto V = [&](int j) { return thr(vw, j); };

    // x == f1 == f3 == f4 == f5 == y
    Formula f1 = mk_pdec(S(k), p, S(k - 1));
    Formula f3 = mk_pdec(mk_pdec(T(k), lq, T(k - 1)), p, mk_pdec(T(k - 1), lq, T(k - 2)));
    Formula f4 = mk_pdec(mk_pdec(T(k), p, T(k - 1)), lq, mk_pdec(T(k - 1), p, T(k - 2)));
    Formula f5 = mk_pdec(V(k), lq, V(k - 1));

    // Steps 2 and 3 share one replacement: the inductive hypothesis and the unfolding
    // of U are chained below the decision on p.
    auto ih = [&](int j) {
      LineId c = case_analysis(pr, q, qv, j, forward);
      return forward ? b_.cut(c, b_.ext_lr(U(j).ext()), U(j)) : b_.cut(b_.ext_rl(U(j).ext()), c, U(j));
    };
    LineId m = medial(T(k), T(k - 1), T(k - 1), T(k - 2), p, lq, forward);
    if (forward) {
      LineId l = b_.cut(b_.ext_lr(x.ext()), replacement(ih(k), ih(k - 1), f1, f3), f1);
      l = b_.cut(l, m, f3);
      l = b_.cut(l, replacement(b_.ext_rl(V(k).ext()), b_.ext_rl(V(k - 1).ext()), f4, f5), f4);
      return b_.cut(l, b_.ext_rl(y.ext()), f5);
    }
    LineId l = b_.cut(b_.ext_lr(y.ext()), replacement(b_.ext_lr(V(k).ext()), b_.ext_lr(V(k - 1).ext()), f5, f4), f5);
    l = b_.cut(l, m, f4);
    l = b_.cut(l, replacement(ih(k), ih(k - 1), f3, f1), f3);
    return b_.cut(l, b_.ext_rl(x.ext()), f1);
  });
}

Equiv Lemmas::symmetry(const Word& w, const Word& target, int k) {
  return {symmetry(w, target, k, true), symmetry(w, target, k, false)};
}

LineId Lemmas::symmetry(const Word& w, const Word& target, int k, bool forward) {
  Word a = w, c = target;
  std::sort(a.begin(), a.end());
  std::sort(c.begin(), c.end());
  if (a != c) throw LemmaError("symmetry: target is not a permutation");
  // The longest suffix of target already in order in w stays in place.
  std::size_t keep = 0;
  for (std::size_t t = w.size(); t-- > 0 && keep < target.size();)
    if (w[t] == target[target.size() - 1 - keep]) ++keep;
  Word cur = w;
  std::optional<LineId> acc;
  for (std::size_t i = target.size() - keep; i-- > 0;) {
    Var q = target[i];
    std::size_t at = std::find(cur.begin(), cur.end(), q) - cur.begin();
    if (at == 0) continue;
    LineId e = case_analysis(prefix(cur, at), q, suffix(cur, at + 1), k, forward);
    if (acc) acc = forward ? b_.cut(*acc, e, thr(cur, k)) : b_.cut(e, *acc, thr(cur, k));
    else acc = e;
    cur = concat({q}, without(cur, at));
  }
  return acc ? *acc : identity(thr(w, k));
}

LineId Lemmas::merge(const Word& pvw, const Word& qv, int k, int l) {
  return memo({kMerge, pvw, qv, k, l, 0, 0}, [&]() -> LineId {
    Formula a = thr(pvw, k), q = thr(qv, l), goal = thr(concat(pvw, qv), k + l);
    if (pvw.empty()) {
      if (k == 0) return b_.wl(identity(q), a);
      LineId x = b_.cut(b_.ext_lr(a.ext()), b_.ax0(), zero());
      return b_.wr(b_.wl(x, q), goal);
    }
    Word pr = tail(pvw), rw = concat(pr, qv);
    Literal p = pv(pvw[0]);
    Formula d = mk_pdec(thr(pr, k), p, thr(pr, k - 1));
    Formula d2 = mk_pdec(thr(rw, k + l), p, thr(rw, k + l - 1));
    LineId x = replacement(merge(pr, qv, k, l), merge(pr, qv, k - 1, l), d, d2);
    x = b_.cut(b_.ext_lr(a.ext()), x, d);
    return b_.cut(x, b_.ext_rl(goal.ext()), d2);
  });
}

LineId Lemmas::split(const Word& pvw, const Word& qv, int k, int l) {
  if (l < 0 || k < -1) throw LemmaError("split: need l >= 0 and k >= -1");
  return memo({kSplit, pvw, qv, k, l, 0, 0}, [&]() -> LineId {
    Formula src = thr(concat(pvw, qv), k + l), a = thr(pvw, k + 1), q = thr(qv, l);
    if (k == -1) return b_.wl(b_.wr(thr_true(pvw), q), src);
    if (pvw.empty()) return b_.wr(thr_down(qv, k + l, l), a);
    Word pr = tail(pvw), rw = concat(pr, qv);
    Literal p = pv(pvw[0]);
    Formula d = mk_pdec(thr(rw, k + l), p, thr(rw, k + l - 1));
    Formula d2 = mk_pdec(thr(pr, k + 1), p, thr(pr, k));
    LineId x = replacement(split(pr, qv, k, l), split(pr, qv, k - 1, l), d, d2);
    x = b_.cut(b_.ext_lr(src.ext()), x, d);
    return b_.cut(x, b_.ext_rl(a.ext()), d2);
  });
}

Equiv Lemmas::unit(Var q) {
  return memo_equiv({kUnit, {}, {}, 0, 0, q, 0}, [&]() -> Equiv {
    Literal lq = pv(q);
    Formula p0 = mk_pdec(zero(), lq, one());
    Formula t1 = thr({}, 1), t0 = thr({}, 0);
    Formula body = mk_pdec(t1, lq, t0);
    Equiv e1{b_.cut(b_.ax1(), truth(4, zero(), lq, one()), one()),
             b_.cut(truth(1, zero(), lq, one()), b_.ax0(), zero())};
    Equiv e2 = replace_equiv(reverse(unfold(t1.ext())), reverse(unfold(t0.ext())), p0, body);
    Equiv e3 = reverse(unfold(thr({q}, 1).ext()));
    return b_.compose(b_.compose(e1, e2, p0), e3, body);
  });
}

LineId Lemmas::unit_in(const Word& qs, std::size_t j) {
  if (j >= qs.size()) throw LemmaError("unit_in: index out of range");
  return memo({kUnitIn, qs, {}, static_cast<int>(j), 0, 0, 0}, [&]() -> LineId {
    std::optional<LineId> cur;
    int c = 0;
    for (std::size_t i = qs.size(); i-- > 0;) {
      int own = i == j ? 1 : 0;
      if (!cur) {
        cur = own ? identity(thr({qs[i]}, 1)) : thr_true({qs[i]});
        c = own;
        continue;
      }
      Word rest = suffix(qs, i + 1);
      LineId m = b_.cut(*cur, merge({qs[i]}, rest, own, c), thr(rest, c));
      if (!own) m = b_.cut(thr_true({qs[i]}), m, thr({qs[i]}, 0));
      cur = m;
      c += own;
    }
    return b_.cut(unit(qs[j]).fwd, *cur, thr({qs[j]}, 1));
  });
}

LineId Lemmas::increment_left(const Word& w, std::size_t i, int k) {
  if (i >= w.size() || k < 0) throw LemmaError("increment_left: need i < |w| and k >= 0");
  Word rest = without(w, i);
  Word moved = concat({w[i]}, rest);
  LineId x = b_.cut(unit(w[i]).fwd, merge({w[i]}, rest, 1, k), thr({w[i]}, 1));
  if (i == 0) return x;
  Equiv e = case_analysis(prefix(w, i), w[i], suffix(w, i + 1), k + 1);
  return b_.cut(x, e.bwd, thr(moved, k + 1));
}

LineId Lemmas::increment_right(const Word& w, std::size_t i, int k) {
  if (i >= w.size() || k < 0) throw LemmaError("increment_right: need i < |w| and k >= 0");
  Word rest = without(w, i);
  Word moved = concat({w[i]}, rest);
  LineId x = b_.cut(split({w[i]}, rest, 0, k), unit(w[i]).bwd, thr({w[i]}, 1));
  if (i == 0) return x;
  Equiv e = case_analysis(prefix(w, i), w[i], suffix(w, i + 1), k);
  return b_.cut(e.fwd, x, thr(moved, k));
}

LineId Lemmas::thr1_split(const Word& qs) {
  return memo({kThr1Split, qs, {}, 0, 0, 0, 0}, [&]() -> LineId {
    if (qs.empty()) return b_.ext_lr(thr({}, 1).ext());
    if (qs.size() == 1) return identity(thr(qs, 1));
    std::vector<Formula> parts;
    LineId l = 0;
    for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
      Word rest = suffix(qs, i + 1);
      LineId s = split({qs[i]}, rest, 0, 1);
      l = i == 0 ? s : b_.cut(l, s, thr(suffix(qs, i), 1));
      parts.push_back(thr({qs[i]}, 1));
    }
    parts.push_back(thr({qs.back()}, 1));
    return or_right_fold(b_, l, parts);
  });
}

LineId Lemmas::xthr(Var q, const Word& qs) {
  return memo({kXthr, qs, {}, 0, 0, q, 0}, [&]() -> LineId {
    if (qs.empty()) return b_.wl(b_.cut(b_.ext_lr(thr({}, 1).ext()), b_.ax0(), zero()), pos(q));
    Literal lq = pv(q);
    std::vector<Formula> parts;
    std::optional<LineId> acc;
    Formula fold;
    for (Var qi : qs) {
      LineId li = b_.cut(unit(qi).bwd, truth(4, zero(), lq, pos(qi)), pos(qi));
      Formula ti = thr({qi}, 1);
      if (!acc) {
        acc = li;
        fold = ti;
      } else {
        fold = mk_or(fold, ti);
        acc = b_.or_l(*acc, li, fold);
      }
    }
    return b_.cut(thr1_split(qs), *acc, fold);
  });
}

LineId Lemmas::two_in_hole(const Word& qs) {
  return memo({kTwo, qs, {}, 0, 0, 0, 0}, [&]() -> LineId {
    if (qs.empty()) return b_.cut(b_.ext_lr(thr({}, 2).ext()), b_.ax0(), zero());
    Var q = qs[0];
    Word qr = tail(qs);
    LineId a = b_.cut(split({q}, qr, 0, 2), unit(q).bwd, thr({q}, 1));
    LineId bb = b_.cut(split({q}, qr, 1, 1), thr_false({q}, 2), thr({q}, 2));
    LineId x = b_.cut(a, xthr(q, qr), pos(q));
    x = b_.cut(bb, x, thr(qr, 1));
    return b_.cut(x, two_in_hole(qr), thr(qr, 2));
  });
}

LineId Lemmas::refthr_truth(int item, const Word& w, int k, Formula a, Formula b) {
  if (item < 1 || item > 4) throw LemmaError("refthr_truth: item must be 1..4");
  return memo({kRefthr, w, {}, k, item, a.id(), b.id()}, [&]() -> LineId {
    Formula r = ext(refthr_var(w, k, a, b)), t = thr(w, k);
    if (w.empty()) {
      if (k == 0) {
        Formula ab = mk_or(a, b);
        switch (item) {
          case 1:
            return b_.wl(b_.wr(thr_true({}), a), r);
          case 2:
            return b_.cut(b_.ext_lr(r.ext()), b_.or_l(identity(a), identity(b), ab), ab);
          case 3:
            return b_.cut(b_.or_r(identity(a), ab), b_.ext_rl(r.ext()), ab);
          default:
            return b_.wl(b_.cut(b_.or_r(identity(b), ab), b_.ext_rl(r.ext()), ab), t);
        }
      }
      switch (item) {
        case 1:
          return b_.wr(b_.ext_lr(r.ext()), t);
        case 2:
          return b_.wr(b_.ext_lr(r.ext()), b);
        case 3:
          return b_.ext_rl(r.ext());
        default:
          return b_.wr(b_.wl(b_.cut(b_.ext_lr(t.ext()), b_.ax0(), zero()), b), r);
      }
    }
    Word rw = tail(w);
    Literal p = pv(w[0]);
    Formula r0 = ext(refthr_var(rw, k, a, b)), r1 = ext(refthr_var(rw, k - 1, a, b));
    Formula dr = mk_pdec(r0, p, r1), dt = mk_pdec(thr(rw, k), p, thr(rw, k - 1));
    switch (item) {
      case 1: {
        LineId x = replacement(refthr_truth(1, rw, k, a, b), refthr_truth(1, rw, k - 1, a, b), dr, dt);
        x = b_.cut(b_.ext_lr(r.ext()), x, dr);
        return b_.cut(x, b_.ext_rl(t.ext()), dt);
      }
      case 2: {
        LineId x = b_.pos_pl(refthr_truth(2, rw, k, a, b), refthr_truth(2, rw, k - 1, a, b), dr);
        return b_.cut(b_.ext_lr(r.ext()), x, dr);
      }
      case 3: {
        LineId ih = refthr_truth(3, rw, k, a, b);
        return b_.cut(b_.pos_pr(ih, ih, dr), b_.ext_rl(r.ext()), dr);
      }
      default: {
        LineId x = replacement(refthr_truth(4, rw, k, a, b), refthr_truth(4, rw, k - 1, a, b), dt, dr);
        x = b_.cut(b_.ext_lr(t.ext()), x, dt);
        return b_.cut(x, b_.ext_rl(r.ext()), dr);
      }
    }
  });
}

LineId Lemmas::negtrans_truth(int item, Formula na, Var p, Formula nb) {
  if (item < 1 || item > 4) throw LemmaError("negtrans_truth: item must be 1..4");
  return memo({kNegtrans, {}, {}, item, 0, na.id(), nb.id() ^ (p << 1)}, [&]() -> LineId {
    Formula l = mk_pdec(zero(), {p, true}, na), r = mk_pdec(zero(), {p, false}, nb);
    Formula nd = mk_or(l, r);
    switch (item) {
      case 1:
        return b_.or_l(b_.pos_pl(b_.ax0(), identity(na), l), b_.pos_pl(b_.ax0(), b_.id({p, false}), r), nd);
      case 2:
        return b_.or_l(b_.pos_pl(b_.ax0(), b_.neg_l(p), l), b_.pos_pl(b_.ax0(), identity(nb), r), nd);
      case 3:
        return b_.or_r(b_.pos_pr(b_.neg_r(p), identity(na), l), nd);
      default:
        return b_.or_r(b_.pos_pr(b_.id({p, false}), identity(nb), r), nd);
    }
  });
}

LineId Lemmas::substitute_proof(const Proof& src, const Substitution& sigma) {
  ReplayHooks h;
  h.map = [&](Formula f) { return substitute(f, sigma); };
  h.identity = [&](Formula f) { return identity(f); };
  LineId l = replay(src, b_, h).back();
  return b_.adapt(l, map_sequent(src.conclusion(), h.map));
}

}  // namespace lndt
