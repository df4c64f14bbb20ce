#include "lndt/corpus.hpp"

#include <algorithm>

#include "lndt/builder.hpp"
#include "lndt/generators.hpp"
#include "lndt/search.hpp"
#include "lndt/semantics.hpp"
#include "lndt/transform.hpp"

namespace lndt {

namespace {

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Formula random_positive_formula(std::mt19937_64& rng, const Word& vars, int depth) {
  if (depth <= 0 || coin(rng, 0.3)) {
    int r = std::uniform_int_distribution<int>(0, 9)(rng);
    if (r == 0) return zero();
    if (r == 1) return one();
    return pos(pick(rng, vars));
  }
  Formula a = random_positive_formula(rng, vars, depth - 1);
  Formula b = random_positive_formula(rng, vars, depth - 1);
  if (coin(rng, 0.4)) return mk_or(a, b);
  return mk_pdec(a, {pick(rng, vars), false}, b);
}

Sequent random_valid_sequent(std::mt19937_64& rng, const Word& vars, int depth) {
  for (;;) {
    Sequent s;
    if (coin(rng)) {
      // A on the left, something implied by A on the right
      Formula a = random_positive_formula(rng, vars, depth);
      Formula c = random_positive_formula(rng, vars, depth - 1);
      Formula r;
      switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:
          r = mk_or(a, c);
          break;
        case 1:
          r = mk_pdec(a, {pick(rng, vars), false}, c);
          break;
        default:
          r = mk_pdec(c, {pick(rng, vars), false}, a);
          s.ant.push_back(pos(r.lit().var));
          break;
      }
      s.ant.push_back(a);
      s.suc.push_back(r);
    } else {
      int nl = std::uniform_int_distribution<int>(0, 2)(rng), nr = std::uniform_int_distribution<int>(1, 2)(rng);
      for (int i = 0; i < nl; ++i) s.ant.push_back(random_positive_formula(rng, vars, depth));
      for (int i = 0; i < nr; ++i) s.suc.push_back(random_positive_formula(rng, vars, depth));
    }
    if (!sequent_valid(s, {})) return s;
  }
}

Proof depositivise(const Proof& p, std::mt19937_64& rng, int detours) {
  ProofBuilder b(Dialect::elndt());
  b.set_dedup(false);
  b.axioms().merge(p.axioms);
  std::uint32_t next = 0;
  for (const AxiomEntry& e : p.axioms.entries())
    if (e.var->family == Family::Plain) next = std::max(next, e.var->index + 1);

  Word vars;
  for (const ProofLine& l : p.lines)
    for (const auto* side : {&l.seq.ant, &l.seq.suc})
      for (Formula f : *side)
        for (Var v : vars_in(f)) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.empty()) vars.push_back(0);

  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < p.lines.size(); ++i)
    if (!p.lines[i].seq.suc.empty() || !p.lines[i].seq.ant.empty()) chosen.push_back(i);
  std::shuffle(chosen.begin(), chosen.end(), rng);
  if (chosen.size() > static_cast<std::size_t>(detours)) chosen.resize(detours);
  std::sort(chosen.begin(), chosen.end());

  SearchOptions general;
  general.general = true;
  auto prove = [&](const Sequent& s) {
    LineId l = search_into(b, s, general);
    return b.adapt(l, s);
  };

  ReplayHooks h;
  h.after = [&](std::size_t i, LineId l) -> LineId {
    if (!std::binary_search(chosen.begin(), chosen.end(), i)) return l;
    Sequent s = b.seq(l);
    bool right = !s.suc.empty() && (s.ant.empty() || coin(rng));
    Formula c = right ? pick(rng, s.suc) : pick(rng, s.ant);
    Literal q{pick(rng, vars), false};
    Formula d = mk_dec(c, q, c);
    LineId cd = prove({{c}, {d}}), dc = prove({{d}, {c}});
    Formula mid = d;
    if (coin(rng)) {
      const ExtVar* e = plain_var(next++);
      b.axioms().define(e, d);
      mid = ext(e);
      cd = b.cut(cd, b.ext_rl(e), d);
      dc = b.cut(b.ext_lr(e), dc, d);
    }
    LineId out = right ? b.cut(b.cut(l, cd, c), dc, mid) : b.cut(cd, b.cut(dc, l, c), mid);
    if (coin(rng) && !s.ant.empty()) {
      Formula w = pick(rng, s.ant);
      out = b.cl(b.wl(out, w), w);
    }
    return b.adapt(out, s);
  };
  LineId root = replay(p, b, h).back();
  root = b.adapt(root, p.conclusion());
  return finish_proof(b, root, &p.conclusion());
}

std::vector<CorpusEntry> make_corpus(const CorpusOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<CorpusEntry> out;
  SearchOptions general;
  general.general = true;
  while (out.size() < opt.count) {
    int m = std::uniform_int_distribution<int>(1, std::max(1, opt.max_vars))(rng);
    Word vars;
    for (int i = 0; i < m; ++i) vars.push_back(static_cast<Var>(i));
    Sequent s = random_valid_sequent(rng, vars, opt.depth);
    SearchResult r = prove_by_search(s, {}, general);
    if (!r.proof) continue;
    int detours = std::uniform_int_distribution<int>(1, std::max(1, opt.detours))(rng);
    Proof p = depositivise(*r.proof, rng, detours);
    if (proof_size(p) > opt.max_tokens) continue;
    Word used = support(s, {});
    out.push_back({std::move(p), s, static_cast<int>(used.size())});
  }
  return out;
}

}  // namespace lndt
