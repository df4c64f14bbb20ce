#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lndt/checker.hpp"
#include "lndt/nbp.hpp"
#include "lndt/proof_text.hpp"
#include "lndt/semantics.hpp"

namespace lndt::testing {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string fixture(const std::string& name) { return slurp(std::string(LNDT_TEST_DIR) + "/fixtures/" + name); }
inline std::string golden(const std::string& name) { return slurp(std::string(LNDT_TEST_DIR) + "/golden/" + name); }

inline Word iota(int n, Var from = 1) {
  Word w;
  for (int i = 0; i < n; ++i) w.push_back(from + static_cast<Var>(i));
  return w;
}

inline int popcount_of(const Assignment& a, const Word& w) {
  int c = 0;
  for (Var v : w) c += a(v);
  return c;
}

// Proof that checks and whose every line is valid under the oracle.
inline ::testing::AssertionResult checks_and_sound(const Proof& p, int cap = kDefaultOracleCap) {
  CheckResult c = check_proof(p);
  if (!c) return ::testing::AssertionFailure() << c.message();
  SoundnessReport s = check_soundness(p, cap);
  if (!s.ok) return ::testing::AssertionFailure() << "line L" << s.line + 1 << " is not valid";
  if (s.skipped) return ::testing::AssertionFailure() << s.skipped << " lines above the oracle cap";
  return ::testing::AssertionSuccess();
}

// Every way of redirecting one premise reference of one line to another earlier line.
inline std::vector<Proof> premise_mutants(const Proof& p) {
  std::vector<Proof> out;
  for (std::size_t i = 0; i < p.lines.size(); ++i)
    for (std::size_t j = 0; j < p.lines[i].just.premises.size(); ++j)
      for (std::uint32_t t = 0; t < i; ++t) {
        if (t == p.lines[i].just.premises[j]) continue;
        if (same_sequent(p.lines[t].seq, p.lines[p.lines[i].just.premises[j]].seq)) continue;
        Proof q = p;
        q.lines[i].just.premises[j] = t;
        out.push_back(std::move(q));
      }
  return out;
}

// Random NBP over vars. Ordered programs label layer i with order[i] and only point
// downwards, so they are read-once; unordered ones pick labels freely.
inline Nbp random_nbp(std::mt19937_64& rng, const Word& vars, int inner, bool ordered) {
  Nbp g;
  std::uniform_int_distribution<int> coin(0, 1);
  Word order = vars;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> layer(inner);
  for (int u = 0; u < inner; ++u) {
    if (ordered) {
      std::size_t lo = u == 0 ? 0 : layer[u - 1];
      layer[u] = std::min(order.size() - 1, lo + (u == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, 1)(rng)));
      g.add_node(order[layer[u]]);
    } else {
      g.add_node(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]);
    }
  }
  std::uint32_t s0 = g.add_sink(false), s1 = g.add_sink(true);
  for (int u = 0; u < inner; ++u) {
    std::vector<std::uint32_t> targets{s0, s1};
    for (int v = u + 1; v < inner; ++v)
      if (!ordered || layer[v] > layer[u]) targets.push_back(static_cast<std::uint32_t>(v));
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    for (bool bit : {false, true}) {
      int fan = 1 + (coin(rng) && coin(rng));
      for (int f = 0; f < fan; ++f) g.add_edge(static_cast<std::uint32_t>(u), targets[pick(rng)], bit);
    }
  }
  g.set_root(0);
  return g;
}

// Positive extension-free formulas over vars of depth exactly d (atoms have depth 0).
inline std::vector<std::vector<Formula>> positive_formulas_by_depth(const Word& vars, int max_depth) {
  std::vector<std::vector<Formula>> by{{zero(), one()}};
  for (Var v : vars) by[0].push_back(pos(v));
  std::vector<Formula> upto = by[0];
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<Formula> level;
    auto add = [&](Formula a, Formula b) {
      level.push_back(mk_or(a, b));
      for (Var v : vars) level.push_back(mk_pdec(a, {v, false}, b));
    };
    for (Formula a : upto)
      for (Formula b : upto)
        if (std::find(by[d - 1].begin(), by[d - 1].end(), a) != by[d - 1].end() ||
            std::find(by[d - 1].begin(), by[d - 1].end(), b) != by[d - 1].end())
          add(a, b);
    by.push_back(level);
    upto.insert(upto.end(), level.begin(), level.end());
  }
  return by;
}

inline Dnf random_dnf(std::mt19937_64& rng, int max_vars, int max_terms) {
  int nv = std::uniform_int_distribution<int>(1, max_vars)(rng);
  int nt = std::uniform_int_distribution<int>(1, max_terms)(rng);
  Dnf d(nt);
  for (auto& t : d) {
    int len = std::uniform_int_distribution<int>(1, nv)(rng);
    for (int i = 0; i < len; ++i)
      t.push_back({static_cast<Var>(std::uniform_int_distribution<int>(0, nv - 1)(rng)),
                   std::bernoulli_distribution(0.5)(rng)});
  }
  return d;
}

}  // namespace lndt::testing
