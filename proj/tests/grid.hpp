#pragma once

#include <algorithm>
#include <string>

#include "lndt/axioms.hpp"
#include "lndt/generators.hpp"
#include "lndt/php.hpp"

namespace lndt::testing {

inline std::string word_string(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + var_name(w[i]);
  return s + "]";
}

// Calls f(name, proof-producing callable) for every generator instance over words of
// length at most max_len. Callables are invoked by the consumer so exceptions can be
// attributed to one instance.
template <class F>
void for_each_generator(int max_len, F&& f) {
  auto tag = [](const std::string& g, const Word& w, int k) { return g + word_string(w) + " k=" + std::to_string(k); };
  auto each = [&](const std::string& name, auto make, int count) {
    f(name, [=] {
      auto arr = make();
      return std::vector<Proof>(arr.begin(), arr.end());
    }, count);
  };
  auto one = [&](const std::string& name, auto make) { f(name, [=] { return std::vector<Proof>{make()}; }, 1); };

  Formula a = pos(20), b = pos(21), c = pos(22), d = pos(23);
  Literal p{24, false}, q{25, false};
  one("identity pdec", [=] { return gen_identity(mk_pdec(a, p, mk_or(b, c))); });
  each("truth", [=] { return gen_truth(a, p, b); }, 4);
  each("truth nested", [=] { return gen_truth(mk_or(a, c), p, mk_pdec(b, q, d)); }, 4);
  each("medial", [=] { return gen_pos_medial(a, b, c, d, p, q); }, 2);
  each("medial shared", [=] { return gen_pos_medial(a, b, b, d, p, q); }, 2);
  one("replacement", [=] { return gen_replacement({c}, {d}, a, mk_or(a, c), b, mk_or(b, d), p); });
  each("negtrans truth", [=] { return gen_negtrans_truth(a, 24, b); }, 4);

  for (int n = 0; n <= max_len; ++n) {
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(static_cast<Var>(i + 1));
    Word rev(w.rbegin(), w.rend()), rot = w;
    if (!rot.empty()) std::rotate(rot.begin(), rot.begin() + 1, rot.end());

    for (int k = 0; k <= n + 1; ++k) {
      one(tag("identity thr", w, k), [=] { return gen_identity(thr(w, k), instantiate_thr(w, k)); });
      each(tag("thr monotone", w, k), [=] { return gen_thr_monotone(w, k); }, 3);
      each(tag("symmetry rev", w, k), [=] { return gen_symmetry(w, rev, k); }, 2);
      each(tag("symmetry rot", w, k), [=] { return gen_symmetry(w, rot, k); }, 2);
      each(tag("refthr truth", w, k), [=] { return gen_refthr_truth(w, k, a, mk_or(b, pos(1))); }, 4);
    }
    each(tag("refthr truth", w, -1), [=] { return gen_refthr_truth(w, -1, a, b); }, 4);

    for (int i = 0; i < n; ++i) {
      Word pv(w.begin(), w.begin() + i), qv(w.begin() + i + 1, w.end());
      Var qq = w[i];
      for (int k = -1; k <= n + 1; ++k)
        each(tag("case analysis " + var_name(qq), concat(pv, qv), k), [=] { return gen_case_analysis(pv, qq, qv, k); },
             2);
      for (int k = 0; k <= n; ++k)
        each(tag("thresh increment " + std::to_string(i), w, k),
             [=] { return gen_thresh_increment(w, static_cast<std::size_t>(i), k); }, 2);
      each(tag("unit thr " + std::to_string(i), w, 1), [=] { return gen_unit_thr(w, static_cast<std::size_t>(i)); }, 3);
    }

    for (int i = 0; i <= n; ++i) {
      Word pv(w.begin(), w.begin() + i), qv(w.begin() + i, w.end());
      for (int k = -1; k <= i + 1; ++k)
        for (int l = 0; l <= n - i + 1; ++l) {
          std::string t = tag("merge/split " + word_string(pv) + word_string(qv), {}, k) + " l=" + std::to_string(l);
          one("merge " + t, [=] { return gen_merge(pv, qv, k, l); });
          one("split " + t, [=] { return gen_split(pv, qv, k, l); });
        }
    }
    one(tag("two in hole", w, 2), [=] { return gen_two_in_hole(w); });
  }

  for (int n = 1; n <= 2; ++n) {
    one("php left " + std::to_string(n), [=] { return gen_php_left(n); });
    one("php transpose " + std::to_string(n), [=] { return gen_php_transpose(n); });
    one("php right " + std::to_string(n), [=] { return gen_php_right(n); });
    one("php " + std::to_string(n), [=] { return gen_php(n); });
  }
}

}  // namespace lndt::testing
