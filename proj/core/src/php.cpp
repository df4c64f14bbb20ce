#include "lndt/php.hpp"

namespace lndt {

namespace {

void require(int n) {
  if (n < 1) throw LemmaError("php: n must be at least 1");
}

std::vector<Formula> atoms(const Word& w) {
  std::vector<Formula> out;
  for (Var v : w) out.push_back(pos(v));
  return out;
}

std::vector<Formula> rphp_parts(int n) {
  std::vector<Formula> out;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n + 1; ++i)
      for (int i2 = i + 1; i2 <= n + 1; ++i2)
        out.push_back(mk_pdec(zero(), {php_var(n, i, j), false}, pos(php_var(n, i2, j))));
  return out;
}

Word rows_from(int n, int i) {
  Word out;
  for (int t = i; t <= n + 1; ++t) out = concat(out, php_row(n, t));
  return out;
}

Word columns_from(int n, int j) {
  Word out;
  for (int t = j; t <= n; ++t) out = concat(out, php_column(n, t));
  return out;
}

}  // namespace

Var php_var(int n, int i, int j) { return static_cast<Var>((i - 1) * n + (j - 1)); }

Word php_row(int n, int i) {
  Word w;
  for (int j = 1; j <= n; ++j) w.push_back(php_var(n, i, j));
  return w;
}

Word php_column(int n, int j) {
  Word w;
  for (int i = 1; i <= n + 1; ++i) w.push_back(php_var(n, i, j));
  return w;
}

Word php_rows(int n) { return rows_from(n, 1); }
Word php_columns(int n) { return columns_from(n, 1); }

Sequent php_sequent(int n) {
  require(n);
  Sequent s;
  for (int i = 1; i <= n + 1; ++i) s.ant.push_back(or_fold(atoms(php_row(n, i))));
  s.suc.push_back(or_fold(rphp_parts(n)));
  return s;
}

LineId php_left(Lemmas& lm, int n) {
  require(n);
  ProofBuilder& b = lm.builder();
  // thr^{P_1}_1, ..., thr^{P_{n+1}}_1 |- thr^P_{n+1}
  LineId cur = lm.identity(thr(php_row(n, n + 1), 1));
  for (int i = n; i >= 1; --i) {
    Word rest = rows_from(n, i + 1);
    cur = b.cut(cur, lm.merge(php_row(n, i), rest, 1, n + 1 - i), thr(rest, n + 1 - i));
  }
  for (int i = 1; i <= n + 1; ++i) {
    Word row = php_row(n, i);
    std::vector<Formula> parts = atoms(row);
    LineId acc = lm.unit_in(row, 0);
    Formula fold = parts[0];
    for (std::size_t j = 1; j < parts.size(); ++j) {
      fold = mk_or(fold, parts[j]);
      acc = b.or_l(acc, lm.unit_in(row, j), fold);
    }
    cur = b.cut(acc, cur, thr(row, 1));
  }
  return cur;
}

LineId php_transpose(Lemmas& lm, int n) {
  require(n);
  return lm.symmetry(php_rows(n), php_columns(n), n + 1, true);
}

LineId php_right(Lemmas& lm, int n) {
  require(n);
  ProofBuilder& b = lm.builder();
  LineId cur = 0;
  for (int j = 1; j < n; ++j) {
    Word rest = columns_from(n, j + 1);
    LineId s = lm.split(php_column(n, j), rest, 1, n + 1 - j);
    cur = j == 1 ? s : b.cut(cur, s, thr(columns_from(n, j), n + 2 - j));
  }
  if (n == 1) cur = lm.identity(thr(php_column(n, 1), 2));
  for (int j = 1; j <= n; ++j) cur = b.cut(cur, lm.two_in_hole(php_column(n, j)), thr(php_column(n, j), 2));
  std::vector<Formula> parts = rphp_parts(n);
  Formula acc = parts[0];
  for (std::size_t t = 1; t < parts.size(); ++t) {
    acc = mk_or(acc, parts[t]);
    cur = b.or_r(cur, acc);
  }
  return cur;
}

Proof gen_php_left(int n) {
  ProofBuilder b;
  Lemmas lm(b);
  return finish_proof(b, php_left(lm, n));
}

Proof gen_php_transpose(int n) {
  ProofBuilder b;
  Lemmas lm(b);
  return finish_proof(b, php_transpose(lm, n));
}

Proof gen_php_right(int n) {
  ProofBuilder b;
  Lemmas lm(b);
  return finish_proof(b, php_right(lm, n));
}

Proof gen_php(int n) {
  ProofBuilder b;
  Lemmas lm(b);
  LineId left = php_left(lm, n), mid = php_transpose(lm, n), right = php_right(lm, n);
  // The assembly is emitted as new lines even if an inner lemma already concludes
  // the same sequent, so the result always has the three-part shape.
  b.set_dedup(false);
  LineId l = b.cut(left, mid, thr(php_rows(n), n + 1));
  l = b.cut(l, right, thr(php_columns(n), n + 1));
  Sequent target = php_sequent(n);
  l = b.adapt(l, target);
  return finish_proof(b, l, &target);
}

}  // namespace lndt
