#pragma once

#include "lndt/generators.hpp"

namespace lndt {

// Pigeon i in 1..n+1, hole j in 1..n.
Var php_var(int n, int i, int j);
Word php_row(int n, int i);     // P_i
Word php_column(int n, int j);  // P^j
Word php_rows(int n);           // P
Word php_columns(int n);        // P^T

// or(P_1), ..., or(P_{n+1}) |- or over j, i < i' of pdec(0, p_{i,j}, p_{i',j})
Sequent php_sequent(int n);

LineId php_left(Lemmas& lm, int n);       // LPHP_n |- thr^P_{n+1}
LineId php_transpose(Lemmas& lm, int n);  // thr^P_{n+1} |- thr^{P^T}_{n+1}
LineId php_right(Lemmas& lm, int n);      // thr^{P^T}_{n+1} |- RPHP_n

Proof gen_php_left(int n);
Proof gen_php_transpose(int n);
Proof gen_php_right(int n);
Proof gen_php(int n);

}  // namespace lndt
