#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "eos/orders.hpp"

namespace eos {

/* K_m = Q(alpha), alpha^n = m. */
struct pure_field_params {
    int n;
    int64_t m;
    int64_t N;   // n(n-1)/2

    pure_field_params(int n, int64_t m);
};

struct pure_field_invariants {
    pure_field_params params;
    bool irreducible;
    bool alpha_monogenic;
    mpz_class g;            // [O_K : Z[alpha]]
    mpz_class power_disc;   // disc(Z[alpha])
    equation_order maximal_order;
};

/* X^n - m irreducible over Q: m is not a p-th power for any prime p | n,
 * and m != -4k^4 when 4 | n. */
bool binomial_irreducible(int n, int64_t m);

/* m squarefree and v_p(m^p - m) == 1 for every prime p | n.
 * Throws precondition_error for reducible X^n - m. */
bool alpha_monogenic(int n, int64_t m);

/* disc(X^n - m) = (-1)^(n(n-1)/2) n^n (-m)^(n-1) */
mpz_class pure_power_disc(int n, int64_t m);

/* Saturates Z[alpha] at the primes dividing n (the only primes that can
 * divide g). Requires X^n - m irreducible and m squarefree. */
pure_field_invariants pure_index(int n, int64_t m, uint64_t enumeration_limit = default_enumeration_limit);

}  // namespace eos
