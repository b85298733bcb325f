#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eos/orders.hpp"

namespace eos {

/* f_t(X) = X^n + t h(X), h = c_{n-1} X^{n-1} + ... + c_0 with c_0 != 0. */
struct scaled_family {
    int n;
    std::vector<int64_t> h;   // c_0 .. c_{n-1}

    scaled_family(int n, std::vector<int64_t> h);
    monic_polynomial at(int64_t t) const;
};

/* q divides every non-leading coefficient and q^2 does not divide c_0. */
bool eisenstein_at(monic_polynomial const & f, int64_t q);

/* |t| > 1, t squarefree, gcd(t, c_0) = 1 */
bool in_T_hsf(scaled_family const & fam, int64_t t);

/* X^n + tX + t: disc = t^(n-1) L_n(t), L_n(t) = C0 + C1 t. */
struct trinomial_data {
    int n;
    int64_t t;
    mpz_class C0;   // (-1)^(n(n-1)/2) n^n
    mpz_class C1;   // (-1)^((n-1)(n-2)/2) (n-1)^(n-1)
    mpz_class L;
    mpz_class disc;
};

trinomial_data trinomial_data_of(int n, int64_t t);

/* Throws consistency_error if disc differs from the resultant path. */
void check_trinomial_disc(trinomial_data const & d);

/* |t| > 1, gcd(t, n(n-1)) = 1 and t L_n(t) squarefree. */
bool in_Tn(int n, int64_t t);

struct index_check {
    mpz_class g;
    std::vector<int64_t> candidates;   // primes whose square divides the discriminant
    equation_order maximal_order;
};

/* [O : Z[alpha_t]] for X^n + tX + t, saturating at every prime whose
 * square divides the discriminant. Requires in_Tn(n, t); the result is
 * expected to be 1. */
index_check trinomial_monogenic_check(int n, int64_t t);

/* X^n + c^(n-1) t X + c^n t, with root c * alpha_t */
monic_polynomial twist_polynomial(int n, int64_t c, int64_t t);

/* [Z[alpha_t] : Z[c alpha_t]] with Z[alpha_t] checked maximal first.
 * Requires in_Tn(n, t), c >= 2, gcd(t, c) = 1. */
mpz_class twist_index_check(int n, int64_t c, int64_t t);

/* #{a mod l^2 : l^2 | a L_n(a)}, by brute force, compared with the closed
 * form (l | n -> l, l | n-1 -> 1, else 2); a mismatch is a
 * consistency_error. */
int64_t rho_ell2(int n, int64_t ell);
int64_t rho_ell2_closed_form(int n, int64_t ell);

struct euler_product {
    int n;
    int64_t cutoff;
    double value;   // product over l <= cutoff
    double lower;   // value * (1 - tail bound)
    double upper;   // = value, every remaining factor is < 1
};

euler_product euler_product_S(int n, int64_t cutoff);

/* #{1 <= t <= T : t L_n(t) squarefree} at each checkpoint. */
std::vector<int64_t> squarefree_value_counts(int n, int64_t t_max, std::vector<int64_t> const & xs);

/* q does not divide c n, and q^(p-1) != 1 mod p^2 for every prime p | n. */
bool thin_Pn_member(int n, int64_t c, int64_t q);

struct thin_report {
    bool alpha_monogenic_of_q;
    mpz_class g_of_q;                // [O : Z[alpha_q]] by saturation
    mpz_class distinguished_index;   // [Z[alpha_q] : Z[c alpha_q]]
};

thin_report thin_family_check(int n, int64_t c, int64_t q);

struct scaled_entry {
    int64_t t;
    mpz_class g;   // index over the checked primes
    std::vector<int64_t> checked;
    std::vector<int64_t> unchecked;   // p^2 | disc but p > bound
    std::string unfactored;           // cofactor left after removing small primes, if too large
    bool eisenstein_ok;               // f_t is Eisenstein at every q | t
};

struct scaled_scan_report {
    scaled_family family;
    int64_t N;
    int64_t prime_bound;
    std::vector<scaled_entry> entries;
    std::map<int64_t, int64_t> g_counts;   // observed index values
    std::map<int64_t, bool> g_nontrivial;  // Kummer nontriviality for each g >= 2
    bool hypotheses_hold;                  // all observed g >= 2 are Kummer nontrivial
};

inline constexpr int64_t default_family_prime_bound = 50;

/* g(t) over t in T_{h,sf} with t_lo <= t <= t_hi. */
scaled_scan_report scaled_family_scan(scaled_family const & fam, int64_t t_lo, int64_t t_hi,
                                      int64_t prime_bound = default_family_prime_bound,
                                      uint64_t enumeration_limit = default_enumeration_limit);

}  // namespace eos
