#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eos/errors.hpp"
#include "eos/purefield.hpp"

namespace eos {

/* Kummer data of g^(1/N) over Q(zeta_2N). g = h^d, b = N / gcd(N, d),
 * so Q(g^(1/N)) = Q(h^(a/b)) with a = d / gcd(N, d). */
struct kummer_data {
    int64_t g;
    int64_t N;
    int64_t h;
    int64_t d;
    int64_t b;
    bool nontrivial;
    /* filled in by estimate_delta */
    std::optional<int64_t> l_over_k;
    std::optional<mpq_class> delta;
    std::optional<double> split_fraction;
    int64_t sample_size = 0;
};

kummer_data kummer_data_of(int64_t g, int64_t N);

/* q not dividing 2Ng, q == 1 mod 2N, and g not an N-th power mod q. */
bool in_Pg(int64_t q, int64_t g, int64_t N);

std::vector<int64_t> enumerate_Pg(int64_t g, int64_t N, int64_t limit);

/* The split fraction sat between two divisors of N too closely to snap. */
class ambiguous_snap_error : public resource_error {
  public:
    ambiguous_snap_error(double fraction, int64_t first, int64_t second);
    double fraction;
    int64_t first, second;
};

inline constexpr int64_t min_prime_budget = 100000;

/* [L:K] from the fraction of primes q == 1 mod 2N (q not dividing 2Ng,
 * q <= prime_budget) at which g is an N-th power: that fraction tends to
 * 1/[L:K], and is snapped to the nearest 1/e with e | N. */
kummer_data estimate_delta(int64_t g, int64_t N, int64_t prime_budget);

struct obstruction_certificate {
    int n;
    int64_t m;
    int64_t g;
    int64_t q;
    int64_t witness;   // g^((q-1)/N) mod q, never 1
    int64_t N;
};

/* Smallest prime q | m with q in P_g, where g = g(m) >= 2. */
std::optional<obstruction_certificate> abs_certificate(int n, int64_t m);
std::optional<obstruction_certificate> abs_certificate(pure_field_invariants const & inv);

/* True iff the certificate's defining relations hold. */
bool certificate_is_sound(obstruction_certificate const & c);

struct coset_report {
    int64_t trials;
    int64_t failures;
    /* det M(alpha)^((q-1)/gcd(N, q-1)) mod q: the N-th power class of f(alpha) */
    int64_t base_class;
};

/* Samples beta = b_0 + b_1 alpha + ... + b_{n-1} alpha^(n-1) over
 * Z[x]/(x^n - m) mod q with b_1 a unit (a local generator) and checks
 * that det M(beta) / det M(alpha) is an N-th power mod q. With
 * allow_degenerate, b_1 = 0 is also drawn; such beta are not generators
 * and are expected to fail. Uses std::mt19937_64 seeded with seed. */
coset_report local_coset_check(int n, int64_t m, int64_t q, int64_t trials, uint64_t seed,
                               bool allow_degenerate = false);

/* -1 in (F_q^x)^N; requires q == 1 mod 2N. */
bool minus_one_residue_check(int64_t q, int64_t N);

}  // namespace eos
