#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eos {

/* Prime decomposition of a nonzero integer.
 *   sign * prod(prime^exponent) == value, primes strictly increasing. */
struct Factorization {
    int64_t value = 1;
    int sign = 1;
    std::vector<std::pair<int64_t, int>> factors;

    /* recomposes the value from sign and factors (checked arithmetic) */
    int64_t recompose() const;
    std::vector<int64_t> primes() const;
};

/* All primes in [2, limit], ascending. limit < 2 gives an empty list. */
std::vector<int64_t> prime_sieve(int64_t limit);

/* Odd-only Eratosthenes table answering primality for 0 <= x <= limit. */
class prime_table {
  public:
    explicit prime_table(int64_t limit);

    bool is_prime(int64_t x) const;
    int64_t limit() const { return limit_; }
    std::vector<int64_t> primes() const;

  private:
    int64_t limit_;
    std::vector<bool> odd_composite_;   // index i <-> 2i+1
};

/* Deterministic Miller-Rabin for 64-bit inputs. */
bool is_prime(uint64_t x);

Factorization factorize(int64_t x);

bool is_squarefree(int64_t x);

/* p-adic valuation of a nonzero integer. */
int vp(int64_t x, int64_t p);
int vp(mpz_class const & x, unsigned long p);

int64_t mod_pow(int64_t base, uint64_t exp, int64_t modulus);
int64_t mod_mul(int64_t a, int64_t b, int64_t modulus);
/* inverse of a modulo m, requires gcd(a, m) == 1 */
int64_t mod_inverse(int64_t a, int64_t m);
/* a mod m in [0, m) */
inline int64_t mod_floor(int64_t a, int64_t m)
{
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/* g in (F_q^x)^N, decided by Euler's criterion g^((q-1)/N) == 1.
 * Requires q prime, q == 1 mod N, q does not divide g. */
bool is_nth_power_residue(int64_t g, int64_t N, int64_t q);

/* g = h^d with d maximal (gcd of the exponents), so h is not a proper power. */
struct perfect_power {
    int64_t h;
    int64_t d;
};
perfect_power perfect_power_decompose(int64_t g);

/* Euler's phi via factorization. */
int64_t euler_phi(int64_t x);

/* Sorted positive divisors. */
std::vector<int64_t> divisors(int64_t x);

/* Signed squarefree kernel: x divided by the largest square dividing it. */
int64_t squarefree_kernel(int64_t x);

/* Integer power with overflow check (throws domain_error on overflow). */
int64_t checked_pow(int64_t base, unsigned exp);

}  // namespace eos
