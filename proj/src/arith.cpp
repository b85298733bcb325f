#include "eos/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "eos/errors.hpp"

namespace eos {

namespace {

using u128 = unsigned __int128;

/* Primes below 2^20, enough to trial-divide anything up to 2^40
 * without falling back to plain odd divisors. */
std::vector<int64_t> const & small_primes()
{
    static std::vector<int64_t> const table = prime_sieve(int64_t(1) << 20);
    return table;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m)
{
    return uint64_t(u128(a) * b % m);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m)
{
    uint64_t r = 1 % m;
    b %= m;
    for (; e; e >>= 1) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
    }
    return r;
}

}  // namespace

int64_t Factorization::recompose() const
{
    int64_t r = sign;
    for (auto const & [p, e] : factors)
        for (int i = 0; i < e; ++i)
            if (__builtin_mul_overflow(r, p, &r))
                throw domain_error("Factorization::recompose: overflow");
    return r;
}

std::vector<int64_t> Factorization::primes() const
{
    std::vector<int64_t> ps;
    ps.reserve(factors.size());
    for (auto const & f : factors) ps.push_back(f.first);
    return ps;
}

prime_table::prime_table(int64_t limit)
    : limit_(std::max<int64_t>(limit, 1))
    , odd_composite_(size_t(limit_ / 2 + 1), false)
{
    odd_composite_[0] = true;   // 1
    for (int64_t p = 3; p * p <= limit_; p += 2) {
        if (odd_composite_[size_t(p / 2)]) continue;
        for (int64_t j = p * p; j <= limit_; j += 2 * p)
            odd_composite_[size_t(j / 2)] = true;
    }
}

bool prime_table::is_prime(int64_t x) const
{
    if (x < 2 || x > limit_) return x > limit_ ? eos::is_prime(uint64_t(x)) : false;
    if (x == 2) return true;
    if (x % 2 == 0) return false;
    return !odd_composite_[size_t(x / 2)];
}

std::vector<int64_t> prime_table::primes() const
{
    std::vector<int64_t> ps;
    if (limit_ >= 2) ps.push_back(2);
    for (int64_t x = 3; x <= limit_; x += 2)
        if (!odd_composite_[size_t(x / 2)]) ps.push_back(x);
    return ps;
}

std::vector<int64_t> prime_sieve(int64_t limit)
{
    if (limit < 2) return {};
    return prime_table(limit).primes();
}

bool is_prime(uint64_t x)
{
    if (x < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (x == p) return true;
        if (x % p == 0) return false;
    }
    uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    /* this witness set is deterministic below 3.3e24 */
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t y = powmod_u64(a, d, x);
        if (y == 1 || y == x - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            y = mulmod_u64(y, y, x);
            if (y == x - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(int64_t x)
{
    if (x == 0) throw domain_error("factorize: x = 0");
    if (x == std::numeric_limits<int64_t>::min())
        throw domain_error("factorize: |x| does not fit in int64");
    Factorization f;
    f.value = x;
    f.sign = x < 0 ? -1 : 1;
    int64_t r = x < 0 ? -x : x;
    auto take = [&](int64_t p) {
        int e = 0;
        while (r % p == 0) { r /= p; ++e; }
        if (e) f.factors.emplace_back(p, e);
    };
    for (int64_t p : small_primes()) {
        if (p * p > r) break;
        take(p);
    }
    int64_t next = small_primes().back() + 2;
    while (r > 1 && next <= r / next) {
        if (is_prime(uint64_t(r))) break;
        take(next);
        next += 2;
    }
    if (r > 1) f.factors.emplace_back(r, 1);
    return f;
}

bool is_squarefree(int64_t x)
{
    if (x >= -1 && x <= 1) throw domain_error("is_squarefree: |x| <= 1");
    for (auto const & [p, e] : factorize(x).factors)
        if (e > 1) return false;
    return true;
}

int vp(int64_t x, int64_t p)
{
    if (x == 0) throw domain_error("vp: x = 0");
    if (p < 2) throw domain_error("vp: p < 2");
    int e = 0;
    while (x % p == 0) { x /= p; ++e; }
    return e;
}

int vp(mpz_class const & x, unsigned long p)
{
    if (x == 0) throw domain_error("vp: x = 0");
    if (p < 2) throw domain_error("vp: p < 2");
    mpz_class y = x;
    int e = 0;
    while (mpz_divisible_ui_p(y.get_mpz_t(), p)) {
        mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p);
        ++e;
    }
    return e;
}

int64_t mod_mul(int64_t a, int64_t b, int64_t modulus)
{
    return int64_t(mulmod_u64(uint64_t(mod_floor(a, modulus)),
                              uint64_t(mod_floor(b, modulus)), uint64_t(modulus)));
}

int64_t mod_pow(int64_t base, uint64_t exp, int64_t modulus)
{
    if (modulus < 2) throw domain_error("mod_pow: modulus < 2");
    return int64_t(powmod_u64(uint64_t(mod_floor(base, modulus)), exp, uint64_t(modulus)));
}

int64_t mod_inverse(int64_t a, int64_t m)
{
    int64_t old_r = mod_floor(a, m), r = m;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) throw domain_error("mod_inverse: not invertible");
    return mod_floor(old_s, m);
}

bool is_nth_power_residue(int64_t g, int64_t N, int64_t q)
{
    if (N < 2) throw precondition_error("is_nth_power_residue: N < 2");
    if (q < 2 || (q - 1) % N != 0)
        throw precondition_error("is_nth_power_residue: q != 1 mod N (q=" + std::to_string(q)
                                 + ", N=" + std::to_string(N) + ")");
    int64_t gq = mod_floor(g, q);
    if (gq == 0) throw precondition_error("is_nth_power_residue: q divides g");
    return mod_pow(gq, uint64_t((q - 1) / N), q) == 1;
}

perfect_power perfect_power_decompose(int64_t g)
{
    if (g < 2) throw domain_error("perfect_power_decompose: g < 2");
    auto f = factorize(g);
    int64_t d = 0;
    for (auto const & [p, e] : f.factors) d = std::gcd(d, int64_t(e));
    int64_t h = 1;
    for (auto const & [p, e] : f.factors) h *= checked_pow(p, unsigned(e / d));
    return {h, d};
}

int64_t euler_phi(int64_t x)
{
    if (x < 1) throw domain_error("euler_phi: x < 1");
    int64_t r = x;
    for (auto const & [p, e] : factorize(x).factors) r = r / p * (p - 1);
    return r;
}

std::vector<int64_t> divisors(int64_t x)
{
    if (x == 0) throw domain_error("divisors: x = 0");
    std::vector<int64_t> ds{1};
    for (auto const & [p, e] : factorize(x).factors) {
        size_t k = ds.size();
        int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < k; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int64_t squarefree_kernel(int64_t x)
{
    auto f = factorize(x);
    int64_t r = f.sign;
    for (auto const & [p, e] : f.factors)
        if (e % 2) r *= p;
    return r;
}

int64_t checked_pow(int64_t base, unsigned exp)
{
    int64_t r = 1;
    for (unsigned i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(r, base, &r))
            throw domain_error("checked_pow: overflow");
    return r;
}

}  // namespace eos
