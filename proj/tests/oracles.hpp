#pragma once

// Test-only reference computations. None of these call into the library's
// implementation paths they are used to check.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline bool is_prime_naive(int64_t x)
{
    if (x < 2) return false;
    for (int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

inline std::vector<int64_t> primes_naive(int64_t limit)
{
    std::vector<int64_t> ps;
    for (int64_t x = 2; x <= limit; ++x)
        if (is_prime_naive(x)) ps.push_back(x);
    return ps;
}

inline std::vector<std::pair<int64_t, int>> factor_naive(int64_t x)
{
    std::vector<std::pair<int64_t, int>> f;
    if (x < 0) x = -x;
    for (int64_t d = 2; d * d <= x; ++d) {
        int e = 0;
        while (x % d == 0) { x /= d; ++e; }
        if (e) f.emplace_back(d, e);
    }
    if (x > 1) f.emplace_back(x, 1);
    return f;
}

inline int64_t pow_naive(int64_t b, int64_t e, int64_t m)
{
    int64_t r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    for (int64_t i = 0; i < e; ++i) r = r * b % m;
    return r;
}

/* {a^N mod q : 1 <= a < q} */
inline std::set<int64_t> nth_powers_naive(int64_t N, int64_t q)
{
    std::set<int64_t> s;
    for (int64_t a = 1; a < q; ++a) s.insert(pow_naive(a, N, q));
    return s;
}

/* Sylvester matrix determinant by rational Gaussian elimination. */
inline mpz_class resultant_sylvester(std::vector<mpz_class> const & a, std::vector<mpz_class> const & b)
{
    size_t m = a.size() - 1, n = b.size() - 1;   // degrees
    size_t s = m + n;
    std::vector<std::vector<mpq_class>> M(s, std::vector<mpq_class>(s, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= m; ++j) M[i][i + j] = a[m - j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n; ++j) M[n + i][i + j] = b[n - j];
    mpq_class det = 1;
    for (size_t c = 0; c < s; ++c) {
        size_t p = c;
        while (p < s && M[p][c] == 0) ++p;
        if (p == s) return 0;
        if (p != c) { std::swap(M[p], M[c]); det = -det; }
        det *= M[c][c];
        for (size_t r = c + 1; r < s; ++r) {
            if (M[r][c] == 0) continue;
            mpq_class f = M[r][c] / M[c][c];
            for (size_t k = c; k < s; ++k) M[r][k] -= f * M[c][k];
        }
    }
    return det.get_num();
}

/* Determinant over Q by Gaussian elimination (independent of Bareiss). */
inline mpq_class det_rational(std::vector<std::vector<mpq_class>> M)
{
    size_t s = M.size();
    mpq_class det = 1;
    for (size_t c = 0; c < s; ++c) {
        size_t p = c;
        while (p < s && M[p][c] == 0) ++p;
        if (p == s) return 0;
        if (p != c) { std::swap(M[p], M[c]); det = -det; }
        det *= M[c][c];
        for (size_t r = c + 1; r < s; ++r) {
            if (M[r][c] == 0) continue;
            mpq_class f = M[r][c] / M[c][c];
            for (size_t k = c; k < s; ++k) M[r][k] -= f * M[c][k];
        }
    }
    return det;
}

/* Characteristic polynomial by Faddeev-LeVerrier over Q.
 * Returns a_1..a_n with det(tI - M) = t^n + a_1 t^(n-1) + ... + a_n. */
inline std::vector<mpq_class> charpoly_leverrier(std::vector<std::vector<mpq_class>> const & A)
{
    size_t n = A.size();
    std::vector<std::vector<mpq_class>> Mk(n, std::vector<mpq_class>(n, 0));   // M_0 = 0
    std::vector<mpq_class> c(n + 1);
    c[0] = 1;
    for (size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{k-1} I
        std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                for (size_t l = 0; l < n; ++l) next[i][j] += A[i][l] * Mk[l][j];
                if (i == j) next[i][j] += c[k - 1];
            }
        Mk = next;
        mpq_class tr = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) tr += A[i][l] * Mk[l][i];
        c[k] = -tr / mpq_class(long(k));
    }
    return {c.begin() + 1, c.end()};
}

/* Multiplication of power-basis vectors mod the monic f (low coeffs c_0..c_{n-1}), over Q. */
inline std::vector<mpq_class> mulmod_q(std::vector<mpq_class> const & a, std::vector<mpq_class> const & b,
                                       std::vector<mpq_class> const & low)
{
    size_t n = low.size();
    std::vector<mpq_class> p(2 * n - 1, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) p[i + j] += a[i] * b[j];
    for (size_t d = 2 * n - 2; d >= n; --d)
        for (size_t i = 0; i < n; ++i) p[d - n + i] -= p[d] * low[i];
    p.resize(n);
    return p;
}

/* Is x (power-basis coordinates over Q) an algebraic integer in Q[t]/(f)?
 * Uses the charpoly of multiplication-by-x in the power basis. */
inline bool is_integral_power_basis(std::vector<mpq_class> const & x, std::vector<mpq_class> const & low)
{
    size_t n = low.size();
    std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(n, 0));
    for (size_t j = 0; j < n; ++j) {
        std::vector<mpq_class> e(n, 0);
        e[j] = 1;
        auto col = mulmod_q(x, e, low);
        for (size_t i = 0; i < n; ++i) A[i][j] = col[i];
    }
    for (auto const & c : charpoly_leverrier(A))
        if (c.get_den() != 1) return false;
    return true;
}

/* Brute-force p-part of [O_K : Z[theta]]: counts integral elements of
 * (1/p^k) Z[theta] / Z[theta]. Valid when p^k kills the p-part of
 * O_K / Z[theta]. */
inline int64_t p_index_bruteforce(std::vector<int64_t> const & low_int, int64_t p, int k)
{
    size_t n = low_int.size();
    std::vector<mpq_class> low(n);
    for (size_t i = 0; i < n; ++i) low[i] = mpq_class(long(low_int[i]));
    int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    int64_t total = 1;
    for (size_t i = 0; i < n; ++i) total *= pk;
    int64_t count = 0;
    std::vector<int64_t> a(n, 0);
    for (int64_t idx = 0; idx < total; ++idx) {
        int64_t t = idx;
        std::vector<mpq_class> x(n);
        for (size_t i = 0; i < n; ++i) {
            x[i] = mpq_class(long(t % pk), long(pk));
            x[i].canonicalize();
            t /= pk;
        }
        if (is_integral_power_basis(x, low)) ++count;
    }
    return count;
}

inline bool is_squarefree_naive(int64_t x)
{
    if (x < 0) x = -x;
    for (int64_t d = 2; d * d <= x; ++d)
        if (x % (d * d) == 0) return false;
    return true;
}

/* #{1 <= m <= x : no p in primes divides m}, by inclusion-exclusion over
 * squarefree products of the primes. */
inline int64_t p_free_inclusion_exclusion(std::vector<int64_t> const & primes, int64_t x)
{
    int64_t total = 0;
    // depth-first over subsets, pruning products above x
    struct frame { int64_t prod; size_t next; int sign; };
    std::vector<frame> fs{{1, 0, 1}};
    while (!fs.empty()) {
        auto f = fs.back();
        fs.pop_back();
        total += f.sign * (x / f.prod);
        for (size_t i = f.next; i < primes.size(); ++i)
            if (f.prod <= x / primes[i]) fs.push_back({f.prod * primes[i], i + 1, -f.sign});
    }
    return total;
}

}  // namespace oracle
