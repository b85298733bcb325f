#include "eos/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "eos/arith.hpp"

namespace eos {

namespace {

/* Fundamental discriminant of Q(sqrt(s)) for squarefree s != 1. */
int64_t quadratic_disc(int64_t s)
{
    return mod_floor(s, 4) == 1 ? s : 4 * s;
}

int64_t det_mod(std::vector<std::vector<int64_t>> a, int64_t q)
{
    size_t n = a.size();
    int64_t det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = q - det;
        }
        det = mod_mul(det, a[c][c], q);
        int64_t inv = mod_inverse(a[c][c], q);
        for (size_t r = c + 1; r < n; ++r) {
            if (!a[r][c]) continue;
            int64_t f = mod_mul(a[r][c], inv, q);
            for (size_t k = c; k < n; ++k) a[r][k] = mod_floor(a[r][k] - mod_mul(f, a[c][k], q), q);
        }
    }
    return det % q;
}

/* product in F_q[x]/(x^n - m) */
std::vector<int64_t> mul_mod(std::vector<int64_t> const & a, std::vector<int64_t> const & b, int64_t m, int64_t q)
{
    size_t n = a.size();
    std::vector<int64_t> r(n, 0);
    int64_t mq = mod_floor(m, q);
    for (size_t i = 0; i < n; ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < n; ++j) {
            int64_t t = mod_mul(a[i], b[j], q);
            if (i + j >= n) r[i + j - n] = (r[i + j - n] + mod_mul(t, mq, q)) % q;
            else r[i + j] = (r[i + j] + t) % q;
        }
    }
    return r;
}

int64_t index_det_mod(std::vector<int64_t> const & beta, int64_t m, int64_t q)
{
    size_t n = beta.size();
    std::vector<std::vector<int64_t>> rows;
    std::vector<int64_t> pw(n, 0);
    pw[0] = 1 % q;
    for (size_t i = 0; i < n; ++i) {
        rows.push_back(pw);
        pw = mul_mod(pw, beta, m, q);
    }
    return det_mod(rows, q);
}

}  // namespace

kummer_data kummer_data_of(int64_t g, int64_t N)
{
    if (g < 2) throw precondition_error("kummer_data: g must be at least 2");
    if (N < 2) throw precondition_error("kummer_data: N must be at least 2");
    auto pp = perfect_power_decompose(g);
    int64_t e = std::gcd(N, pp.d);
    int64_t b = N / e, a = pp.d / e;
    bool nontrivial;
    if (b == 1) {
        nontrivial = false;
    } else if (b > 2) {
        nontrivial = true;
    } else {
        /* b = 2, a odd: Q(sqrt(h^a)) = Q(sqrt(h')) lies in Q(zeta_2N) iff its
         * discriminant divides 2N */
        int64_t s = squarefree_kernel(a % 2 ? pp.h : 1);
        nontrivial = s == 1 || (2 * N) % quadratic_disc(s) != 0;
    }
    return {g, N, pp.h, pp.d, b, nontrivial, std::nullopt, std::nullopt, std::nullopt, 0};
}

bool in_Pg(int64_t q, int64_t g, int64_t N)
{
    if (g < 2 || N < 2) throw precondition_error("in_Pg: needs g >= 2 and N >= 2");
    if (q < 2) return false;
    if ((2 * N) % q == 0 || g % q == 0) return false;
    if (q % (2 * N) != 1) return false;
    return !is_nth_power_residue(g, N, q);
}

std::vector<int64_t> enumerate_Pg(int64_t g, int64_t N, int64_t limit)
{
    std::vector<int64_t> out;
    for (int64_t q : prime_sieve(limit))
        if (in_Pg(q, g, N)) out.push_back(q);
    return out;
}

ambiguous_snap_error::ambiguous_snap_error(double fraction_, int64_t first_, int64_t second_)
    : resource_error("estimate_delta: split fraction " + std::to_string(fraction_) + " does not separate [L:K] = "
                     + std::to_string(first_) + " from " + std::to_string(second_) + "; increase prime_budget")
    , fraction(fraction_)
    , first(first_)
    , second(second_)
{
}

kummer_data estimate_delta(int64_t g, int64_t N, int64_t prime_budget)
{
    auto kd = kummer_data_of(g, N);
    if (!kd.nontrivial)
        throw precondition_error("estimate_delta: not applicable, g is trivial in the Kummer sense (b = "
                                 + std::to_string(kd.b) + ")");
    if (prime_budget < min_prime_budget)
        throw precondition_error("estimate_delta: prime_budget must be at least " + std::to_string(min_prime_budget));

    int64_t total = 0, split = 0;
    for (int64_t q : prime_sieve(prime_budget)) {
        if (q % (2 * N) != 1 || g % q == 0) continue;
        ++total;
        if (is_nth_power_residue(g, N, q)) ++split;
    }
    if (total == 0) throw resource_error("estimate_delta: no primes q == 1 mod 2N below the budget");
    double phi = double(split) / double(total);
    double se = std::sqrt(std::max(phi * (1 - phi), 1.0 / double(total)) / double(total));

    /* nearest and second-nearest 1/e over divisors e of N */
    auto ds = divisors(N);
    std::sort(ds.begin(), ds.end(), [phi](int64_t x, int64_t y) {
        double dx = std::fabs(1.0 / double(x) - phi), dy = std::fabs(1.0 / double(y) - phi);
        return dx < dy || (dx == dy && x < y);
    });
    int64_t e = ds[0];
    if (ds.size() > 1) {
        double d0 = std::fabs(1.0 / double(ds[0]) - phi), d1 = std::fabs(1.0 / double(ds[1]) - phi);
        if (d1 - d0 < 2 * se) throw ambiguous_snap_error(phi, ds[0], ds[1]);
    }
    kd.l_over_k = e;
    kd.delta = mpq_class(e - 1, e * euler_phi(2 * N));
    kd.delta->canonicalize();
    kd.split_fraction = phi;
    kd.sample_size = total;
    return kd;
}

std::optional<obstruction_certificate> abs_certificate(pure_field_invariants const & inv)
{
    if (inv.g == 1) return std::nullopt;
    int64_t g = inv.g.get_si();
    int64_t N = inv.params.N;
    for (int64_t q : factorize(inv.params.m).primes()) {
        if (!in_Pg(q, g, N)) continue;
        return obstruction_certificate{inv.params.n, inv.params.m, g, q, mod_pow(g, uint64_t((q - 1) / N), q), N};
    }
    return std::nullopt;
}

std::optional<obstruction_certificate> abs_certificate(int n, int64_t m)
{
    return abs_certificate(pure_index(n, m));
}

bool certificate_is_sound(obstruction_certificate const & c)
{
    return c.g >= 2 && c.q >= 2 && is_prime(uint64_t(c.q)) && c.m % c.q == 0 && c.g % c.q != 0
           && c.q % (2 * c.N) == 1 && (2 * c.N) % c.q != 0 && c.N == int64_t(c.n) * (c.n - 1) / 2
           && c.witness == mod_pow(c.g, uint64_t((c.q - 1) / c.N), c.q) && c.witness != 1;
}

coset_report local_coset_check(int n, int64_t m, int64_t q, int64_t trials, uint64_t seed, bool allow_degenerate)
{
    pure_field_params params(n, m);
    if (q < 2 || !is_prime(uint64_t(q))) throw precondition_error("local_coset_check: q must be prime");
    if (m % q != 0) throw precondition_error("local_coset_check: q must divide m");
    if (params.N % q == 0) throw precondition_error("local_coset_check: q must not divide N");
    if (!is_squarefree(m)) throw precondition_error("m not squarefree");
    if (!binomial_irreducible(n, m)) throw precondition_error("local_coset_check: X^n - m is reducible");
    if (trials < 0) throw precondition_error("local_coset_check: trials must be nonnegative");

    int64_t e = (q - 1) / std::gcd(params.N, q - 1);
    std::vector<int64_t> alpha(size_t(n), 0);
    if (n > 1) alpha[1] = 1 % q;
    int64_t base = index_det_mod(alpha, m, q);
    int64_t base_inv = mod_inverse(base, q);

    std::mt19937_64 rng(seed);
    coset_report rep{trials, 0, mod_pow(base, uint64_t(e), q)};
    std::vector<int64_t> beta(static_cast<size_t>(n));
    for (int64_t t = 0; t < trials; ++t) {
        for (auto & b : beta) b = int64_t(rng() % uint64_t(q));
        if (!allow_degenerate) beta[1] = 1 + int64_t(rng() % uint64_t(q - 1));
        int64_t r = mod_mul(index_det_mod(beta, m, q), base_inv, q);
        if (mod_pow(r, uint64_t(e), q) != 1) ++rep.failures;
    }
    return rep;
}

bool minus_one_residue_check(int64_t q, int64_t N)
{
    if (N < 1 || q % (2 * N) != 1) throw precondition_error("minus_one_residue_check: q must be 1 mod 2N");
    return is_nth_power_residue(q - 1, N, q);
}

}  // namespace eos
