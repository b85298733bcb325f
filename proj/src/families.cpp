#include "eos/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "eos/arith.hpp"
#include "eos/errors.hpp"
#include "eos/obstruction.hpp"
#include "eos/purefield.hpp"

namespace eos {

namespace {

mpz_class signed_power(int sign_exp, unsigned long base, unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return sign_exp % 2 ? mpz_class(-r) : r;
}

/* squarefree, counting units as squarefree */
bool squarefree_or_unit(mpz_class const & x)
{
    if (abs(x) <= 1) return x != 0;
    if (!x.fits_slong_p()) throw domain_error("squarefree test: value exceeds 64 bits");
    return is_squarefree(x.get_si());
}

/* the sublattice Z<1, c a, ..., (c a)^(n-1)> of Z[a] */
equation_order scaled_power_order(monic_polynomial const & f, int64_t c)
{
    size_t n = size_t(f.degree());
    std::vector<std::vector<mpz_class>> rows(n, std::vector<mpz_class>(n, 0));
    mpz_class ci = 1;
    for (size_t i = 0; i < n; ++i) {
        rows[i][i] = ci;
        ci *= c;
    }
    return equation_order(f, rows, 1);
}

}  // namespace

scaled_family::scaled_family(int n_, std::vector<int64_t> h_) : n(n_), h(std::move(h_))
{
    if (n < 2) throw precondition_error("scaled_family: degree must be at least 2");
    if (h.size() > size_t(n)) throw precondition_error("scaled_family: h must have degree below n");
    h.resize(size_t(n), 0);
    if (h[0] == 0) throw precondition_error("scaled_family: h(0) must be nonzero");
}

monic_polynomial scaled_family::at(int64_t t) const
{
    std::vector<mpz_class> low;
    for (int64_t c : h) low.push_back(mpz_class(t) * c);
    return monic_polynomial(low);
}

bool eisenstein_at(monic_polynomial const & f, int64_t q)
{
    if (q < 2) return false;
    for (auto const & c : f.low_coeffs())
        if (c % q != 0) return false;
    return f.coeff(0) % (mpz_class(q) * q) != 0;
}

bool in_T_hsf(scaled_family const & fam, int64_t t)
{
    if (t >= -1 && t <= 1) return false;
    return is_squarefree(t) && std::gcd(t, fam.h[0]) == 1;
}

trinomial_data trinomial_data_of(int n, int64_t t)
{
    if (n < 2) throw precondition_error("trinomial_data: n must be at least 2");
    if (t == 0) throw precondition_error("trinomial_data: t must be nonzero");
    trinomial_data d{n, t, signed_power(n * (n - 1) / 2, (unsigned long) n, (unsigned long) n),
                     signed_power((n - 1) * (n - 2) / 2, (unsigned long) (n - 1), (unsigned long) (n - 1)), 0, 0};
    d.L = d.C0 + d.C1 * t;
    mpz_class tp;
    mpz_pow_ui(tp.get_mpz_t(), mpz_class(t).get_mpz_t(), (unsigned long) (n - 1));
    d.disc = tp * d.L;
    return d;
}

void check_trinomial_disc(trinomial_data const & d)
{
    auto r = poly_disc_resultant(monic_polynomial::trinomial(d.n, d.t, d.t));
    if (r != d.disc)
        throw consistency_error("trinomial discriminant " + d.disc.get_str() + " differs from resultant "
                                + r.get_str());
}

bool in_Tn(int n, int64_t t)
{
    if (n < 4) throw precondition_error("in_Tn: n must be at least 4");
    if (t >= -1 && t <= 1) return false;
    if (std::gcd(t, int64_t(n) * (n - 1)) != 1) return false;
    if (!is_squarefree(t)) return false;
    auto d = trinomial_data_of(n, t);
    mpz_class g = gcd(mpz_class(t), d.L);
    return g == 1 && squarefree_or_unit(d.L);
}

index_check trinomial_monogenic_check(int n, int64_t t)
{
    if (!in_Tn(n, t)) throw precondition_error("trinomial_monogenic_check: t not in T_n");
    auto d = trinomial_data_of(n, t);
    std::vector<int64_t> cand;
    /* v_p(disc) >= n - 1 >= 2 for every p | t */
    for (int64_t p : factorize(t).primes()) cand.push_back(p);
    if (abs(d.L) > 1) {
        if (!d.L.fits_slong_p()) throw domain_error("trinomial_monogenic_check: L_n(t) exceeds 64 bits");
        for (auto const & [p, e] : factorize(d.L.get_si()).factors)
            if (e >= 2 || t % p == 0) cand.push_back(p);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    auto r = equation_order_index(monic_polynomial::trinomial(n, t, t), cand);
    return {r.g, cand, std::move(r.maximal_order)};
}

monic_polynomial twist_polynomial(int n, int64_t c, int64_t t)
{
    mpz_class cn1, cn;
    mpz_pow_ui(cn1.get_mpz_t(), mpz_class(c).get_mpz_t(), (unsigned long) (n - 1));
    cn = cn1 * c;
    return monic_polynomial::trinomial(n, cn1 * t, cn * t);
}

mpz_class twist_index_check(int n, int64_t c, int64_t t)
{
    if (c < 2) throw precondition_error("twist_index_check: c must be at least 2");
    if (!in_Tn(n, t)) throw precondition_error("twist_index_check: t not in T_n");
    if (std::gcd(t, c) != 1) throw precondition_error("twist_index_check: gcd(t, c) must be 1");
    auto chk = trinomial_monogenic_check(n, t);
    if (chk.g != 1)
        throw consistency_error("twist_index_check: Z[alpha_t] not maximal for t = " + std::to_string(t));
    return order_index(scaled_power_order(chk.maximal_order.poly(), c), chk.maximal_order);
}

int64_t rho_ell2_closed_form(int n, int64_t ell)
{
    if (n % ell == 0) return ell;
    if ((n - 1) % ell == 0) return 1;
    return 2;
}

int64_t rho_ell2(int n, int64_t ell)
{
    if (n < 4) throw precondition_error("rho_ell2: n must be at least 4");
    if (ell < 2 || !is_prime(uint64_t(ell))) throw precondition_error("rho_ell2: ell must be prime");
    int64_t l2 = ell * ell;
    auto d = trinomial_data_of(n, 1);
    mpz_class m2 = l2, c0, c1;
    mpz_fdiv_r(c0.get_mpz_t(), d.C0.get_mpz_t(), m2.get_mpz_t());
    mpz_fdiv_r(c1.get_mpz_t(), d.C1.get_mpz_t(), m2.get_mpz_t());
    int64_t C0 = c0.get_si(), C1 = c1.get_si(), count = 0;
    for (int64_t a = 0; a < l2; ++a) {
        int64_t L = (C0 + mod_mul(C1, a, l2)) % l2;
        if (mod_mul(a, L, l2) == 0) ++count;
    }
    if (count != rho_ell2_closed_form(n, ell))
        throw consistency_error("rho_ell2: brute force " + std::to_string(count) + " differs from closed form "
                                + std::to_string(rho_ell2_closed_form(n, ell)) + " at ell = "
                                + std::to_string(ell));
    return count;
}

euler_product euler_product_S(int n, int64_t cutoff)
{
    if (n < 4) throw precondition_error("euler_product_S: n must be at least 4");
    if (cutoff < 1000) throw precondition_error("euler_product_S: cutoff must be at least 1000");
    long double v = 1;
    for (int64_t l : prime_sieve(cutoff)) {
        long double l2 = (long double) l * (long double) l;
        v *= 1 - (long double) rho_ell2_closed_form(n, l) / l2;
    }
    /* for l > cutoff > n, rho <= 2, and sum_{k > cutoff} 2/k^2 < 2/cutoff */
    double tail = 2.0 / double(cutoff);
    return {n, cutoff, double(v), double(v) * (1 - tail), double(v)};
}

std::vector<int64_t> squarefree_value_counts(int n, int64_t t_max, std::vector<int64_t> const & xs_in)
{
    if (n < 4) throw precondition_error("squarefree_value_counts: n must be at least 4");
    if (t_max < 1) throw precondition_error("squarefree_value_counts: t_max must be positive");
    std::vector<int64_t> xs = xs_in;
    if (xs.empty() || xs.back() != t_max) xs.push_back(t_max);
    for (size_t i = 0; i < xs.size(); ++i)
        if (xs[i] < 1 || xs[i] > t_max || (i && xs[i] <= xs[i - 1]))
            throw precondition_error("squarefree_value_counts: checkpoints must ascend within [1, t_max]");

    auto d = trinomial_data_of(n, 1);
    mpz_class lmax = abs(d.C0) + abs(d.C1) * t_max;
    if (!lmax.fits_slong_p()) throw domain_error("squarefree_value_counts: L_n(t) exceeds 64 bits");
    int64_t root = int64_t(std::sqrt(lmax.get_d())) + 2;

    /* bad[t]: l^2 | t or l^2 | L_n(t) for some prime l */
    std::vector<uint8_t> bad(size_t(t_max + 1), 0);
    for (int64_t l : prime_sieve(root)) {
        int64_t l2 = l * l;
        if (l2 <= t_max)
            for (int64_t j = l2; j <= t_max; j += l2) bad[size_t(j)] = 1;
        if (d.C1 % l == 0) continue;   // then L = C0 != 0 mod l
        mpz_class m2 = l2, c0, c1;
        mpz_fdiv_r(c0.get_mpz_t(), d.C0.get_mpz_t(), m2.get_mpz_t());
        mpz_fdiv_r(c1.get_mpz_t(), d.C1.get_mpz_t(), m2.get_mpz_t());
        int64_t t0 = mod_mul(mod_floor(-c0.get_si(), l2), mod_inverse(c1.get_si(), l2), l2);
        for (int64_t j = t0 ? t0 : l2; j <= t_max; j += l2) bad[size_t(j)] = 1;
    }
    int64_t c0 = mpz_class(abs(d.C0)).get_si();
    std::vector<int64_t> out;
    int64_t run = 0;
    size_t k = 0;
    for (int64_t t = 1; t <= t_max; ++t) {
        /* gcd(t, L_n(t)) = gcd(t, C0) */
        if (!bad[size_t(t)] && std::gcd(t, c0) == 1) ++run;
        if (k < xs.size() && xs[k] == t) {
            out.push_back(run);
            ++k;
        }
    }
    return out;
}

bool thin_Pn_member(int n, int64_t c, int64_t q)
{
    if (n < 4) throw precondition_error("thin_Pn_member: n must be at least 4");
    if (c < 2) throw precondition_error("thin_Pn_member: c must be at least 2");
    if (q < 2 || !is_prime(uint64_t(q))) throw precondition_error("thin_Pn_member: q must be prime");
    if (c % q == 0 || n % q == 0) return false;
    for (int64_t p : factorize(n).primes())
        if (mod_pow(q, uint64_t(p - 1), p * p) == 1) return false;
    return true;
}

thin_report thin_family_check(int n, int64_t c, int64_t q)
{
    if (!thin_Pn_member(n, c, q)) throw precondition_error("thin_family_check: q is not in the thin family");
    auto inv = pure_index(n, q);
    auto z = equation_order::power_order(monic_polynomial::binomial(n, q));
    return {alpha_monogenic(n, q), inv.g, order_index(scaled_power_order(z.poly(), c), z)};
}

scaled_scan_report scaled_family_scan(scaled_family const & fam, int64_t t_lo, int64_t t_hi, int64_t prime_bound,
                                      uint64_t enumeration_limit)
{
    if (t_lo > t_hi) throw precondition_error("scaled_family_scan: empty t range");
    if (prime_bound < 2) throw precondition_error("scaled_family_scan: prime bound must be at least 2");
    int64_t N = int64_t(fam.n) * (fam.n - 1) / 2;
    scaled_scan_report rep{fam, N, prime_bound, {}, {}, {}, true};
    auto small = prime_sieve(prime_bound);
    for (int64_t t = t_lo; t <= t_hi; ++t) {
        if (!in_T_hsf(fam, t)) continue;
        auto f = fam.at(t);
        scaled_entry e{t, 1, {}, {}, "", true};
        for (int64_t q : factorize(t).primes()) e.eisenstein_ok = e.eisenstein_ok && eisenstein_at(f, q);

        mpz_class rest = abs(poly_disc_resultant(f));
        for (int64_t p : small) {
            int v = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), (unsigned long) p)) {
                rest /= p;
                ++v;
            }
            if (v >= 2) e.checked.push_back(p);
        }
        if (rest > 1) {
            if (rest <= mpz_class("1000000000000")) {
                for (auto const & [p, v] : factorize(rest.get_si()).factors)
                    if (v >= 2) e.unchecked.push_back(p);
            } else {
                e.unfactored = rest.get_str();
            }
        }
        e.g = equation_order_index(f, e.checked, enumeration_limit).g;
        if (!e.g.fits_slong_p()) throw resource_error("scaled_family_scan: index exceeds 64 bits");
        int64_t g = e.g.get_si();
        ++rep.g_counts[g];
        if (g >= 2 && !rep.g_nontrivial.count(g)) {
            bool nt = kummer_data_of(g, N).nontrivial;
            rep.g_nontrivial[g] = nt;
            rep.hypotheses_hold = rep.hypotheses_hold && nt;
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace eos
