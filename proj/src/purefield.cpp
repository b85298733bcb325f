#include "eos/purefield.hpp"

#include <string>

#include "eos/arith.hpp"
#include "eos/errors.hpp"

namespace eos {

namespace {

void check_params(int n, int64_t m)
{
    if (n < 2) throw precondition_error("degree n must be at least 2");
    if (m >= -1 && m <= 1) throw precondition_error("|m| must exceed 1");
}

/* is x = y^p for some integer y */
bool is_exact_power(int64_t x, unsigned p)
{
    mpz_class a = x;
    if (x < 0) {
        if (p % 2 == 0) return false;
        a = -a;
    }
    return mpz_root(a.get_mpz_t(), a.get_mpz_t(), p) != 0;
}

}  // namespace

pure_field_params::pure_field_params(int n_, int64_t m_) : n(n_), m(m_), N(int64_t(n_) * (n_ - 1) / 2)
{
    check_params(n, m);
}

bool binomial_irreducible(int n, int64_t m)
{
    check_params(n, m);
    for (auto const & [p, e] : factorize(n).factors)
        if (is_exact_power(m, unsigned(p))) return false;
    if (n % 4 == 0 && m < 0 && (-m) % 4 == 0 && is_exact_power(-m / 4, 4)) return false;
    return true;
}

bool alpha_monogenic(int n, int64_t m)
{
    if (!binomial_irreducible(n, m))
        throw precondition_error("X^" + std::to_string(n) + " - " + std::to_string(m) + " is reducible");
    if (!is_squarefree(m)) return false;
    for (int64_t p : factorize(n).primes()) {
        mpz_class mp;
        mpz_pow_ui(mp.get_mpz_t(), mpz_class(m).get_mpz_t(), (unsigned long) p);
        if (vp(mpz_class(mp - m), (unsigned long) p) != 1) return false;
    }
    return true;
}

mpz_class pure_power_disc(int n, int64_t m)
{
    check_params(n, m);
    mpz_class nn, mm;
    mpz_ui_pow_ui(nn.get_mpz_t(), (unsigned long) n, (unsigned long) n);
    mpz_pow_ui(mm.get_mpz_t(), mpz_class(-m).get_mpz_t(), (unsigned long) (n - 1));
    mpz_class d = nn * mm;
    int64_t N = int64_t(n) * (n - 1) / 2;
    return N % 2 ? mpz_class(-d) : d;
}

pure_field_invariants pure_index(int n, int64_t m, uint64_t enumeration_limit)
{
    pure_field_params params(n, m);
    if (!binomial_irreducible(n, m))
        throw precondition_error("X^" + std::to_string(n) + " - " + std::to_string(m) + " is reducible");
    if (!is_squarefree(m)) throw precondition_error("m not squarefree");
    auto r = equation_order_index(monic_polynomial::binomial(n, m), factorize(n).primes(), enumeration_limit);
    return {params, true, alpha_monogenic(n, m), r.g, pure_power_disc(n, m), std::move(r.maximal_order)};
}

}  // namespace eos
