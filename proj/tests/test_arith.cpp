#include "doctest.h"

#include <numeric>
#include <random>

#include "eos/arith.hpp"
#include "eos/errors.hpp"
#include "oracles.hpp"

using namespace eos;

TEST_CASE("prime_sieve")
{
    CHECK(prime_sieve(10) == std::vector<int64_t>{2, 3, 5, 7});
    CHECK(prime_sieve(2) == std::vector<int64_t>{2});
    CHECK(prime_sieve(1).empty());
    CHECK(prime_sieve(-5).empty());

    auto ps = prime_sieve(100);
    CHECK(ps.size() == 25);
    CHECK(ps.back() == 97);
    CHECK(ps == oracle::primes_naive(100));
    CHECK(prime_sieve(20000) == oracle::primes_naive(20000));
}

TEST_CASE("is_prime agrees with the table")
{
    prime_table t(200000);
    for (int64_t x = 0; x <= 200000; ++x) REQUIRE(t.is_prime(x) == is_prime(uint64_t(x)));
    CHECK(is_prime(1000000007ULL));
    CHECK(!is_prime(1000000007ULL * 998244353ULL));
    CHECK(is_prime(18446744073709551557ULL));
}

TEST_CASE("factorize")
{
    auto f = factorize(12);
    CHECK(f.sign == 1);
    CHECK(f.factors == std::vector<std::pair<int64_t, int>>{{2, 2}, {3, 1}});

    f = factorize(-13);
    CHECK(f.sign == -1);
    CHECK(f.factors == std::vector<std::pair<int64_t, int>>{{13, 1}});

    /* 562432 = 4^4 * 13^3 */
    f = factorize(562432);
    CHECK(f.factors == oracle::factor_naive(562432));
    CHECK(f.factors == std::vector<std::pair<int64_t, int>>{{2, 8}, {13, 3}});

    CHECK(factorize(1).factors.empty());
    CHECK(factorize(-1).sign == -1);
    CHECK_THROWS_AS(factorize(0), eos::domain_error);

    /* a product of two primes above the trial-division table */
    int64_t big = 1000003LL * 1000033LL;
    CHECK(factorize(big).factors == std::vector<std::pair<int64_t, int>>{{1000003, 1}, {1000033, 1}});
}

TEST_CASE("factorize round trip")
{
    for (int64_t x = 2; x <= 1000000; ++x) {
        auto f = factorize(x);
        REQUIRE(f.recompose() == x);
        REQUIRE(factorize(-x).recompose() == -x);
        for (size_t i = 0; i < f.factors.size(); ++i) {
            REQUIRE(f.factors[i].second >= 1);
            if (i) REQUIRE(f.factors[i - 1].first < f.factors[i].first);
        }
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        int64_t x = int64_t(rng() % 1000000000000ULL) + 2;
        REQUIRE(factorize(x).factors == oracle::factor_naive(x));
    }
}

TEST_CASE("is_squarefree")
{
    CHECK(is_squarefree(13));
    CHECK(!is_squarefree(12));
    CHECK(is_squarefree(-15));
    CHECK_THROWS_AS(is_squarefree(1), eos::domain_error);
    CHECK_THROWS_AS(is_squarefree(-1), eos::domain_error);
    CHECK_THROWS_AS(is_squarefree(0), eos::domain_error);
}

TEST_CASE("vp")
{
    CHECK(vp(48, 2) == 4);
    CHECK(vp(13, 2) == 0);
    CHECK(vp(73 * 73 - 73, 2) == 3);
    CHECK(vp(mpz_class(5256), 2) == 3);
    CHECK(vp(int64_t(-48), 2) == 4);
    CHECK_THROWS_AS(vp(0, 2), eos::domain_error);
    CHECK_THROWS_AS(vp(mpz_class(0), 2), eos::domain_error);
}

TEST_CASE("mod_pow")
{
    CHECK(mod_pow(4, 2, 13) == 3);
    CHECK(mod_pow(5, 0, 7) == 1);
    CHECK(mod_pow(2, 10, 1024) == 0);
    CHECK(mod_pow(-1, 3, 13) == 12);
    for (int64_t m = 2; m <= 1000; m += 7)
        for (int64_t b = -12; b <= 12; ++b)
            for (int64_t e = 0; e <= 12; ++e) REQUIRE(mod_pow(b, uint64_t(e), m) == oracle::pow_naive(b, e, m));
}

TEST_CASE("is_nth_power_residue")
{
    CHECK_FALSE(is_nth_power_residue(4, 6, 13));
    CHECK(is_nth_power_residue(-1, 6, 13));
    CHECK(is_nth_power_residue(1, 6, 13));
    CHECK_THROWS_AS(is_nth_power_residue(4, 6, 11), eos::precondition_error);
    CHECK_THROWS_AS(is_nth_power_residue(13, 6, 13), eos::precondition_error);
}

TEST_CASE("is_nth_power_residue matches brute force")
{
    for (int64_t N : {2, 3, 6, 10}) {
        for (int64_t q : prime_sieve(1200)) {
            if ((q - 1) % N) continue;
            auto powers = oracle::nth_powers_naive(N, q);
            for (int64_t g = -20; g <= 40; ++g) {
                if (g % q == 0) continue;
                int64_t r = ((g % q) + q) % q;
                REQUIRE(is_nth_power_residue(g, N, q) == (powers.count(r) > 0));
            }
        }
    }
}

TEST_CASE("perfect_power_decompose")
{
    auto pp = perfect_power_decompose(4);
    CHECK(pp.h == 2);
    CHECK(pp.d == 2);
    pp = perfect_power_decompose(12);
    CHECK(pp.h == 12);
    CHECK(pp.d == 1);
    pp = perfect_power_decompose(64);
    CHECK(pp.h == 2);
    CHECK(pp.d == 6);
    CHECK_THROWS_AS(perfect_power_decompose(1), eos::domain_error);

    for (int64_t g = 2; g <= 20000; ++g) {
        auto r = perfect_power_decompose(g);
        int64_t d = 0;
        for (auto const & [p, e] : oracle::factor_naive(g)) d = std::gcd(d, int64_t(e));
        REQUIRE(r.d == d);
        REQUIRE(checked_pow(r.h, unsigned(r.d)) == g);
    }
}

TEST_CASE("misc helpers")
{
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
    CHECK(divisors(6) == std::vector<int64_t>{1, 2, 3, 6});
    CHECK(squarefree_kernel(72) == 2);
    CHECK(squarefree_kernel(-12) == -3);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK_THROWS_AS(checked_pow(10, 19), eos::domain_error);
}
