#include "eos/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eos/arith.hpp"
#include "eos/obstruction.hpp"
#include "eos/parallel.hpp"
#include "eos/purefield.hpp"

namespace eos {

namespace {

std::vector<uint8_t> squarefree_table(int64_t limit)
{
    std::vector<uint8_t> sf(size_t(limit + 1), 1);
    sf[0] = 0;
    for (int64_t p : prime_sieve(int64_t(std::sqrt(double(limit))) + 1)) {
        int64_t p2 = p * p;
        for (int64_t j = p2; j <= limit; j += p2) sf[size_t(j)] = 0;
    }
    return sf;
}

/* index of the first checkpoint covering |m| */
size_t first_covering(std::vector<int64_t> const & xs, int64_t a)
{
    return size_t(std::lower_bound(xs.begin(), xs.end(), a) - xs.begin());
}

/* ordinary least squares y = a + b x */
std::pair<double, double> least_squares(std::vector<double> const & x, std::vector<double> const & y)
{
    double n = double(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double den = n * sxx - sx * sx;
    if (den == 0) throw fit_error("least squares: degenerate abscissae");
    double b = (n * sxy - sx * sy) / den;
    return {(sy - b * sx) / n, b};
}

}  // namespace

std::vector<int64_t> normalize_checkpoints(int64_t x_max, std::vector<int64_t> xs)
{
    if (x_max < 1) throw precondition_error("x_max must be positive");
    for (size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 1 || xs[i] > x_max) throw precondition_error("checkpoints must lie in [1, x_max]");
        if (i && xs[i] <= xs[i - 1]) throw precondition_error("checkpoints must be strictly ascending");
    }
    if (xs.empty() || xs.back() != x_max) xs.push_back(x_max);
    return xs;
}

double alpha_density_target(int n)
{
    double t = 6 / (std::numbers::pi * std::numbers::pi);
    for (int64_t p : factorize(n).primes()) t *= double(p) / double(p + 1);
    return t;
}

alpha_density_report alpha_density(int n, int64_t x_max, std::vector<int64_t> const & xs_in)
{
    if (n < 2) throw precondition_error("alpha_density: n must be at least 2");
    auto xs = normalize_checkpoints(x_max, xs_in);
    auto sf = squarefree_table(x_max);
    auto ps = factorize(n).primes();

    std::vector<int64_t> hits(xs.size(), 0);
    for (int64_t m = -x_max; m <= x_max; ++m) {
        int64_t a = m < 0 ? -m : m;
        if (a <= 1 || !sf[size_t(a)]) continue;
        /* squarefree m with |m| > 1 is never a perfect power, so X^n - m
         * is irreducible; the criterion is v_p(m^p - m) = 1 for p | n */
        bool mono = true;
        for (int64_t p : ps)
            if (mod_pow(m, uint64_t(p), p * p) == mod_floor(m, p * p)) {
                mono = false;
                break;
            }
        if (mono) ++hits[first_covering(xs, a)];
    }
    alpha_density_report r{n, {xs, {}, "alpha-monogenic"}, {}, alpha_density_target(n)};
    int64_t run = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        run += hits[i];
        r.cp.counts.push_back(run);
        r.density.push_back(double(run) / double(2 * xs[i]));
    }
    return r;
}

checkpoints p_free_counts(std::vector<int64_t> const & primes, int64_t x_max, std::vector<int64_t> const & xs_in)
{
    auto xs = normalize_checkpoints(x_max, xs_in);
    constexpr int64_t seg = int64_t(1) << 16;
    std::vector<uint8_t> hit(static_cast<size_t>(seg));
    std::vector<int64_t> counts;
    size_t next = 0;
    int64_t run = 0;
    for (int64_t lo = 1; lo <= x_max; lo += seg) {
        int64_t hi = std::min(x_max, lo + seg - 1);
        std::fill(hit.begin(), hit.end(), 0);
        for (int64_t p : primes) {
            if (p > hi) break;
            for (int64_t j = ((lo + p - 1) / p) * p; j <= hi; j += p) hit[size_t(j - lo)] = 1;
        }
        for (int64_t m = lo; m <= hi; ++m) {
            if (!hit[size_t(m - lo)]) ++run;
            while (next < xs.size() && xs[next] == m) {
                counts.push_back(run);
                ++next;
            }
        }
    }
    return {xs, counts, "p-free"};
}

checkpoints pg_free_counts(int64_t g, int64_t N, int64_t x_max, std::vector<int64_t> const & xs)
{
    if (!kummer_data_of(g, N).nontrivial)
        throw precondition_error("pg_free_counts: g is trivial in the Kummer sense");
    auto cp = p_free_counts(enumerate_Pg(g, N, x_max), x_max, xs);
    cp.label = "P_" + std::to_string(g) + "-free";
    return cp;
}

fit_result logpower_fit(checkpoints const & cp)
{
    if (cp.xs.size() != cp.counts.size()) throw fit_error("logpower_fit: xs and counts differ in length");
    std::vector<double> x, y;
    int64_t lo = 0, hi = 0;
    for (size_t i = 0; i < cp.xs.size(); ++i) {
        if (cp.xs[i] < fit_window_start) continue;
        if (cp.counts[i] <= 0) throw fit_error("logpower_fit: nonpositive count");
        if (x.empty()) lo = cp.xs[i];
        hi = cp.xs[i];
        x.push_back(std::log(std::log(double(cp.xs[i]))));
        y.push_back(std::log(double(cp.counts[i]) / double(cp.xs[i])));
    }
    if (x.size() < 3) throw fit_error("logpower_fit: need at least 3 checkpoints with X >= 1000");
    if (double(hi) < 100 * double(lo)) throw fit_error("logpower_fit: window must span at least 2 decades");
    auto [a, b] = least_squares(x, y);
    double ss = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double e = y[i] - (a + b * x[i]);
        ss += e * e;
    }
    return {-b, std::exp(a), std::sqrt(ss / double(x.size())), lo, hi};
}

mertens_report mertens_sum(int64_t g, int64_t N, int64_t x_max, std::vector<int64_t> const & xs_in)
{
    if (!kummer_data_of(g, N).nontrivial)
        throw precondition_error("mertens_sum: g is trivial in the Kummer sense");
    auto xs = normalize_checkpoints(x_max, xs_in);
    auto ps = enumerate_Pg(g, N, x_max);
    mertens_report r{g, N, xs, {}, 0, 0};
    long double s = 0;
    size_t k = 0;
    for (int64_t x : xs) {
        for (; k < ps.size() && ps[k] <= x; ++k) s += 1.0L / (long double) ps[k];
        r.sums.push_back(double(s));
    }
    if (xs.size() >= 2 && xs.front() > 1) {
        std::vector<double> lx;
        for (int64_t x : xs) lx.push_back(std::log(std::log(double(x))));
        auto [a, b] = least_squares(lx, r.sums);
        r.intercept = a;
        r.slope = b;
    }
    return r;
}

exceptional_report exceptional_scan(int n, int64_t x_max, std::vector<int64_t> const & xs_in, unsigned workers)
{
    pure_field_params params(n, 2);
    auto xs = normalize_checkpoints(x_max, xs_in);
    auto sf = squarefree_table(x_max);

    struct shard_out {
        std::map<int64_t, std::vector<int64_t>> total, free;   // per first covering checkpoint
        std::map<int64_t, std::vector<int64_t>> members;
    };
    auto shards = run_sharded<shard_out>(-x_max, x_max, workers, [&](int64_t lo, int64_t hi, shard_out & out) {
        for (int64_t m = lo; m <= hi; ++m) {
            int64_t a = m < 0 ? -m : m;
            if (a <= 1 || !sf[size_t(a)] || !binomial_irreducible(n, m)) continue;
            auto inv = pure_index(n, m);
            if (inv.g == 1) continue;
            int64_t g = inv.g.get_si();
            size_t c = first_covering(xs, a);
            auto & t = out.total[g];
            if (t.empty()) t.assign(xs.size(), 0);
            ++t[c];
            bool free = true;
            for (int64_t q : factorize(m).primes())
                if (in_Pg(q, g, params.N)) {
                    free = false;
                    break;
                }
            if (!free) continue;
            auto & f = out.free[g];
            if (f.empty()) f.assign(xs.size(), 0);
            ++f[c];
            out.members[g].push_back(m);
        }
    });

    exceptional_report r{n, params.N, xs, {}};
    std::map<int64_t, exceptional_row> rows;
    for (auto const & s : shards) {
        for (auto const & [g, t] : s.total) {
            auto & row = rows[g];
            row.g = g;
            row.total.resize(xs.size(), 0);
            row.pg_free.resize(xs.size(), 0);
            for (size_t i = 0; i < xs.size(); ++i) row.total[i] += t[i];
        }
        for (auto const & [g, f] : s.free)
            for (size_t i = 0; i < xs.size(); ++i) rows[g].pg_free[i] += f[i];
        for (auto const & [g, ms] : s.members)
            rows[g].members.insert(rows[g].members.end(), ms.begin(), ms.end());
    }
    for (auto & [g, row] : rows) {
        /* per-checkpoint bins -> cumulative counts */
        for (size_t i = 1; i < xs.size(); ++i) {
            row.total[i] += row.total[i - 1];
            row.pg_free[i] += row.pg_free[i - 1];
        }
        for (size_t i = 0; i < xs.size(); ++i)
            row.ratio.push_back(row.total[i] ? double(row.pg_free[i]) / double(row.total[i]) : 0.0);
        r.rows.push_back(std::move(row));
    }
    return r;
}

}  // namespace eos
