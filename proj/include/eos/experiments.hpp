#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eos/errors.hpp"

namespace eos {

/* Counts recorded at ascending thresholds. */
struct checkpoints {
    std::vector<int64_t> xs;
    std::vector<int64_t> counts;
    std::string label;
};

/* Sorted, positive, <= x_max, with x_max appended when missing. An empty
 * list yields {x_max}. Throws precondition_error otherwise. */
std::vector<int64_t> normalize_checkpoints(int64_t x_max, std::vector<int64_t> xs);

struct alpha_density_report {
    int n;
    checkpoints cp;                // alpha-monogenic m with |m| <= X_i
    std::vector<double> density;   // counts / (2 X_i)
    double target;                 // 6/pi^2 prod_{p | n} p/(p+1)
};

double alpha_density_target(int n);

/* Two-sided count of squarefree m, |m| <= X_i, with X^n - m irreducible
 * and alpha monogenic. */
alpha_density_report alpha_density(int n, int64_t x_max, std::vector<int64_t> const & xs);

/* #{1 <= m <= X_i : no prime factor of m lies in primes} by a segmented
 * sieve over the multiples of the given primes. */
checkpoints p_free_counts(std::vector<int64_t> const & primes, int64_t x_max, std::vector<int64_t> const & xs);

/* p_free_counts for P_g. Requires (g, N) nontrivial in the Kummer sense. */
checkpoints pg_free_counts(int64_t g, int64_t N, int64_t x_max, std::vector<int64_t> const & xs);

class fit_error : public precondition_error {
  public:
    using precondition_error::precondition_error;
};

struct fit_result {
    double exponent;   // delta in count/X ~ kappa (log X)^(-delta)
    double constant;   // kappa
    double rms_residual;
    int64_t window_lo, window_hi;
};

inline constexpr int64_t fit_window_start = 1000;

/* Least squares of log(count/X) against log log X over the checkpoints
 * with X >= fit_window_start. Needs >= 3 of them spanning >= 2 decades. */
fit_result logpower_fit(checkpoints const & cp);

struct mertens_report {
    int64_t g, N;
    std::vector<int64_t> xs;
    std::vector<double> sums;   // sum of 1/q over q in P_g, q <= X_i
    double slope;               // regression of sums on log log X_i
    double intercept;
};

mertens_report mertens_sum(int64_t g, int64_t N, int64_t x_max, std::vector<int64_t> const & xs);

struct exceptional_row {
    int64_t g;
    std::vector<int64_t> total;     // #{g(m) = g, |m| <= X_i}
    std::vector<int64_t> pg_free;   // of those, m with no prime factor in P_g
    std::vector<double> ratio;
    std::vector<int64_t> members;   // the P_g-free m, ascending
};

struct exceptional_report {
    int n;
    int64_t N;
    std::vector<int64_t> xs;
    std::vector<exceptional_row> rows;   // g >= 2, ascending
};

/* For squarefree m with |m| <= X and X^n - m irreducible, tabulates g(m)
 * and whether m avoids P_{g(m)}. The P_g-free slice contains every
 * parameter with g >= 2 and no fixed-sign local obstruction. */
exceptional_report exceptional_scan(int n, int64_t x_max, std::vector<int64_t> const & xs, unsigned workers = 0);

}  // namespace eos
