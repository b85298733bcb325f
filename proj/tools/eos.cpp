// eos: command-line front end over the library.
//
// Every report is JSON by default (CSV where the data is a table) and
// embeds the inputs and the library version. Options read EOS_<NAME>
// from the environment when the flag is absent.
//
// Exit codes: 0 success, 2 usage or precondition, 3 internal consistency.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eos/arith.hpp"
#include "eos/errors.hpp"
#include "eos/experiments.hpp"
#include "eos/families.hpp"
#include "eos/obstruction.hpp"
#include "eos/parallel.hpp"
#include "eos/purefield.hpp"

using json = nlohmann::ordered_json;
using namespace eos;

namespace {

struct run_config {
    uint64_t seed = 0;
    std::optional<int64_t> x_max;
    std::vector<int64_t> checkpoints;
    int64_t budget = 1000000;
    uint64_t limit = default_enumeration_limit;
    std::string format = "json";
    std::string out;
    unsigned workers = 0;
};

/* rows of a CSV table; an empty header prints no header line */
struct table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string str(int64_t v) { return std::to_string(v); }

/* shortest representation that reads back to the same double */
std::string str(double v)
{
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

int64_t small(mpz_class const & x, char const * what)
{
    if (!x.fits_slong_p()) throw resource_error(std::string(what) + " exceeds 64 bits");
    return x.get_si();
}

json base(char const * command, json inputs)
{
    json j;
    j["command"] = command;
    j["version"] = EOS_VERSION;
    j["inputs"] = std::move(inputs);
    return j;
}

void emit(run_config const & cfg, json const & j, table const & t)
{
    std::ostringstream os;
    if (cfg.format == "csv") {
        auto line = [&](std::vector<std::string> const & cells) {
            for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
            os << '\n';
        };
        if (!t.header.empty()) line(t.header);
        for (auto const & r : t.rows) line(r);
    } else {
        os << j.dump(2) << '\n';
    }
    if (cfg.out.empty()) {
        std::cout << os.str();
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw precondition_error("cannot open " + cfg.out + " for writing");
    f << os.str();
}

/* key,value rows for reports that are not naturally tabular */
table key_values(json const & j)
{
    table t{{"key", "value"}, {}};
    for (auto const & [k, v] : j.items()) {
        if (k == "inputs" || k == "command" || k == "version") continue;
        t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
    }
    return t;
}

json certificate_json(obstruction_certificate const & c)
{
    return {{"n", c.n}, {"m", c.m}, {"g", c.g}, {"q", c.q}, {"witness", c.witness}, {"N", c.N}};
}

json checkpoint_inputs(run_config const & cfg, int64_t x_max, std::vector<int64_t> const & xs)
{
    return {{"x_max", x_max}, {"checkpoints", xs}, {"seed", cfg.seed}};
}

std::vector<int64_t> decades(int64_t lo, int64_t x_max)
{
    std::vector<int64_t> xs;
    for (int64_t x = lo; x < x_max; x *= 10) xs.push_back(x);
    return xs;
}

/* ---- subcommands ---- */

void cmd_invariants(run_config const & cfg, int n, int64_t m)
{
    auto inv = pure_index(n, m, cfg.limit);
    auto cert = abs_certificate(inv);
    json j = base("invariants", {{"n", n}, {"m", m}, {"limit", cfg.limit}});
    j["n"] = n;
    j["m"] = m;
    j["N"] = inv.params.N;
    j["irreducible"] = inv.irreducible;
    j["squarefree"] = true;
    j["alpha_monogenic"] = inv.alpha_monogenic;
    j["g"] = small(inv.g, "index");
    j["disc"] = inv.power_disc.get_str();
    j["maximal_order_disc"] = order_disc(inv.maximal_order).get_str();
    j["certificate"] = cert ? certificate_json(*cert) : json(nullptr);
    emit(cfg, j, key_values(j));
}

void cmd_pset(run_config const & cfg, int64_t g, int64_t N, int64_t limit)
{
    auto ps = enumerate_Pg(g, N, limit);
    json j = base("pset", {{"g", g}, {"N", N}, {"limit", limit}});
    j["primes"] = ps;
    table t;
    for (auto q : ps) t.rows.push_back({str(q)});
    emit(cfg, j, t);
}

void cmd_density(run_config const & cfg, int64_t g, int64_t N)
{
    auto k = estimate_delta(g, N, cfg.budget);
    json j = base("density", {{"g", g}, {"N", N}, {"budget", cfg.budget}});
    j["g"] = k.g;
    j["N"] = k.N;
    j["h"] = k.h;
    j["d"] = k.d;
    j["b"] = k.b;
    j["nontrivial"] = k.nontrivial;
    j["l_over_k"] = *k.l_over_k;
    j["delta"] = k.delta->get_str();
    j["delta_value"] = k.delta->get_d();
    j["split_fraction"] = *k.split_fraction;
    j["sample_size"] = k.sample_size;
    emit(cfg, j, key_values(j));
}

void cmd_alpha_density(run_config const & cfg, int n)
{
    int64_t x_max = cfg.x_max.value_or(1000000);
    auto xs = normalize_checkpoints(x_max, cfg.checkpoints.empty() ? decades(1000, x_max) : cfg.checkpoints);
    auto r = alpha_density(n, x_max, xs);
    json in = checkpoint_inputs(cfg, x_max, xs);
    in["n"] = n;
    json j = base("experiment alpha-density", in);
    j["n"] = n;
    j["target"] = r.target;
    j["xs"] = r.cp.xs;
    j["counts"] = r.cp.counts;
    j["density"] = r.density;
    table t{{"x", "count", "density", "target"}, {}};
    for (size_t i = 0; i < xs.size(); ++i)
        t.rows.push_back({str(r.cp.xs[i]), str(r.cp.counts[i]), str(r.density[i]), str(r.target)});
    emit(cfg, j, t);
}

void cmd_pg_free(run_config const & cfg, int64_t g, int64_t N)
{
    int64_t x_max = cfg.x_max.value_or(10000000);
    auto xs = normalize_checkpoints(x_max, cfg.checkpoints.empty() ? decades(1000, x_max) : cfg.checkpoints);
    auto cp = pg_free_counts(g, N, x_max, xs);
    json in = checkpoint_inputs(cfg, x_max, xs);
    in["g"] = g;
    in["N"] = N;
    json j = base("experiment pg-free", in);
    j["g"] = g;
    j["N"] = N;
    j["xs"] = cp.xs;
    j["counts"] = cp.counts;
    std::vector<double> ratio;
    for (size_t i = 0; i < xs.size(); ++i) ratio.push_back(double(cp.counts[i]) / double(cp.xs[i]));
    j["ratio"] = ratio;
    try {
        auto f = logpower_fit(cp);
        j["fit"] = {{"exponent", f.exponent}, {"constant", f.constant}, {"rms_residual", f.rms_residual},
                    {"window_lo", f.window_lo}, {"window_hi", f.window_hi}};
    } catch (fit_error const &) {
        j["fit"] = nullptr;
    }
    table t{{"x", "count", "ratio"}, {}};
    for (size_t i = 0; i < xs.size(); ++i) t.rows.push_back({str(cp.xs[i]), str(cp.counts[i]), str(ratio[i])});
    emit(cfg, j, t);
}

void cmd_mertens(run_config const & cfg, int64_t g, int64_t N)
{
    int64_t x_max = cfg.x_max.value_or(10000000);
    auto xs = normalize_checkpoints(x_max, cfg.checkpoints.empty() ? decades(10000, x_max) : cfg.checkpoints);
    auto r = mertens_sum(g, N, x_max, xs);
    json in = checkpoint_inputs(cfg, x_max, xs);
    in["g"] = g;
    in["N"] = N;
    json j = base("experiment mertens", in);
    j["g"] = g;
    j["N"] = N;
    j["xs"] = r.xs;
    j["sums"] = r.sums;
    j["slope"] = r.slope;
    j["intercept"] = r.intercept;
    table t{{"x", "sum"}, {}};
    for (size_t i = 0; i < r.xs.size(); ++i) t.rows.push_back({str(r.xs[i]), str(r.sums[i])});
    emit(cfg, j, t);
}

void cmd_exceptional(run_config const & cfg, int n)
{
    int64_t x_max = cfg.x_max.value_or(100000);
    auto xs = normalize_checkpoints(x_max, cfg.checkpoints.empty() ? decades(1000, x_max) : cfg.checkpoints);
    auto r = exceptional_scan(n, x_max, xs, cfg.workers);
    json in = checkpoint_inputs(cfg, x_max, xs);
    in["n"] = n;
    json j = base("experiment exceptional", in);
    j["n"] = n;
    j["N"] = r.N;
    j["xs"] = r.xs;
    json rows = json::array();
    table t{{"g", "x", "total", "pg_free", "ratio"}, {}};
    for (auto const & row : r.rows) {
        rows.push_back({{"g", row.g}, {"total", row.total}, {"pg_free", row.pg_free}, {"ratio", row.ratio},
                        {"members", row.members}});
        for (size_t i = 0; i < r.xs.size(); ++i)
            t.rows.push_back({str(row.g), str(r.xs[i]), str(row.total[i]), str(row.pg_free[i]), str(row.ratio[i])});
    }
    j["rows"] = rows;
    emit(cfg, j, t);
}

void cmd_trinomial(run_config const & cfg, int n, std::optional<int64_t> t)
{
    if (t) {
        auto d = trinomial_data_of(n, *t);
        check_trinomial_disc(d);
        json j = base("family trinomial", {{"n", n}, {"t", *t}});
        j["n"] = n;
        j["t"] = *t;
        j["C0"] = d.C0.get_str();
        j["C1"] = d.C1.get_str();
        j["L"] = d.L.get_str();
        j["disc"] = d.disc.get_str();
        bool member = n >= 4 && in_Tn(n, *t);
        j["in_Tn"] = member;
        if (member) {
            auto c = trinomial_monogenic_check(n, *t);
            j["g"] = small(c.g, "index");
            j["monogenic"] = c.g == 1;
            j["candidates"] = c.candidates;
        } else {
            j["g"] = nullptr;
            j["monogenic"] = nullptr;
            j["candidates"] = json::array();
        }
        emit(cfg, j, key_values(j));
        return;
    }
    int64_t x_max = cfg.x_max.value_or(1000000);
    auto xs = normalize_checkpoints(x_max, cfg.checkpoints.empty() ? decades(1000, x_max) : cfg.checkpoints);
    auto counts = squarefree_value_counts(n, x_max, xs);
    auto S = euler_product_S(n, 100000);
    json in = checkpoint_inputs(cfg, x_max, xs);
    in["n"] = n;
    json j = base("family trinomial", in);
    j["n"] = n;
    j["euler_product"] = {{"cutoff", S.cutoff}, {"value", S.value}, {"lower", S.lower}, {"upper", S.upper}};
    j["xs"] = xs;
    j["counts"] = counts;
    std::vector<double> density;
    for (size_t i = 0; i < xs.size(); ++i) density.push_back(double(counts[i]) / double(xs[i]));
    j["density"] = density;
    table tb{{"x", "count", "density", "euler_product"}, {}};
    for (size_t i = 0; i < xs.size(); ++i)
        tb.rows.push_back({str(xs[i]), str(counts[i]), str(density[i]), str(S.value)});
    emit(cfg, j, tb);
}

void cmd_twist(run_config const & cfg, int n, int64_t c, int64_t t)
{
    auto idx = twist_index_check(n, c, t);
    auto f = twist_polynomial(n, c, t);
    int64_t N = int64_t(n) * (n - 1) / 2;
    json j = base("family twist", {{"n", n}, {"c", c}, {"t", t}});
    j["n"] = n;
    j["c"] = c;
    j["t"] = t;
    std::vector<std::string> coeffs;
    for (auto const & a : f.low_coeffs()) coeffs.push_back(a.get_str());
    j["polynomial"] = f.to_string();
    j["coefficients"] = coeffs;
    j["disc"] = poly_disc_resultant(f).get_str();
    j["index"] = small(idx, "index");
    j["expected"] = checked_pow(c, unsigned(N));
    emit(cfg, j, key_values(j));
}

void cmd_thin(run_config const & cfg, int n, int64_t c, std::optional<int64_t> q)
{
    int64_t N = int64_t(n) * (n - 1) / 2;
    if (q) {
        auto r = thin_family_check(n, c, *q);
        json j = base("family thin", {{"n", n}, {"c", c}, {"q", *q}});
        j["n"] = n;
        j["c"] = c;
        j["q"] = *q;
        j["alpha_monogenic"] = r.alpha_monogenic_of_q;
        j["g"] = small(r.g_of_q, "index");
        j["distinguished_index"] = small(r.distinguished_index, "index");
        j["expected"] = checked_pow(c, unsigned(N));
        emit(cfg, j, key_values(j));
        return;
    }
    int64_t x_max = cfg.x_max.value_or(100000);
    auto xs = normalize_checkpoints(x_max, cfg.checkpoints);
    json in = checkpoint_inputs(cfg, x_max, xs);
    in["n"] = n;
    in["c"] = c;
    json j = base("family thin", in);
    int64_t expected = checked_pow(c, unsigned(N));
    std::vector<int64_t> primes_at, members_at, failures_at;
    int64_t primes = 0, members = 0, failures = 0;
    size_t next = 0;
    for (int64_t p : prime_sieve(x_max)) {
        while (p > xs[next]) {
            primes_at.push_back(primes);
            members_at.push_back(members);
            failures_at.push_back(failures);
            ++next;
        }
        ++primes;
        if (!thin_Pn_member(n, c, p)) continue;
        ++members;
        auto r = thin_family_check(n, c, p);
        if (!r.alpha_monogenic_of_q || r.g_of_q != 1 || r.distinguished_index != expected) ++failures;
    }
    for (; next < xs.size(); ++next) {
        primes_at.push_back(primes);
        members_at.push_back(members);
        failures_at.push_back(failures);
    }
    j["n"] = n;
    j["c"] = c;
    j["expected"] = expected;
    j["xs"] = xs;
    j["primes"] = primes_at;
    j["members"] = members_at;
    j["failures"] = failures_at;
    table t{{"x", "primes", "members", "fraction", "failures"}, {}};
    for (size_t i = 0; i < xs.size(); ++i)
        t.rows.push_back({str(xs[i]), str(primes_at[i]), str(members_at[i]),
                          str(primes_at[i] ? double(members_at[i]) / double(primes_at[i]) : 0.0),
                          str(failures_at[i])});
    emit(cfg, j, t);
}

void cmd_scaled(run_config const & cfg, int n, std::vector<int64_t> const & h, int64_t t_lo, int64_t t_hi,
                int64_t bound)
{
    scaled_family fam(n, h);
    auto r = scaled_family_scan(fam, t_lo, t_hi, bound, cfg.limit);
    json j = base("family scaled",
                  {{"n", n}, {"h", h}, {"t_lo", t_lo}, {"t_hi", t_hi}, {"prime_bound", bound}, {"limit", cfg.limit}});
    j["n"] = n;
    j["h"] = fam.h;
    j["N"] = r.N;
    json entries = json::array();
    table t{{"t", "g", "checked", "unchecked", "unfactored", "eisenstein_ok"}, {}};
    auto joined = [](std::vector<int64_t> const & v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    };
    for (auto const & e : r.entries) {
        entries.push_back({{"t", e.t}, {"g", small(e.g, "index")}, {"checked", e.checked},
                           {"unchecked", e.unchecked}, {"unfactored", e.unfactored},
                           {"eisenstein_ok", e.eisenstein_ok}});
        t.rows.push_back({str(e.t), e.g.get_str(), joined(e.checked), joined(e.unchecked), e.unfactored,
                          e.eisenstein_ok ? "true" : "false"});
    }
    j["entries"] = entries;
    json gc = json::array();
    for (auto const & [g, count] : r.g_counts) {
        json row = {{"g", g}, {"count", count}};
        auto it = r.g_nontrivial.find(g);
        row["kummer_nontrivial"] = it == r.g_nontrivial.end() ? json(nullptr) : json(it->second);
        gc.push_back(row);
    }
    j["g_counts"] = gc;
    j["hypotheses_hold"] = r.hypotheses_hold;
    emit(cfg, j, t);
}

void cmd_coset(run_config const & cfg, int n, int64_t m, int64_t q, int64_t trials, bool degenerate)
{
    auto r = local_coset_check(n, m, q, trials, cfg.seed, degenerate);
    json j = base("coset", {{"n", n}, {"m", m}, {"q", q}, {"trials", trials}, {"seed", cfg.seed},
                            {"allow_degenerate", degenerate}});
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["base_class"] = r.base_class;
    emit(cfg, j, key_values(j));
}

/* ---- option wiring ---- */

void add_format(CLI::App * app, run_config & cfg)
{
    app->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->envname("EOS_FORMAT")
        ->capture_default_str();
    app->add_option("--out", cfg.out, "write the report to PATH instead of stdout")->envname("EOS_OUT");
}

void add_range(CLI::App * app, run_config & cfg)
{
    app->add_option("--x-max", cfg.x_max, "largest parameter scanned")->envname("EOS_X_MAX")->check(CLI::PositiveNumber);
    app->add_option("--checkpoints", cfg.checkpoints, "ascending thresholds a,b,c")
        ->delimiter(',')
        ->envname("EOS_CHECKPOINTS");
}

void add_seed(CLI::App * app, run_config & cfg)
{
    app->add_option("--seed", cfg.seed, "PRNG seed")->envname("EOS_SEED")->capture_default_str();
}

void add_limit(CLI::App * app, run_config & cfg)
{
    app->add_option("--limit", cfg.limit, "saturation candidate limit per prime")
        ->envname("EOS_LIMIT")
        ->capture_default_str();
}

void add_workers(CLI::App * app, run_config & cfg)
{
    app->add_option("--workers", cfg.workers, "worker threads (0: all cores)")
        ->envname("EOS_WORKERS")
        ->capture_default_str();
}

int run(int argc, char ** argv)
{
    CLI::App app{"Eisenstein obstruction sieve toolkit"};
    app.set_version_flag("--version", std::string(EOS_VERSION));
    app.require_subcommand(1);

    run_config cfg;
    int n = 0;
    int64_t m = 0, g = 0, N = 0, c = 0, q_req = 0, t_lo = 0, t_hi = 0;
    int64_t pset_limit = 0, trials = 1000, bound = default_family_prime_bound;
    std::optional<int64_t> t_opt, q_opt;
    std::vector<int64_t> h;
    bool degenerate = false;

    auto inv = app.add_subcommand("invariants", "index, discriminant and certificate of Q(m^(1/n))");
    inv->add_option("n", n)->required();
    inv->add_option("m", m)->required();
    add_limit(inv, cfg);
    add_format(inv, cfg);

    auto pset = app.add_subcommand("pset", "primes of P_g up to a limit, one per line");
    pset->add_option("g", g)->required();
    pset->add_option("N", N)->required();
    pset->add_option("--limit", pset_limit, "largest prime listed")->required()->envname("EOS_LIMIT");
    std::string pset_format = "csv";
    pset->add_option("--format", pset_format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}))
        ->envname("EOS_FORMAT");
    pset->add_option("--out", cfg.out)->envname("EOS_OUT");

    auto dens = app.add_subcommand("density", "Chebotarev density of P_g");
    dens->add_option("g", g)->required();
    dens->add_option("N", N)->required();
    dens->add_option("--budget", cfg.budget, "largest prime sampled")->envname("EOS_BUDGET")->capture_default_str();
    add_format(dens, cfg);

    auto exp = app.add_subcommand("experiment", "density experiments");
    exp->require_subcommand(1);
    auto ad = exp->add_subcommand("alpha-density", "two-sided density of alpha-monogenic m");
    ad->add_option("n", n)->required();
    auto pf = exp->add_subcommand("pg-free", "P_g-free counts and log-power fit");
    pf->add_option("g", g)->required();
    pf->add_option("N", N)->required();
    auto me = exp->add_subcommand("mertens", "sum of 1/q over P_g");
    me->add_option("g", g)->required();
    me->add_option("N", N)->required();
    auto ex = exp->add_subcommand("exceptional", "index and P_g-freeness over pure fields");
    ex->add_option("n", n)->required();
    add_workers(ex, cfg);
    for (auto a : {ad, pf, me, ex}) {
        add_range(a, cfg);
        add_seed(a, cfg);
        add_format(a, cfg);
    }

    auto fam = app.add_subcommand("family", "explicit families");
    fam->require_subcommand(1);
    auto tri = fam->add_subcommand("trinomial", "X^n + tX + t; without t, squarefree values of t L_n(t)");
    tri->add_option("n", n)->required();
    tri->add_option("t", t_opt);
    add_range(tri, cfg);
    auto tw = fam->add_subcommand("twist", "index of Z[c alpha_t] in the maximal order");
    tw->add_option("n", n)->required();
    tw->add_option("c", c)->required();
    tw->add_option("t", q_req)->required();
    auto th = fam->add_subcommand("thin", "X^n - q for thin-family primes q; without q, a scan up to --x-max");
    th->add_option("n", n)->required();
    th->add_option("c", c)->required();
    th->add_option("q", q_opt);
    add_range(th, cfg);
    auto sc = fam->add_subcommand("scaled", "index values of X^n + t h(X) over a t window");
    sc->add_option("n", n)->required();
    sc->add_option("coeffs", h, "h as c0,c1,... low to high")->required()->delimiter(',');
    sc->add_option("--t-lo", t_lo)->required();
    sc->add_option("--t-hi", t_hi)->required();
    sc->add_option("--prime-bound", bound)->envname("EOS_PRIME_BOUND")->capture_default_str();
    add_limit(sc, cfg);
    for (auto a : {tri, tw, th, sc}) {
        add_seed(a, cfg);
        add_format(a, cfg);
    }

    auto co = app.add_subcommand("coset", "sample local generators and check their N-th power class");
    co->add_option("n", n)->required();
    co->add_option("m", m)->required();
    co->add_option("q", q_req)->required();
    co->add_option("--trials", trials)->envname("EOS_TRIALS")->capture_default_str();
    co->add_flag("--allow-degenerate", degenerate, "also draw b_1 = 0 (negative control)");
    add_seed(co, cfg);
    add_format(co, cfg);

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForVersion const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return 2;
    }
    if (*pset) cfg.format = pset_format;

    if (*inv) cmd_invariants(cfg, n, m);
    else if (*pset) cmd_pset(cfg, g, N, pset_limit);
    else if (*dens) cmd_density(cfg, g, N);
    else if (*ad) cmd_alpha_density(cfg, n);
    else if (*pf) cmd_pg_free(cfg, g, N);
    else if (*me) cmd_mertens(cfg, g, N);
    else if (*ex) cmd_exceptional(cfg, n);
    else if (*tri) cmd_trinomial(cfg, n, t_opt);
    else if (*tw) cmd_twist(cfg, n, c, q_req);
    else if (*th) cmd_thin(cfg, n, c, q_opt);
    else if (*sc) cmd_scaled(cfg, n, h, t_lo, t_hi, bound);
    else if (*co) cmd_coset(cfg, n, m, q_req, trials, degenerate);
    return 0;
}

}  // namespace

int main(int argc, char ** argv)
{
    try {
        return run(argc, argv);
    } catch (consistency_error const & e) {
        std::cerr << "eos: internal consistency failure: " << e.what() << '\n';
        return 3;
    } catch (precondition_error const & e) {
        std::cerr << "eos: " << e.what() << '\n';
        return 2;
    } catch (domain_error const & e) {
        std::cerr << "eos: " << e.what() << '\n';
        return 2;
    } catch (resource_error const & e) {
        std::cerr << "eos: " << e.what() << '\n';
        return 2;
    } catch (std::exception const & e) {
        std::cerr << "eos: internal error: " << e.what() << '\n';
        return 3;
    }
}
