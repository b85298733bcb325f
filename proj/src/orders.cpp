#include "eos/orders.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "eos/arith.hpp"

namespace eos {

namespace {

void trim(zpoly & a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(zpoly const & a) { return int(a.size()) - 1; }

mpz_class content(zpoly const & a)
{
    mpz_class g = 0;
    for (auto const & c : a) g = gcd(g, c);
    return g;
}

mpz_class pow_mpz(mpz_class const & b, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/* lc(B)^(deg A - deg B + 1) * A mod B */
zpoly pseudo_remainder(zpoly r, zpoly const & b)
{
    int db = deg(b);
    int e = deg(r) - db + 1;
    mpz_class const & lb = b.back();
    while (deg(r) >= db) {
        int shift = deg(r) - db;
        mpz_class lr = r.back();
        for (auto & c : r) c *= lb;
        for (int i = 0; i <= db; ++i) r[size_t(i + shift)] -= lr * b[size_t(i)];
        trim(r);
        --e;
    }
    mpz_class k = pow_mpz(lb, (unsigned long) std::max(e, 0));
    for (auto & c : r) c *= k;
    return r;
}

/* Z/MZ with M < 2^63, enough for the p^n moduli used by saturation. */
struct mod_ring {
    using value = uint64_t;
    uint64_t m;
    value zero() const { return 0; }
    value one() const { return 1 % m; }
    value add(value a, value b) const { uint64_t s = a + b; return s >= m ? s - m : s; }
    value neg(value a) const { return a == 0 ? 0 : m - a; }
    value mul(value a, value b) const { return uint64_t((unsigned __int128) a * b % m); }
};

struct mpz_ring {
    using value = mpz_class;
    value zero() const { return 0; }
    value one() const { return 1; }
    value add(value const & a, value const & b) const { return a + b; }
    value neg(value const & a) const { return -a; }
    value mul(value const & a, value const & b) const { return a * b; }
};

/* Berkowitz: returns 1, a_1, ..., a_n with det(tI - A) = sum a_k t^(n-k). */
template <class R>
std::vector<typename R::value> berkowitz(R const & ring, std::vector<typename R::value> const & a,
                                         size_t n)
{
    using V = typename R::value;
    auto at = [&](size_t i, size_t j) -> V const & { return a[i * n + j]; };
    std::vector<V> poly{ring.one(), ring.neg(at(0, 0))};
    for (size_t i = 1; i < n; ++i) {
        std::vector<V> t(i + 2, ring.zero());
        t[0] = ring.one();
        t[1] = ring.neg(at(i, i));
        std::vector<V> v(i);
        for (size_t k = 0; k < i; ++k) v[k] = at(k, i);
        for (size_t k = 0; k < i; ++k) {
            V s = ring.zero();
            for (size_t l = 0; l < i; ++l) s = ring.add(s, ring.mul(at(i, l), v[l]));
            t[k + 2] = ring.neg(s);
            if (k + 1 < i) {
                std::vector<V> w(i, ring.zero());
                for (size_t r = 0; r < i; ++r)
                    for (size_t l = 0; l < i; ++l) w[r] = ring.add(w[r], ring.mul(at(r, l), v[l]));
                v = std::move(w);
            }
        }
        std::vector<V> next(i + 2, ring.zero());
        for (size_t j = 0; j < i + 2; ++j)
            for (size_t k = 0; k <= std::min(j, i); ++k)
                next[j] = ring.add(next[j], ring.mul(t[j - k], poly[k]));
        poly = std::move(next);
    }
    return poly;
}

/* F_p helpers for the radical computation. Vectors are length n, entries in [0,p). */
using fp_vec = std::vector<uint64_t>;

struct fp_algebra {
    size_t n;
    uint64_t p;
    std::vector<uint64_t> c;   // structure constants mod p

    fp_vec mul(fp_vec const & a, fp_vec const & b) const
    {
        fp_vec r(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < n; ++j) {
                if (!b[j]) continue;
                uint64_t ab = a[i] * b[j] % p;
                for (size_t k = 0; k < n; ++k)
                    r[k] = (r[k] + ab * c[(i * n + j) * n + k]) % p;
            }
        }
        return r;
    }

    fp_vec pow(fp_vec b, uint64_t e) const
    {
        fp_vec r(n, 0);
        r[0] = 1;
        for (; e; e >>= 1) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
        }
        return r;
    }
};

/* Row echelon basis over F_p, used for span tests and kernels. */
class fp_span {
  public:
    fp_span(size_t n, uint64_t p) : n_(n), p_(p) {}

    /* reduces v against the basis; returns true if v was independent (and adds it) */
    bool insert(fp_vec v)
    {
        reduce(v);
        auto it = std::find_if(v.begin(), v.end(), [](uint64_t x) { return x != 0; });
        if (it == v.end()) return false;
        size_t piv = size_t(it - v.begin());
        uint64_t inv = uint64_t(mod_inverse(int64_t(v[piv]), int64_t(p_)));
        for (auto & x : v) x = x * inv % p_;
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    bool contains(fp_vec v) const
    {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](uint64_t x) { return x == 0; });
    }

    size_t dimension() const { return rows_.size(); }
    std::vector<fp_vec> const & basis() const { return rows_; }

  private:
    size_t n_;
    uint64_t p_;
    std::vector<fp_vec> rows_;
    std::vector<size_t> pivots_;

    void reduce(fp_vec & v) const
    {
        for (size_t r = 0; r < rows_.size(); ++r) {
            uint64_t f = v[pivots_[r]];
            if (!f) continue;
            for (size_t k = 0; k < n_; ++k) v[k] = (v[k] + (p_ - f) * rows_[r][k]) % p_;
        }
    }
};

/* Kernel of the F_p-linear map whose images of the unit vectors are rows[i]. */
std::vector<fp_vec> fp_left_kernel(std::vector<fp_vec> const & rows, uint64_t p)
{
    size_t n = rows.size();
    size_t m = n ? rows[0].size() : 0;
    /* augmented [image | identity] */
    std::vector<fp_vec> aug(n, fp_vec(m + n, 0));
    for (size_t i = 0; i < n; ++i) {
        std::copy(rows[i].begin(), rows[i].end(), aug[i].begin());
        aug[i][m + i] = 1;
    }
    size_t r = 0;
    for (size_t col = 0; col < m && r < n; ++col) {
        size_t piv = r;
        while (piv < n && aug[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(aug[r], aug[piv]);
        uint64_t inv = uint64_t(mod_inverse(int64_t(aug[r][col]), int64_t(p)));
        for (auto & x : aug[r]) x = x * inv % p;
        for (size_t i = 0; i < n; ++i) {
            if (i == r || aug[i][col] == 0) continue;
            uint64_t f = aug[i][col];
            for (size_t k = 0; k < m + n; ++k) aug[i][k] = (aug[i][k] + (p - f) * aug[r][k]) % p;
        }
        ++r;
    }
    std::vector<fp_vec> ker;
    for (size_t i = r; i < n; ++i) ker.emplace_back(aug[i].begin() + long(m), aug[i].end());
    return ker;
}

/* Radical of O/pO as the kernel of x -> x^(p^j), p^j >= n. */
std::vector<fp_vec> fp_radical(fp_algebra const & alg)
{
    uint64_t frob = 1;
    while (frob < alg.n) frob *= alg.p;
    std::vector<fp_vec> images;
    for (size_t i = 0; i < alg.n; ++i) {
        fp_vec e(alg.n, 0);
        e[i] = 1;
        images.push_back(alg.pow(e, frob));
    }
    return fp_left_kernel(images, alg.p);
}

/* Pohst-Zassenhaus: with I the p-radical of O, O is p-maximal iff the
 * only x in O with x I in pI are those in pO. radical holds F_p
 * coordinates of a basis of I/pO. */
bool p_maximal_by_multipliers(multiplication_table const & c, std::vector<fp_vec> const & radical, uint64_t p)
{
    size_t n = c.degree();
    std::vector<std::vector<mpz_class>> gens;
    for (size_t i = 0; i < n; ++i) {
        std::vector<mpz_class> e(n, 0);
        e[i] = static_cast<unsigned long>(p);
        gens.push_back(std::move(e));
    }
    for (auto const & v : radical) {
        std::vector<mpz_class> e(n);
        for (size_t i = 0; i < n; ++i) e[i] = static_cast<unsigned long>(v[i]);
        gens.push_back(std::move(e));
    }
    zmatrix ib = hermite_lower(std::move(gens), n);   // basis of I in O-coordinates

    mpz_class pm = static_cast<unsigned long>(p);
    std::vector<fp_vec> rows(n, fp_vec(n * n, 0));
    std::vector<mpz_class> w(n), y(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            /* e_i * b_j in O-coordinates, then in the basis of I */
            for (size_t l = 0; l < n; ++l) {
                w[l] = 0;
                for (size_t k = 0; k <= j; ++k) w[l] += ib(j, k) * c(i, k, l);
            }
            for (size_t m = n; m-- > 0;) {
                mpz_class s = w[m];
                for (size_t r = m + 1; r < n; ++r) s -= y[r] * ib(r, m);
                mpz_divexact(y[m].get_mpz_t(), s.get_mpz_t(), ib(m, m).get_mpz_t());
            }
            for (size_t m = 0; m < n; ++m) {
                mpz_class r;
                mpz_fdiv_r(r.get_mpz_t(), y[m].get_mpz_t(), pm.get_mpz_t());
                rows[i][j * n + m] = r.get_ui();
            }
        }
    return fp_left_kernel(rows, p).empty();
}

/* Smallest ring containing the lattice generated by gens/denom. Products
 * of integral elements are integral, so for lattices of algebraic
 * integers this stays inside the maximal order and terminates. */
equation_order ring_closure(monic_polynomial const & f, std::vector<std::vector<mpz_class>> gens,
                            mpz_class denom)
{
    equation_order o(f, std::move(gens), std::move(denom));
    while (!o.is_ring()) {
        size_t n = size_t(o.degree());
        mpz_class const & d = o.denominator();
        mpz_class d2 = d * d;
        std::vector<std::vector<mpz_class>> next;
        for (size_t i = 0; i < n; ++i) {
            auto r = o.basis_numerators().row(i);
            for (auto & x : r) x *= d;
            next.push_back(std::move(r));
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                auto prod = mul_mod_poly(o.basis_numerators().row(i), o.basis_numerators().row(j), f);
                if (!o.coordinates(prod, d2)) next.push_back(std::move(prod));
            }
        o = equation_order(f, std::move(next), d2);
    }
    return o;
}

}  // namespace

/* ---------------- monic_polynomial ---------------- */

monic_polynomial::monic_polynomial(std::vector<mpz_class> low_coeffs)
    : low_(std::move(low_coeffs))
{
    if (low_.empty()) throw precondition_error("monic_polynomial: degree must be >= 1");
}

monic_polynomial monic_polynomial::from_ints(std::vector<int64_t> const & low_coeffs)
{
    std::vector<mpz_class> c;
    c.reserve(low_coeffs.size());
    for (int64_t x : low_coeffs) c.emplace_back(static_cast<long>(x));
    return monic_polynomial(std::move(c));
}

monic_polynomial monic_polynomial::trinomial(int n, mpz_class const & a, mpz_class const & b)
{
    if (n < 2) throw precondition_error("trinomial: n < 2");
    std::vector<mpz_class> c(size_t(n), 0);
    c[0] = b;
    c[1] += a;
    return monic_polynomial(std::move(c));
}

monic_polynomial monic_polynomial::binomial(int n, mpz_class const & m)
{
    if (n < 1) throw precondition_error("binomial: n < 1");
    std::vector<mpz_class> c(size_t(n), 0);
    c[0] = -m;
    return monic_polynomial(std::move(c));
}

zpoly monic_polynomial::full() const
{
    zpoly a = low_;
    a.emplace_back(1);
    return a;
}

std::string monic_polynomial::to_string() const
{
    std::ostringstream os;
    int n = degree();
    os << "x^" << n;
    for (int i = n - 1; i >= 0; --i) {
        mpz_class const & c = low_[size_t(i)];
        if (c == 0) continue;
        os << (c < 0 ? " - " : " + ");
        mpz_class a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

/* ---------------- zmatrix / determinant / HNF ---------------- */

zmatrix zmatrix::identity(size_t n)
{
    zmatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<mpz_class> zmatrix::row(size_t i) const
{
    return {a_.begin() + long(i * cols_), a_.begin() + long((i + 1) * cols_)};
}

mpz_class determinant(zmatrix m)
{
    size_t n = m.rows();
    if (n != m.cols()) throw precondition_error("determinant: matrix is not square");
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

zmatrix hermite_lower(std::vector<std::vector<mpz_class>> gens, size_t n)
{
    for (auto const & g : gens)
        if (g.size() != n) throw precondition_error("hermite_lower: generator has wrong length");
    zmatrix h(n, n);
    std::vector<size_t> active(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) active[i] = i;
    for (size_t col = n; col-- > 0;) {
        /* Euclid on column col among the active rows */
        for (;;) {
            size_t best = gens.size();
            size_t nonzero = 0;
            for (size_t r : active) {
                if (gens[r][col] == 0) continue;
                ++nonzero;
                if (best == gens.size() || abs(gens[r][col]) < abs(gens[best][col])) best = r;
            }
            if (nonzero == 0) throw precondition_error("hermite_lower: lattice is not of full rank");
            if (nonzero == 1) {
                if (gens[best][col] < 0)
                    for (auto & x : gens[best]) x = -x;
                for (size_t j = 0; j < n; ++j) h(col, j) = gens[best][j];
                active.erase(std::find(active.begin(), active.end(), best));
                break;
            }
            for (size_t r : active) {
                if (r == best || gens[r][col] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), gens[r][col].get_mpz_t(), gens[best][col].get_mpz_t());
                for (size_t j = 0; j <= col; ++j) gens[r][j] -= q * gens[best][j];
            }
        }
    }
    for (size_t i = 1; i < n; ++i)
        for (size_t j = i; j-- > 0;) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(j, j).get_mpz_t());
            if (q == 0) continue;
            for (size_t k = 0; k <= j; ++k) h(i, k) -= q * h(j, k);
        }
    return h;
}

/* ---------------- resultants ---------------- */

zpoly derivative(zpoly const & a)
{
    zpoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

mpz_class resultant(zpoly a, zpoly b)
{
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    mpz_class ca = content(a), cb = content(b);
    for (auto & c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    for (auto & c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    mpz_class t = pow_mpz(ca, (unsigned long) deg(b)) * pow_mpz(cb, (unsigned long) deg(a));
    int s = 1;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if (deg(a) % 2 && deg(b) % 2) s = -1;
    }
    if (deg(b) == 0) return s * t * pow_mpz(b[0], (unsigned long) deg(a));
    mpz_class g = 1, h = 1;
    for (;;) {
        int delta = deg(a) - deg(b);
        if (deg(a) % 2 && deg(b) % 2) s = -s;
        zpoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.empty()) return 0;
        mpz_class div = g * pow_mpz(h, (unsigned long) delta);
        for (auto & c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
        b = std::move(r);
        g = a.back();
        /* h <- g^delta / h^(delta-1) */
        mpz_class num = pow_mpz(g, (unsigned long) delta);
        mpz_class den = pow_mpz(h, (unsigned long) (delta - 1));
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (deg(b) <= 0) break;
    }
    /* h <- lc(b)^deg(a) / h^(deg(a)-1) */
    mpz_class num = pow_mpz(b[0], (unsigned long) deg(a));
    mpz_class den = pow_mpz(h, (unsigned long) (deg(a) - 1));
    mpz_class hh;
    mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * hh;
}

mpz_class poly_disc_resultant(monic_polynomial const & f)
{
    int n = f.degree();
    if (n < 2) throw precondition_error("poly_disc_resultant: degree < 2");
    zpoly a = f.full();
    mpz_class r = resultant(a, derivative(a));
    return (n * (n - 1) / 2) % 2 ? mpz_class(-r) : r;
}

/* ---------------- equation_order ---------------- */

not_a_ring_error::not_a_ring_error(size_t i_, size_t j_)
    : precondition_error("lattice is not closed under multiplication: e_" + std::to_string(i_)
                         + " * e_" + std::to_string(j_) + " is not in the lattice")
    , i(i_)
    , j(j_)
{
}

std::vector<mpz_class> mul_mod_poly(std::vector<mpz_class> const & a,
                                    std::vector<mpz_class> const & b,
                                    monic_polynomial const & f)
{
    size_t n = size_t(f.degree());
    std::vector<mpz_class> prod(2 * n - 1, 0);
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
    }
    for (size_t d = 2 * n - 2; d >= n; --d) {
        mpz_class c = prod[d];
        if (c == 0) continue;
        for (size_t i = 0; i < n; ++i) prod[d - n + i] -= c * f.coeff(int(i));
    }
    prod.resize(n);
    return prod;
}

equation_order equation_order::power_order(monic_polynomial f)
{
    size_t n = size_t(f.degree());
    std::vector<std::vector<mpz_class>> gens(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) gens[i][i] = 1;
    return equation_order(std::move(f), std::move(gens), 1);
}

equation_order::equation_order(monic_polynomial f, std::vector<std::vector<mpz_class>> generators,
                               mpz_class denominator)
    : f_(std::move(f))
    , denom_(std::move(denominator))
{
    if (denom_ <= 0) throw precondition_error("equation_order: denominator must be positive");
    size_t n = size_t(f_.degree());
    basis_ = hermite_lower(std::move(generators), n);
    mpz_class g = denom_;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) g = gcd(g, basis_(i, j));
    if (g != 1) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j <= i; ++j)
                mpz_divexact(basis_(i, j).get_mpz_t(), basis_(i, j).get_mpz_t(), g.get_mpz_t());
        mpz_divexact(denom_.get_mpz_t(), denom_.get_mpz_t(), g.get_mpz_t());
    }
    if (basis_(0, 0) != denom_)
        throw precondition_error("equation_order: lattice must meet Q*1 exactly in Z*1");
    build_table();
}

void equation_order::build_table()
{
    size_t n = size_t(degree());
    table_ = multiplication_table(n);
    mpz_class d2 = denom_ * denom_;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            auto prod = mul_mod_poly(basis_.row(i), basis_.row(j), f_);
            auto c = coordinates(prod, d2);
            if (!c) {
                bad_pair_ = {i, j};
                return;
            }
            for (size_t k = 0; k < n; ++k) {
                table_(i, j, k) = (*c)[k];
                table_(j, i, k) = (*c)[k];
            }
        }
}

multiplication_table const & equation_order::table() const
{
    if (bad_pair_) throw not_a_ring_error(bad_pair_->first, bad_pair_->second);
    return table_;
}

std::optional<std::vector<mpz_class>> equation_order::coordinates(std::vector<mpz_class> const & num,
                                                                  mpz_class const & den) const
{
    size_t n = size_t(degree());
    std::vector<mpz_class> c(n);
    for (size_t j = n; j-- > 0;) {
        mpz_class s = num[j] * denom_;
        for (size_t i = j + 1; i < n; ++i) s -= den * c[i] * basis_(i, j);
        mpz_class q = den * basis_(j, j);
        if (!mpz_divisible_p(s.get_mpz_t(), q.get_mpz_t())) return std::nullopt;
        mpz_divexact(c[j].get_mpz_t(), s.get_mpz_t(), q.get_mpz_t());
    }
    return c;
}

bool equation_order::contains(equation_order const & other) const
{
    if (!(other.f_ == f_)) return false;
    for (size_t i = 0; i < size_t(degree()); ++i)
        if (!coordinates(other.basis_.row(i), other.denom_)) return false;
    return true;
}

std::vector<mpz_class> equation_order::to_power_basis(std::vector<mpz_class> const & coords) const
{
    size_t n = size_t(degree());
    std::vector<mpz_class> r(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) r[j] += coords[i] * basis_(i, j);
    return r;
}

std::vector<mpz_class> equation_order::multiply(std::vector<mpz_class> const & a,
                                                std::vector<mpz_class> const & b) const
{
    auto const & t = table();
    size_t n = size_t(degree());
    std::vector<mpz_class> r(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            mpz_class ab = a[i] * b[j];
            for (size_t k = 0; k < n; ++k) r[k] += ab * t(i, j, k);
        }
    }
    return r;
}

mpq_class equation_order::covolume() const
{
    mpz_class num = 1;
    for (size_t i = 0; i < size_t(degree()); ++i) num *= basis_(i, i);
    mpq_class v(num, pow_mpz(denom_, (unsigned long) degree()));
    v.canonicalize();
    return v;
}

std::string equation_order::to_string() const
{
    std::ostringstream os;
    os << "order of " << f_.to_string() << " / " << denom_.get_str() << " [";
    for (size_t i = 0; i < size_t(degree()); ++i) {
        os << (i ? "; " : "");
        for (size_t j = 0; j < size_t(degree()); ++j) os << (j ? " " : "") << basis_(i, j).get_str();
    }
    os << "]";
    return os.str();
}

multiplication_table const & multiplication_table_of(equation_order const & o) { return o.table(); }

/* ---------------- index form, index, discriminant ---------------- */

index_form index_form_value(equation_order const & o, std::vector<mpz_class> const & beta)
{
    size_t n = size_t(o.degree());
    if (beta.size() != n) throw precondition_error("index_form_value: beta has wrong length");
    zmatrix m(n, n);
    std::vector<mpz_class> pw(n, 0);
    pw[0] = 1;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m(i, j) = pw[j];
        if (i + 1 < n) pw = o.multiply(pw, beta);
    }
    return {determinant(std::move(m)), 1};
}

mpz_class order_index(equation_order const & sub, equation_order const & sup)
{
    if (!(sub.poly() == sup.poly())) throw containment_error("order_index: orders over different polynomials");
    size_t n = size_t(sub.degree());
    zmatrix t(n, n);
    for (size_t i = 0; i < n; ++i) {
        auto c = sup.coordinates(sub.basis_numerators().row(i), sub.denominator());
        if (!c) throw containment_error("order_index: sub is not contained in sup");
        for (size_t j = 0; j < n; ++j) t(i, j) = (*c)[j];
    }
    return abs(determinant(std::move(t)));
}

mpz_class order_disc(equation_order const & o)
{
    auto const & c = o.table();
    size_t n = size_t(o.degree());
    std::vector<mpz_class> tr(n, 0);
    for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) tr[k] += c(k, l, l);
    zmatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) m(i, j) += c(i, j, k) * tr[k];
    return determinant(std::move(m));
}

std::vector<mpz_class> charpoly(zmatrix const & m)
{
    size_t n = m.rows();
    std::vector<mpz_class> a(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    auto full = berkowitz(mpz_ring{}, a, n);
    return {full.begin() + 1, full.end()};
}

/* ---------------- saturation ---------------- */

/* One enlargement round looks at x = (a_0 e_0 + ... + a_{n-1} e_{n-1}) / p
 * with a in F_p^n \ {0}; x is integral iff the characteristic polynomial of
 * multiplication by a (in the current basis) has a_k divisible by p^k.
 * Such an a reduces to a nilpotent of O/pO, so only the nilradical of
 * O/pO (kernel of Frobenius^j with p^j >= n) is enumerated. The integral
 * a form an F_p-subspace, so members of the span found so far are not
 * retested. The round output is the ring generated by O and all integral
 * candidates. Each round first runs the multiplier-ring test, which stops
 * without enumerating once O is already p-maximal. */
equation_order p_saturate(equation_order const & o, int64_t p, uint64_t enumeration_limit)
{
    if (p < 2 || !is_prime(uint64_t(p))) throw precondition_error("p_saturate: p must be prime");
    (void) o.table();   // throws for non-rings
    size_t n = size_t(o.degree());
    uint64_t pp = uint64_t(p);
    uint64_t modulus = 1;
    for (size_t i = 0; i < n; ++i) {
        if (modulus > (uint64_t(1) << 62) / pp)
            throw resource_error("p_saturate: p^n does not fit the modular charpoly range");
        modulus *= pp;
    }
    mod_ring ring{modulus};

    equation_order cur = o;
    for (;;) {
        auto const & c = cur.table();
        fp_algebra alg{n, pp, std::vector<uint64_t>(n * n * n)};
        std::vector<uint64_t> cm(n * n * n);   // constants mod p^n
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    mpz_class x = c(i, j, k) % mpz_class(static_cast<unsigned long>(modulus));
                    if (x < 0) x += static_cast<unsigned long>(modulus);
                    cm[(i * n + j) * n + k] = x.get_ui();
                    alg.c[(i * n + j) * n + k] = x.get_ui() % pp;
                }

        auto radical = fp_radical(alg);
        size_t r = radical.size();
        /* p^r, saturating just above the limit */
        uint64_t count = 1;
        bool over = false;
        for (size_t i = 0; i < r && !over; ++i) {
            over = count > enumeration_limit / pp;
            if (!over) count *= pp;
        }
        /* small spaces are quicker to enumerate than to test */
        if ((over || count > 128) && p_maximal_by_multipliers(c, radical, pp)) return cur;
        if (over)
            throw resource_error("p_saturate: candidate space " + std::to_string(p) + "^" + std::to_string(r)
                                 + " exceeds enumeration limit " + std::to_string(enumeration_limit));

        fp_span found(n, pp);
        std::vector<uint64_t> coef(r, 0);
        std::vector<uint64_t> mat(n * n);
        for (uint64_t idx = 1; idx < count; ++idx) {
            for (size_t k = 0; k < r; ++k) {
                if (++coef[k] < pp) break;
                coef[k] = 0;
            }
            fp_vec v(n, 0);
            for (size_t k = 0; k < r; ++k)
                if (coef[k])
                    for (size_t i = 0; i < n; ++i) v[i] = (v[i] + coef[k] * radical[k][i]) % pp;
            if (found.contains(v)) continue;
            /* multiplication by v: column j holds v * e_j */
            std::fill(mat.begin(), mat.end(), 0);
            for (size_t i = 0; i < n; ++i) {
                if (!v[i]) continue;
                for (size_t j = 0; j < n; ++j)
                    for (size_t k = 0; k < n; ++k)
                        mat[k * n + j] = ring.add(mat[k * n + j], ring.mul(v[i], cm[(i * n + j) * n + k]));
            }
            auto cp = berkowitz(ring, mat, n);
            bool integral = true;
            uint64_t pk = 1;
            for (size_t k = 1; k <= n && integral; ++k) {
                pk *= pp;
                integral = cp[k] % pk == 0;
            }
            if (integral) found.insert(v);
        }
        if (found.dimension() == 0) return cur;

        /* rebuild: O + sum Z * (a / p) over a spanning set of the integral a */
        std::vector<std::vector<mpz_class>> gens;
        for (size_t i = 0; i < n; ++i) {
            auto row = cur.basis_numerators().row(i);
            for (auto & x : row) x *= p;
            gens.push_back(std::move(row));
        }
        for (auto const & v : found.basis()) {
            std::vector<mpz_class> a(n);
            for (size_t i = 0; i < n; ++i) a[i] = static_cast<unsigned long>(v[i]);
            gens.push_back(cur.to_power_basis(a));
        }
        cur = ring_closure(cur.poly(), std::move(gens), cur.denominator() * p);
    }
}

bool is_p_maximal(equation_order const & o, int64_t p)
{
    if (p < 2 || !is_prime(uint64_t(p))) throw precondition_error("is_p_maximal: p must be prime");
    auto const & c = o.table();
    size_t n = size_t(o.degree());
    uint64_t pp = uint64_t(p);
    mpz_class pm = p;
    fp_algebra alg{n, pp, std::vector<uint64_t>(n * n * n)};
    for (size_t i = 0; i < n * n * n; ++i) {
        mpz_class x;
        mpz_fdiv_r(x.get_mpz_t(), c(i / (n * n), (i / n) % n, i % n).get_mpz_t(), pm.get_mpz_t());
        alg.c[i] = x.get_ui();
    }
    return p_maximal_by_multipliers(c, fp_radical(alg), pp);
}

equation_order_index_result equation_order_index(monic_polynomial const & f,
                                                 std::vector<int64_t> const & candidate_primes,
                                                 uint64_t enumeration_limit)
{
    auto base = equation_order::power_order(f);
    equation_order cur = base;
    for (int64_t p : candidate_primes) cur = p_saturate(cur, p, enumeration_limit);
    return {order_index(base, cur), cur};
}

}  // namespace eos
