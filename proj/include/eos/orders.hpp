#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eos/errors.hpp"

namespace eos {

/* Dense integer polynomial, coefficients from low to high degree. */
using zpoly = std::vector<mpz_class>;

/* X^n + c_{n-1} X^{n-1} + ... + c_0. Irreducibility is not assumed. */
class monic_polynomial {
  public:
    /* low_coeffs = c_0 .. c_{n-1}; the leading 1 is implicit */
    explicit monic_polynomial(std::vector<mpz_class> low_coeffs);
    static monic_polynomial from_ints(std::vector<int64_t> const & low_coeffs);

    /* X^n + a X + b */
    static monic_polynomial trinomial(int n, mpz_class const & a, mpz_class const & b);
    /* X^n - m */
    static monic_polynomial binomial(int n, mpz_class const & m);

    int degree() const { return int(low_.size()); }
    mpz_class const & coeff(int i) const { return low_[size_t(i)]; }
    std::vector<mpz_class> const & low_coeffs() const { return low_; }
    /* all n+1 coefficients including the leading 1 */
    zpoly full() const;

    std::string to_string() const;
    bool operator==(monic_polynomial const &) const = default;

  private:
    std::vector<mpz_class> low_;
};

/* Row-major integer matrix. */
class zmatrix {
  public:
    zmatrix() = default;
    zmatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static zmatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    mpz_class & operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    mpz_class const & operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    std::vector<mpz_class> row(size_t i) const;

    bool operator==(zmatrix const &) const = default;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

/* Fraction-free (Bareiss) determinant of a square matrix. */
mpz_class determinant(zmatrix m);

/* Lower-triangular Hermite form of the lattice spanned by the rows:
 * row i is supported on columns 0..i, has a positive diagonal entry,
 * and 0 <= row_i[j] < row_j[j] for j < i. Throws if rank < n. */
zmatrix hermite_lower(std::vector<std::vector<mpz_class>> generators, size_t n);

/* Res(A, B) by the subresultant PRS. */
mpz_class resultant(zpoly a, zpoly b);
zpoly derivative(zpoly const & a);

/* disc(f) = (-1)^(n(n-1)/2) Res(f, f') for monic f. */
mpz_class poly_disc_resultant(monic_polynomial const & f);

/* Structure constants c(i,j,k): e_i e_j = sum_k c(i,j,k) e_k. */
class multiplication_table {
  public:
    multiplication_table() = default;
    explicit multiplication_table(size_t n) : n_(n), c_(n * n * n) {}
    size_t degree() const { return n_; }
    mpz_class & operator()(size_t i, size_t j, size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    mpz_class const & operator()(size_t i, size_t j, size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

  private:
    size_t n_ = 0;
    std::vector<mpz_class> c_;
};

/* The lattice is not closed under multiplication: e_i * e_j escapes it. */
class not_a_ring_error : public precondition_error {
  public:
    not_a_ring_error(size_t i, size_t j);
    size_t i, j;
};

class containment_error : public precondition_error {
  public:
    using precondition_error::precondition_error;
};

/* A full-rank lattice in Q[x]/(f) containing 1, stored as a
 * lower-triangular Hermite basis over a common denominator. Row 0 is
 * always (denominator, 0, ..., 0), i.e. the element 1. When the lattice
 * is closed under multiplication it is an order, and the structure
 * constants are kept alongside. */
class equation_order {
  public:
    /* Z[theta] = Z<1, theta, ..., theta^(n-1)> */
    static equation_order power_order(monic_polynomial f);

    /* Lattice spanned by generators/denominator (rows in power-basis
     * coordinates). Needs at least rank n and must meet Q*1 in Z*1. */
    equation_order(monic_polynomial f, std::vector<std::vector<mpz_class>> generators,
                   mpz_class denominator);

    int degree() const { return f_.degree(); }
    monic_polynomial const & poly() const { return f_; }
    zmatrix const & basis_numerators() const { return basis_; }
    mpz_class const & denominator() const { return denom_; }

    bool is_ring() const { return !bad_pair_.has_value(); }
    /* throws not_a_ring_error naming the first offending pair */
    multiplication_table const & table() const;

    /* Integer coordinates of num/den in this basis, if it lies in the lattice. */
    std::optional<std::vector<mpz_class>> coordinates(std::vector<mpz_class> const & num,
                                                      mpz_class const & den) const;
    bool contains(equation_order const & other) const;

    /* element given by coordinates -> numerators over denominator() */
    std::vector<mpz_class> to_power_basis(std::vector<mpz_class> const & coords) const;
    std::vector<mpz_class> multiply(std::vector<mpz_class> const & a,
                                    std::vector<mpz_class> const & b) const;

    /* |det(basis)| / denominator^n as the pair (numerator, denominator^n) */
    mpq_class covolume() const;

    std::string to_string() const;
    bool operator==(equation_order const & o) const
    {
        return f_ == o.f_ && denom_ == o.denom_ && basis_ == o.basis_;
    }

  private:
    monic_polynomial f_;
    zmatrix basis_;
    mpz_class denom_;
    multiplication_table table_;
    std::optional<std::pair<size_t, size_t>> bad_pair_;

    void build_table();
};

/* Product of two power-basis numerator vectors modulo f. */
std::vector<mpz_class> mul_mod_poly(std::vector<mpz_class> const & a,
                                    std::vector<mpz_class> const & b,
                                    monic_polynomial const & f);

multiplication_table const & multiplication_table_of(equation_order const & o);

struct index_form {
    mpz_class value;
    /* relative to the power-basis orientation 1 ^ theta ^ ... ^ theta^(n-1) */
    int orientation_sign = 1;
};

/* det of the matrix whose rows are 1, beta, ..., beta^(n-1) in the order's
 * basis; beta is given by its coordinates in that basis. */
index_form index_form_value(equation_order const & o, std::vector<mpz_class> const & beta);

/* [sup : sub] for sub contained in sup (same polynomial). */
mpz_class order_index(equation_order const & sub, equation_order const & sup);

/* det(Tr(e_i e_j)) with traces taken from the multiplication table. */
mpz_class order_disc(equation_order const & o);

/* Pohst-Zassenhaus test: p does not divide [O_max : o]. */
bool is_p_maximal(equation_order const & o, int64_t p);

inline constexpr uint64_t default_enumeration_limit = uint64_t(1) << 24;

/* Smallest order containing o whose index in the maximal order is prime
 * to p. See orders.cpp for the enlargement round. */
equation_order p_saturate(equation_order const & o, int64_t p,
                          uint64_t enumeration_limit = default_enumeration_limit);

struct equation_order_index_result {
    mpz_class g;
    equation_order maximal_order;
};

/* Saturate Z[theta] at every candidate prime; g = [O : Z[theta]]. */
equation_order_index_result equation_order_index(monic_polynomial const & f,
                                                 std::vector<int64_t> const & candidate_primes,
                                                 uint64_t enumeration_limit = default_enumeration_limit);

/* Characteristic polynomial coefficients a_1..a_n of a square matrix
 * (det(tI - M) = t^n + a_1 t^(n-1) + ... + a_n), division-free. */
std::vector<mpz_class> charpoly(zmatrix const & m);

}  // namespace eos
