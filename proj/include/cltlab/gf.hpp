#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cltlab::gf {

bool is_prime(int n);

/// Fully reduced residue arithmetic mod a prime q.
int add(int a, int b, int q);
int sub(int a, int b, int q);
int mul(int a, int b, int q);
int pow_mod(int a, long long e, int q);
int inv(int a, int q);  // Fermat inverse, a != 0

/// Square matrix over GF(q), entries stored reduced, row-major.
struct Matrix {
  int dim = 0;
  int q = 0;
  std::vector<int> entries;  // dim*dim values in [0,q)

  Matrix() = default;
  Matrix(int dim, int q);

  int at(int r, int c) const { return entries[r * dim + c]; }
  int& at(int r, int c) { return entries[r * dim + c]; }

  bool operator==(const Matrix& other) const = default;
  bool operator<(const Matrix& other) const;

  std::string to_string() const;
};

Matrix identity(int dim, int q);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_pow(const Matrix& a, long long e);
int mat_det(const Matrix& a);
bool is_invertible(const Matrix& a);

/// Least k >= 1 with a^k = I. Throws NoSuchElement for singular input.
long long mat_order(const Matrix& a);

/// |GL(dim,q)| = prod_{i<dim} (q^dim - q^i).
unsigned long long gl_order(int dim, int q);

/// Monic polynomial arithmetic over GF(q), coefficient vector low-to-high.
struct Poly {
  int q = 0;
  std::vector<int> coeffs;  // normalized: no trailing zeros except the zero poly

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

Poly poly_xp_minus_1(int p, int q);
bool poly_divides(const Poly& divisor, const Poly& dividend);
bool poly_irreducible_deg_le3(const Poly& f);

/// All monic irreducible factors of x^p - 1 over GF(q) of degree <= 3,
/// in lexicographic coefficient order. Throws when a factor of degree > 3
/// would be required to complete the factorization.
std::vector<Poly> factor_xp_minus_1(int p, int q);

/// Companion matrix of a monic polynomial.
Matrix companion(const Poly& f);
Matrix block_diag(const std::vector<Matrix>& blocks, int q);

/// Deterministic matrix of multiplicative order exactly p in GL(dim,q).
/// Cyclotomic route: companion of an irreducible factor of x^p - 1 padded
/// with an identity block; unipotent Jordan block when p = q.
Matrix find_gl_element_of_order(int dim, int q, int p);

/// Deterministic 2x2 matrix over GF(q) with determinant 1 and order exactly
/// p, found by row-major exhaustive search over SL(2,q).
Matrix find_sl2_element_of_order(int q, int p);

/// One representative per GL(dim,q)-conjugacy class of elements of order
/// exactly p (p != q): block-companion matrices built from multisets of
/// irreducible factors of x^p - 1 with total degree dim. Empty when p does
/// not divide |GL(dim,q)|.
std::vector<Matrix> order_p_action_representatives(int dim, int q, int p);

}  // namespace cltlab::gf
