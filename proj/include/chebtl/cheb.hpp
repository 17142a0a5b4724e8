#pragma once

// Grothendieck-group shadow: Z[x] with [P_n] = x^n and [M_n] = U_n(x), the
// Chebyshev polynomials of the second kind. The base change between the two
// bases is carried by the integer matrices X and Y.

#include <ostream>
#include <string>
#include <vector>

#include "chebtl/exactlinalg.hpp"

namespace chebtl {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(int power, const BigInt& c = 1);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(int power) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // "x^8 - 7x^6 + 15x^4 - 10x^2 + 1"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

BigInt binomial(int n, int k);
BigInt catalan(int k);

// U_0 = 1, U_1 = x, U_{n+1} = x U_n - U_{n-1}.
IntPolynomial chebyshev(int n);

enum class Flavor { x, y };
enum class MatrixMode { formula, enumerative };

// Entry (n, m) sits at row n, column m; nonzero only for m = n + 2k.
struct BaseChangeMatrix {
  int size = 0;  // N + 1
  Flavor flavor = Flavor::x;
  ExactMatrix entries;
  const BigInt& at(int n, int m) const {
    return entries.at(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  }
};

// X_{n,n+2k} = (n+1)/(n+k+1) binom(n+2k,k), Y_{n,n+2k} = (-1)^k binom(n+k,k).
BigInt x_entry_formula(int n, int m);
BigInt y_entry_formula(int n, int m);
// |X~_{n,m}| and (-1)^k |Y~_{n,m}|.
BigInt x_entry_enumerative(int n, int m);
BigInt y_entry_enumerative(int n, int m);

BaseChangeMatrix x_matrix(int N, MatrixMode mode = MatrixMode::formula);
BaseChangeMatrix y_matrix(int N, MatrixMode mode = MatrixMode::formula);

// [M_n] = sum_k Y_{n-2k,n} x^{n-2k}.
IntPolynomial expand_standard(int n);
// [P_n] = sum_k X_{n-2k,n} [M_{n-2k}]; entry m of the result is X_{m,n}.
std::vector<BigInt> expand_projective_in_standards(int n);

// Coordinates in the U basis (index = n), computed with X; and back with Y.
std::vector<BigInt> to_u_basis(const IntPolynomial& f);
IntPolynomial from_u_basis(const std::vector<BigInt>& u);

// Indices |n-m|, |n-m|+2, ..., n+m.
std::vector<int> cheb_product(int n, int m);
// U_n U_m equals the sum of U_i over cheb_product(n, m).
bool cheb_product_identity(int n, int m);

// (x^a, x^b) = C_{(a+b)/2} for a + b even, else 0; extended bilinearly.
BigInt catalan_pairing(const IntPolynomial& f, const IntPolynomial& g);

// The n x n tridiagonal determinant with x on the diagonal and 1 beside it.
IntPolynomial tridiagonal_determinant(int n);
bool determinant_check(int n);
// 1 / (1 - x t + t^2) expanded to order N has coefficients U_0..U_N.
bool generating_function_check(int N);

// [F_k]: keep the U_0..U_k components of f.
IntPolynomial truncation_operator(int k, const IntPolynomial& f);

// CSV: n,m,value over the nonzero entries.
void write_matrix_csv(std::ostream& os, const BaseChangeMatrix& m);
// CSV: n,power,coeff over the nonzero coefficients of U_0..U_N.
void write_chebyshev_csv(std::ostream& os, int N);

}  // namespace chebtl
