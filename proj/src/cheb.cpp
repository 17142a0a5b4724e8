#include "chebtl/cheb.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "chebtl/diagram.hpp"
#include "chebtl/error.hpp"

namespace chebtl {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(int power, const BigInt& c) {
  if (power < 0) throw Error(Errc::invalid_argument, "negative exponent");
  std::vector<BigInt> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& a) {
  std::vector<BigInt> out = a.coeffs_;
  for (auto& v : out) v *= c;
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (mag != 1 || p == 0) os << mag;
    if (p >= 1) os << 'x';
    if (p >= 2) os << '^' << p;
  }
  return os.str();
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt catalan(int k) {
  if (k < 0) return 0;
  return binomial(2 * k, k) / (k + 1);
}

IntPolynomial chebyshev(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative Chebyshev index");
  IntPolynomial prev = IntPolynomial::constant(1);
  if (n == 0) return prev;
  const IntPolynomial x = IntPolynomial::monomial(1);
  IntPolynomial cur = x;
  for (int i = 1; i < n; ++i) {
    IntPolynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt x_entry_formula(int n, int m) {
  if (n < 0 || m < n || (m - n) % 2 != 0) return 0;
  const int k = (m - n) / 2;
  const BigInt num = BigInt(n + 1) * binomial(n + 2 * k, k);
  if (num % (n + k + 1) != 0) throw Error(Errc::invalid_argument, "X entry not integral");
  return num / (n + k + 1);
}

BigInt y_entry_formula(int n, int m) {
  if (n < 0 || m < n || (m - n) % 2 != 0) return 0;
  const int k = (m - n) / 2;
  const BigInt b = binomial(n + k, k);
  return k % 2 == 0 ? b : BigInt(-b);
}

BigInt x_entry_enumerative(int n, int m) {
  if (n < 0 || m < n || (m - n) % 2 != 0) return 0;
  EnumFilter f;
  f.no_left_returns = true;
  return BigInt(count_diagrams(n, m, f));
}

BigInt y_entry_enumerative(int n, int m) {
  if (n < 0 || m < n || (m - n) % 2 != 0) return 0;
  EnumFilter f;
  f.no_left_returns = true;
  f.unnested_right_returns = true;
  const BigInt c(count_diagrams(n, m, f));
  return ((m - n) / 2) % 2 == 0 ? c : BigInt(-c);
}

namespace {

BaseChangeMatrix build(int N, Flavor flavor, MatrixMode mode) {
  if (N < 0) throw Error(Errc::invalid_argument, "negative matrix bound");
  BaseChangeMatrix out;
  out.size = N + 1;
  out.flavor = flavor;
  out.entries = ExactMatrix(static_cast<std::size_t>(N + 1), static_cast<std::size_t>(N + 1));
  for (int n = 0; n <= N; ++n) {
    for (int m = n; m <= N; m += 2) {
      BigInt v;
      if (flavor == Flavor::x)
        v = mode == MatrixMode::formula ? x_entry_formula(n, m) : x_entry_enumerative(n, m);
      else
        v = mode == MatrixMode::formula ? y_entry_formula(n, m) : y_entry_enumerative(n, m);
      out.entries.at(static_cast<std::size_t>(n), static_cast<std::size_t>(m)) = v;
    }
  }
  return out;
}

}  // namespace

BaseChangeMatrix x_matrix(int N, MatrixMode mode) { return build(N, Flavor::x, mode); }
BaseChangeMatrix y_matrix(int N, MatrixMode mode) { return build(N, Flavor::y, mode); }

IntPolynomial expand_standard(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative index");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int m = n; m >= 0; m -= 2) c[static_cast<std::size_t>(m)] = y_entry_formula(m, n);
  return IntPolynomial(std::move(c));
}

std::vector<BigInt> expand_projective_in_standards(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative index");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int m = n; m >= 0; m -= 2) c[static_cast<std::size_t>(m)] = x_entry_formula(m, n);
  return c;
}

std::vector<BigInt> to_u_basis(const IntPolynomial& f) {
  std::vector<BigInt> u(static_cast<std::size_t>(std::max(f.degree() + 1, 0)));
  for (int p = 0; p <= f.degree(); ++p) {
    const BigInt& a = f.coeffs()[static_cast<std::size_t>(p)];
    if (a == 0) continue;
    for (int m = p; m >= 0; m -= 2) u[static_cast<std::size_t>(m)] += a * x_entry_formula(m, p);
  }
  while (!u.empty() && u.back() == 0) u.pop_back();
  return u;
}

IntPolynomial from_u_basis(const std::vector<BigInt>& u) {
  IntPolynomial out;
  for (std::size_t n = 0; n < u.size(); ++n)
    if (u[n] != 0) out += u[n] * expand_standard(static_cast<int>(n));
  return out;
}

std::vector<int> cheb_product(int n, int m) {
  if (n < 0 || m < 0) throw Error(Errc::invalid_argument, "negative index");
  std::vector<int> out;
  for (int i = std::abs(n - m); i <= n + m; i += 2) out.push_back(i);
  return out;
}

bool cheb_product_identity(int n, int m) {
  IntPolynomial rhs;
  for (int i : cheb_product(n, m)) rhs += chebyshev(i);
  return chebyshev(n) * chebyshev(m) == rhs;
}

BigInt catalan_pairing(const IntPolynomial& f, const IntPolynomial& g) {
  BigInt s = 0;
  for (int a = 0; a <= f.degree(); ++a) {
    const BigInt& fa = f.coeffs()[static_cast<std::size_t>(a)];
    if (fa == 0) continue;
    for (int b = 0; b <= g.degree(); ++b) {
      const BigInt& gb = g.coeffs()[static_cast<std::size_t>(b)];
      if (gb == 0 || (a + b) % 2 != 0) continue;
      s += fa * gb * catalan((a + b) / 2);
    }
  }
  return s;
}

namespace {

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

// Cofactor expansion along the first row, skipping zero entries.
IntPolynomial laplace(const PolyMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return IntPolynomial::constant(1);
  if (n == 1) return a[0][0];
  IntPolynomial det;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    PolyMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) minor[r - 1].push_back(a[r][cc]);
    IntPolynomial term = a[0][c] * laplace(minor);
    if (c % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

}  // namespace

IntPolynomial tridiagonal_determinant(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative size");
  const auto sz = static_cast<std::size_t>(n);
  PolyMatrix a(sz, std::vector<IntPolynomial>(sz));
  for (std::size_t i = 0; i < sz; ++i) {
    a[i][i] = IntPolynomial::monomial(1);
    if (i + 1 < sz) a[i][i + 1] = a[i + 1][i] = IntPolynomial::constant(1);
  }
  return laplace(a);
}

bool determinant_check(int n) { return tridiagonal_determinant(n) == chebyshev(n); }

bool generating_function_check(int N) {
  if (N < 0) return true;
  // a(t) = 1 - x t + t^2 with coefficients in Z[x]; b = 1/a by b_k = -sum a_i b_{k-i}.
  const std::vector<IntPolynomial> a = {IntPolynomial::constant(1), IntPolynomial::monomial(1, -1),
                                        IntPolynomial::constant(1)};
  std::vector<IntPolynomial> b;
  b.push_back(IntPolynomial::constant(1));
  for (int k = 1; k <= N; ++k) {
    IntPolynomial s;
    for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i)
      s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
    b.push_back(BigInt(-1) * s);
  }
  for (int k = 0; k <= N; ++k)
    if (!(b[static_cast<std::size_t>(k)] == chebyshev(k))) return false;
  return true;
}

IntPolynomial truncation_operator(int k, const IntPolynomial& f) {
  std::vector<BigInt> u = to_u_basis(f);
  for (std::size_t n = 0; n < u.size(); ++n)
    if (static_cast<int>(n) > k) u[n] = 0;
  return from_u_basis(u);
}

void write_matrix_csv(std::ostream& os, const BaseChangeMatrix& m) {
  os << "n,m," << (m.flavor == Flavor::x ? "X" : "Y") << '\n';
  for (int n = 0; n < m.size; ++n)
    for (int c = 0; c < m.size; ++c)
      if (m.at(n, c) != 0) os << n << ',' << c << ',' << m.at(n, c) << '\n';
}

void write_chebyshev_csv(std::ostream& os, int N) {
  os << "n,power,coeff\n";
  for (int n = 0; n <= N; ++n) {
    const IntPolynomial u = chebyshev(n);
    for (int p = 0; p <= u.degree(); ++p)
      if (u.coeff(p) != 0) os << n << ',' << p << ',' << u.coeff(p) << '\n';
  }
}

}  // namespace chebtl
