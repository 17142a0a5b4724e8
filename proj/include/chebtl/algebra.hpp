#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chebtl/diagram.hpp"

namespace chebtl {

using Coeff = std::int64_t;

// An integer combination of diagrams sharing one signature (n, m), i.e. an
// element of the block 1_n A 1_m. The zero element keeps its signature.
class AlgebraElement {
 public:
  AlgebraElement(int n, int m) : n_(n), m_(m) {}
  explicit AlgebraElement(const Diagram& d, Coeff c = 1);

  static AlgebraElement idempotent(int n) { return AlgebraElement(Diagram::identity(n)); }

  int n_left() const noexcept { return n_; }
  int m_right() const noexcept { return m_; }
  const std::map<Diagram, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coeff(const Diagram& d) const;

  void add_term(const Diagram& d, Coeff c);

  // Grading degree if every term has the same number of returns.
  std::optional<int> degree() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(Coeff c, AlgebraElement a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string to_string() const;

 private:
  void check_signature(int n, int m) const;

  int n_;
  int m_;
  std::map<Diagram, Coeff> terms_;
};

// Bilinear extension of compose; throws signature_mismatch when a.m != b.n.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// The product of the idempotented algebra: zero (of signature (a.n, b.m)) when
// the inner signatures disagree, multiply otherwise.
AlgebraElement product_or_zero(const AlgebraElement& a, const AlgebraElement& b);

// Basis of 1_n A 1_m, of its degree-g part, and of 1_n A(<=k) 1_m.
std::vector<Diagram> hom_basis(int n, int m);
std::vector<Diagram> graded_component(int n, int m, int degree);
std::vector<Diagram> width_ideal_basis(int n, int m, int k);

}  // namespace chebtl
