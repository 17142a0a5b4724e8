#include "chebtl/algebra.hpp"

#include <sstream>

namespace chebtl {

AlgebraElement::AlgebraElement(const Diagram& d, Coeff c) : n_(d.n_left()), m_(d.m_right()) {
  if (c != 0) terms_.emplace(d, c);
}

void AlgebraElement::check_signature(int n, int m) const {
  if (n != n_ || m != m_)
    throw Error(Errc::signature_mismatch,
                "expected signature (" + std::to_string(n_) + "," + std::to_string(m_) + "), got (" +
                    std::to_string(n) + "," + std::to_string(m) + ")");
}

Coeff AlgebraElement::coeff(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? 0 : it->second;
}

void AlgebraElement::add_term(const Diagram& d, Coeff c) {
  check_signature(d.n_left(), d.m_right());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> AlgebraElement::degree() const {
  std::optional<int> deg;
  for (const auto& [d, c] : terms_) {
    if (deg && *deg != d.degree()) return std::nullopt;
    deg = d.degree();
  }
  return deg;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_signature(o.n_, o.m_);
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_signature(o.n_, o.m_);
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

AlgebraElement operator*(Coeff c, AlgebraElement a) {
  if (c == 0) return AlgebraElement(a.n_, a.m_);
  for (auto& [d, v] : a.terms_) v *= c;
  return a;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Coeff a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << d.to_string();
  }
  return os.str();
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.m_right() != b.n_left())
    throw Error(Errc::signature_mismatch, "cannot multiply (" + std::to_string(a.n_left()) + "," +
                                              std::to_string(a.m_right()) + ") by (" +
                                              std::to_string(b.n_left()) + "," +
                                              std::to_string(b.m_right()) + ")");
  AlgebraElement out(a.n_left(), b.m_right());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms())
      if (auto xy = compose(x, y)) out.add_term(*xy, cx * cy);
  return out;
}

AlgebraElement product_or_zero(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.m_right() != b.n_left()) return AlgebraElement(a.n_left(), b.m_right());
  return multiply(a, b);
}

std::vector<Diagram> hom_basis(int n, int m) { return enumerate(n, m); }

std::vector<Diagram> graded_component(int n, int m, int degree) {
  // degree = (n - w)/2 + (m - w)/2
  const int twice_width = n + m - 2 * degree;
  if (degree < 0 || twice_width < 0 || twice_width % 2 != 0) return {};
  EnumFilter f;
  f.width_eq = twice_width / 2;
  return enumerate(n, m, f);
}

std::vector<Diagram> width_ideal_basis(int n, int m, int k) {
  EnumFilter f;
  f.width_le = k;
  return enumerate(n, m, f);
}

}  // namespace chebtl
