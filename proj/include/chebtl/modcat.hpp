#pragma once

// Modules over the frozen algebra, presented through their graded pieces 1_j M.
//
//   P_n        basis of 1_j P_n: all of jB_n
//   M_n        P_n modulo diagrams with a right return; basis: jB_n without right returns
//   L_n        one-dimensional, spanned by 1_n at j = n
//   P_n(<=w)   A(<=w) 1_n; basis: jB_n of width <= w
//
// Nothing infinite-dimensional is materialized; every question is asked at a
// fixed idempotent index j.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "chebtl/algebra.hpp"
#include "chebtl/diagram.hpp"

namespace chebtl {

enum class ModuleKind { projective, standard, simple, truncated_projective };

struct ModuleId {
  ModuleKind kind = ModuleKind::projective;
  int n = 0;
  int w = 0;  // only meaningful for truncated_projective

  static ModuleId projective(int n) { return {ModuleKind::projective, n, 0}; }
  static ModuleId standard(int n) { return {ModuleKind::standard, n, 0}; }
  static ModuleId simple(int n) { return {ModuleKind::simple, n, 0}; }
  static ModuleId truncated_projective(int n, int w) {
    return {ModuleKind::truncated_projective, n, w};
  }

  // "P3", "M3", "L3", "P3(<=1)"; parse() accepts the same spellings.
  std::string label() const;
  static ModuleId parse(const std::string& text);

  auto operator<=>(const ModuleId&) const = default;
};

// Whether d (a diagram in jB_n) is a basis vector of 1_j M.
bool is_basis_diagram(const ModuleId& module, const Diagram& d);

std::vector<Diagram> basis(const ModuleId& module, int j);
std::size_t graded_dim(const ModuleId& module, int j);

struct ModuleElement {
  ModuleId module;
  int j = 0;
  std::map<Diagram, Coeff> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

ModuleElement basis_element(const ModuleId& module, const Diagram& d);

// Left action a * (basis diagram v) reduced to the module's basis; Zero when
// the product vanishes in the module.
std::optional<Diagram> act_on_basis(const ModuleId& module, const Diagram& a, const Diagram& v);

// Left action of a in iB_j on v in 1_j M; the result lives in 1_i M.
ModuleElement act(const Diagram& a, const ModuleElement& v);
ModuleElement act(const AlgebraElement& a, const ModuleElement& v);

// [M : L_n] = dim 1_n M.
std::size_t multiplicity_simple(const ModuleId& module, int n);

// Pairs (n - 2k, |X~_{n-2k, n}|) for 0 <= k <= n/2: the standard filtration
// multiplicities [P_n : M_{n-2k}], counted by enumeration.
std::vector<std::pair<int, std::size_t>> standard_filtration_multiplicities(int n);

// ([P_n], [M]) = dim Hom(P_n, M) = dim 1_n M. Throws invalid_argument unless
// the first argument is a projective.
std::size_t pairing(const ModuleId& projective, const ModuleId& module);

// (dim 1_0 M, ..., dim 1_{j_max} M)
std::vector<std::size_t> rho_vector(const ModuleId& module, int j_max);

// Graded dimensions of the restriction along iota: entry j is dim 1_{j+1} M.
std::vector<std::size_t> restriction_graded_dims(const ModuleId& module, int j_max);

// Induction along iota on indecomposable projectives: Ind(P_n) = P_{n+1}.
ModuleId induce_projective(const ModuleId& projective);

// CSV tables with columns module,j,dim (header row, LF endings).
void write_rho_csv(std::ostream& os, const std::vector<ModuleId>& modules, int j_max);
// Columns n,m,P_n:M_m,M_m:L_n for n, m <= max.
void write_multiplicity_csv(std::ostream& os, int max);

}  // namespace chebtl
