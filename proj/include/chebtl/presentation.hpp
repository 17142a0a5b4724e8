#pragma once

// Quiver presentation of the frozen algebra. Vertices are the idempotents 1_n;
// arrows n -> n+2 are the b^i_{n+2} = b_right(n, i) and arrows n+2 -> n are
// their reflections b_left(n, i). Words are read left to right as diagram
// composition.
//
// Relation families, as the diagrams satisfy them:
//   KG1  b_right(n,i) b_left(n,i+-1) = 0
//   KG2  b_right(n,i) b_left(n,i) = 0
//   KG3  b_right(n,i) b_left(n,j) = b_left(n-2,j) b_right(n-2,i-2)   (i >= j+2)
//        b_right(n,i) b_left(n,j) = b_left(n-2,j-2) b_right(n-2,i)   (j >= i+2)
//   KG4  b_left(n+2,i) b_left(n,j) = b_left(n+2,j+2) b_left(n,i)    (j >= i)
//   KG5  b_right(n,i) b_right(n+2,j) = b_right(n,j-2) b_right(n+2,i) (j >= i+2)
// plus 1_n 1_m = delta 1_n and the unit laws for arrows.

#include <optional>
#include <string>
#include <vector>

#include "chebtl/algebra.hpp"

namespace chebtl {

struct Generator {
  enum class Kind { idempotent, right, left };
  Kind kind = Kind::idempotent;
  int n = 0;
  int i = 0;  // unused for idempotents

  static Generator idem(int n) { return {Kind::idempotent, n, 0}; }
  static Generator up(int n, int i) { return {Kind::right, n, i}; }
  static Generator down(int n, int i) { return {Kind::left, n, i}; }

  Diagram diagram() const;
  // "1_2", "b^1_4", "^1b_2": superscript i, subscript target or source
  std::string label() const;
};

struct Monomial {
  Coeff coeff = 1;
  std::vector<Generator> word;
};

enum class RelationFamily { kg1, kg2, kg3, kg4, kg5, idempotent, kg3_alt };

const char* family_name(RelationFamily f);

struct RelationInstance {
  RelationFamily family;
  int n = 0, i = 0, j = 0;
  int source = 0, target = 0;  // signature of both sides
  std::vector<Monomial> lhs;   // empty = 0
  std::vector<Monomial> rhs;

  std::string to_string() const;
};

AlgebraElement evaluate(const std::vector<Monomial>& side, int source, int target);

// All instances of the sound families with every index <= n_max.
std::vector<RelationInstance> relation_instances(int n_max);

enum class RelationStatus { holds, violated };

struct RelationCheck {
  RelationInstance relation;
  RelationStatus status = RelationStatus::holds;
  std::optional<std::string> witness;  // lhs - rhs when violated
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  // KG3 with the i >= j+2 right-hand side reused for j >= i+2, tested separately
  // and not counted toward `all_hold`.
  std::vector<RelationCheck> kg3_alt;
  bool all_hold() const;
};

RelationReport verify_relations(int n_max);

struct QuadraticBlock {
  int a = 0, b = 0;
  std::size_t paths = 0;            // length-2 arrow paths a -> b
  std::size_t relation_rank = 0;    // rank of relation instances in path space
  std::size_t evaluation_rank = 0;  // rank of paths -> diagrams
  std::size_t degree2_dim = 0;      // |degree-2 part of 1_a A 1_b|
  bool ok() const { return paths - relation_rank == degree2_dim && evaluation_rank == degree2_dim; }
};

struct QuadraticReport {
  std::vector<QuadraticBlock> blocks;
  bool ok() const;
};

QuadraticReport quadratic_completeness_check(int n_max);

// Every differential component of the projective resolution of L_n through
// degree k_max is homogeneous of degree one.
bool koszul_linearity_check(int n, int k_max, std::string* witness = nullptr);

// Degree-one arrows 1_n -> 1_m counted by enumeration match n+1 (m = n+2),
// m+1 (n = m+2) and 0 otherwise, for n, m <= n_max.
bool quiver_arrow_counts_match(int n_max, std::string* witness = nullptr);

}  // namespace chebtl
