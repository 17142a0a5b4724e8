#pragma once

// Resolutions over the frozen algebra and the homological data read off them.
//
// A ComplexSpec is a bounded (or truncated) chain complex whose terms are
// direct sums of labelled P/M summands. A component of d_k from summand
// `from` of C_k to summand `to` of C_{k-1} is an algebra element c acting by
// right multiplication, v -> v c. That is a map of left modules, and after
// applying 1_j it becomes a finite integer matrix.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chebtl/algebra.hpp"
#include "chebtl/exactlinalg.hpp"
#include "chebtl/modcat.hpp"

namespace chebtl {

enum class Exec { serial, parallel };

struct Summand {
  ModuleId module;
  std::vector<Diagram> tag;
};

struct DiffEntry {
  std::size_t from;  // summand index in C_k
  std::size_t to;    // summand index in C_{k-1}
  AlgebraElement map;
};

class ComplexSpec {
 public:
  // terms[k] is C_k; diffs[k] lists the components of d_k (diffs[0] must be
  // empty). Signatures are checked and d_{k-1} d_k = 0 is verified in the
  // algebra; violations throw not_a_complex.
  ComplexSpec(std::vector<std::vector<Summand>> terms, std::vector<std::vector<DiffEntry>> diffs,
              std::optional<ModuleId> augmentation, std::optional<int> truncated_at);

  int length() const noexcept { return static_cast<int>(terms_.size()) - 1; }
  const std::vector<Summand>& term(int k) const { return terms_.at(static_cast<std::size_t>(k)); }
  const std::vector<DiffEntry>& diff(int k) const { return diffs_.at(static_cast<std::size_t>(k)); }
  const std::optional<ModuleId>& augmentation() const noexcept { return augmentation_; }
  // For truncations of infinite complexes: the last degree that was built.
  const std::optional<int>& truncated_at() const noexcept { return truncated_at_; }

  // Number of summands with the given module in degree k.
  std::size_t multiplicity(int k, const ModuleId& module) const;

 private:
  std::vector<std::vector<Summand>> terms_;
  std::vector<std::vector<DiffEntry>> diffs_;
  std::optional<ModuleId> augmentation_;
  std::optional<int> truncated_at_;
};

// 0 -> P_{n-2k}^{Y~_{n-2k,n}} -> ... -> P_n (-> M_n): differential components
// (-1)^{j-1} b^i with j the top-to-bottom order of the new right return.
ComplexSpec standard_resolution(int n);

// ... -> M_{n+2k}^{Y~_{n,n+2k}} -> ... -> M_n (-> L_n), degrees 0..k_max;
// components (-1)^{j-1} ^ib with j counted from the bottom.
ComplexSpec simple_by_standard_resolution(int n, int k_max);

// The bicomplex whose column k1 resolves M_{n+2k1}^{Y~_{n,n+2k1}} by
// projectives. Cell (k1, k2) holds P_{n+2k1-2k2} tagged by Y~_{n,n+2k1} x
// Y~_{n+2k1-2k2, n+2k1}. Horizontal maps are lifts of the simple-by-standard
// differential, already multiplied by (-1)^{k2}, so squares anticommute.
struct SimpleBicomplex {
  int n = 0;
  int k_max = 0;
  std::map<std::pair<int, int>, std::vector<Summand>> cells;
  // keyed by source cell; vertical goes to (k1, k2-1), horizontal to (k1-1, k2)
  std::map<std::pair<int, int>, std::vector<DiffEntry>> vertical;
  std::map<std::pair<int, int>, std::vector<DiffEntry>> horizontal;
};

SimpleBicomplex simple_bicomplex(int n, int k_max);

// d^v d^h + d^h d^v = 0 on every square, evaluated in the algebra. On failure
// the witness names the offending cell.
bool squares_anticommute(const SimpleBicomplex& b, std::string* witness = nullptr);

// Total complex, degrees 0..k_max, augmented onto L_n.
ComplexSpec totalize(const SimpleBicomplex& b);
ComplexSpec simple_projective_resolution(int n, int k_max);

// The complex 1_j(C) of free abelian groups. With `augmented`, the target
// 1_j(T) is prepended as degree 0 and C_k moves to degree k + 1.
SparseChainComplex graded_piece(const ComplexSpec& c, int j, bool augmented);

struct GradedExactness {
  int j = 0;
  std::vector<std::size_t> homology;  // H_0..H_L of 1_j(C), augmentation removed
  std::size_t target_dim = 0;         // dim 1_j(target)
  bool exact = false;                 // augmented complex exact where asserted
};

struct ExactnessReport {
  std::vector<GradedExactness> pieces;
  int asserted_below = 0;  // degrees < this are asserted
  bool exact() const;
};

// Requires an augmentation. For each j in [j_lo, j_hi], the augmented complex
// must be exact in the target and in degrees 0..asserted_below-1, where
// asserted_below is the truncation degree (or L + 1 for complete complexes).
// Exec::serial uses the dense reference homology and a serial loop over j.
ExactnessReport verify_exactness(const ComplexSpec& c, int j_lo, int j_hi,
                                 Exec exec = Exec::parallel);

// True iff every differential component is homogeneous of grading degree 1.
bool is_linear(const ComplexSpec& c, std::string* witness = nullptr);

// Cohomology of Hom(C, Y) at degree k, with Hom(P_a, Y) = 1_a Y and induced
// maps given by the left action of the differential components.
std::size_t hom_cohomology_dim(const ComplexSpec& projective_resolution, const ModuleId& y, int k);

// dim Ext^k(X, Y) for X, Y standard or simple.
std::size_t ext_dim(const ModuleId& x, const ModuleId& y, int k);

// Length of the minimal projective resolution of M_n; throws if the
// constructed resolution is not minimal.
int homological_dimension_standard(int n);

// F_k applied termwise to the projective resolution of M_n; result[i][j] is
// dim 1_j L^iF_k(M_n) for 0 <= j <= j_max.
std::vector<std::vector<std::size_t>> derived_truncation(int k, int n, int j_max,
                                                         Exec exec = Exec::parallel);

// The complex F_k(standard_resolution(n)).
ComplexSpec truncate_resolution(const ComplexSpec& c, int k);

}  // namespace chebtl
