#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "chebtl/homology.hpp"
#include "chebtl/io.hpp"
#include "oracles.hpp"

using namespace chebtl;

namespace {

// Hom(C, Y) assembled directly: Hom(P_a, Y) = 1_a Y, and a component c from a
// summand P_a of C_k to a summand P_b of C_{k-1} induces y -> c y on 1_b Y.
// Ranks are taken mod p, so nothing here goes through exactlinalg.
std::size_t hom_oracle(const ComplexSpec& c, const ModuleId& y, int k) {
  auto offsets = [&](int t, std::vector<std::size_t>& off,
                     std::vector<std::vector<Diagram>>& bases) {
    std::size_t total = 0;
    for (const auto& s : c.term(t)) {
      off.push_back(total);
      bases.push_back(basis(y, s.module.n));
      total += bases.back().size();
    }
    return total;
  };
  // delta^{t-1} : Hom(C_{t-1}, Y) -> Hom(C_t, Y), built from d_t.
  auto coboundary_rank = [&](int t) -> std::size_t {
    if (t <= 0 || t > c.length()) return 0;
    std::vector<std::size_t> off_src, off_dst;
    std::vector<std::vector<Diagram>> b_src, b_dst;
    const std::size_t cols = offsets(t - 1, off_src, b_src);
    const std::size_t rows = offsets(t, off_dst, b_dst);
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
    for (const auto& e : c.diff(t)) {
      const auto& src = b_src[e.to];
      const auto& dst = b_dst[e.from];
      for (std::size_t q = 0; q < src.size(); ++q) {
        const ModuleElement img = act(e.map, basis_element(y, src[q]));
        for (const auto& [d, coeff] : img.terms) {
          const auto it = std::find(dst.begin(), dst.end(), d);
          REQUIRE(it != dst.end());
          m[off_dst[e.from] + static_cast<std::size_t>(it - dst.begin())][off_src[e.to] + q] += coeff;
        }
      }
    }
    return oracle::rank_mod_p(m);
  };
  std::vector<std::size_t> off;
  std::vector<std::vector<Diagram>> bases;
  const std::size_t dim = offsets(k, off, bases);
  return dim - coboundary_rank(k + 1) - coboundary_rank(k);
}

std::vector<std::size_t> term_counts(const ComplexSpec& c) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= c.length(); ++k) out.push_back(c.term(k).size());
  return out;
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("standard resolution shape") {
  using V = std::vector<std::size_t>;
  CHECK(term_counts(standard_resolution(0)) == V{1});
  CHECK(term_counts(standard_resolution(1)) == V{1});
  CHECK(term_counts(standard_resolution(2)) == V{1, 1});
  CHECK(term_counts(standard_resolution(4)) == V{1, 3, 1});
  for (int n = 0; n <= 9; ++n) {
    const auto c = standard_resolution(n);
    CHECK(c.length() == n / 2);
    CHECK(c.augmentation() == ModuleId::standard(n));
    for (int k = 0; k <= c.length(); ++k)
      CHECK(c.multiplicity(k, ModuleId::projective(n - 2 * k)) == oracle::binom(n - k, k));
  }
}

TEST_CASE("simple-by-standard resolution shape") {
  for (int n = 0; n <= 6; ++n) {
    const auto c = simple_by_standard_resolution(n, 3);
    CHECK(c.truncated_at() == 3);
    CHECK(c.augmentation() == ModuleId::simple(n));
    CHECK(c.multiplicity(0, ModuleId::standard(n)) == 1);
    CHECK(c.multiplicity(1, ModuleId::standard(n + 2)) == static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= 3; ++k)
      CHECK(c.multiplicity(k, ModuleId::standard(n + 2 * k)) == oracle::binom(n + k, k));
  }
  CHECK(simple_by_standard_resolution(0, 2).multiplicity(2, ModuleId::standard(4)) == 1);
}

TEST_CASE("projective resolution of L_0 starts P_0 <- P_2") {
  const auto c = simple_projective_resolution(0, 4);
  REQUIRE(c.term(0).size() == 1);
  CHECK(c.term(0)[0].module == ModuleId::projective(0));
  REQUIRE(c.term(1).size() == 1);
  CHECK(c.term(1)[0].module == ModuleId::projective(2));
  for (int k = 0; k <= c.length(); ++k)
    for (const auto& d : c.diff(k)) CHECK(d.map.degree() == 1);
}

TEST_CASE("exactness") {
  for (int n = 0; n <= 6; ++n) {
    const auto rep = verify_exactness(standard_resolution(n), 0, 10);
    CHECK(rep.exact());
    for (const auto& p : rep.pieces) {
      // Resolution homology is the augmentation target in degree 0 only.
      CHECK(p.homology[0] == p.target_dim);
      for (std::size_t k = 1; k < p.homology.size(); ++k) CHECK(p.homology[k] == 0);
    }
  }
  for (int n = 0; n <= 3; ++n) {
    CHECK(verify_exactness(simple_by_standard_resolution(n, 4), 0, 8).exact());
    CHECK(verify_exactness(simple_projective_resolution(n, 4), 0, 8).exact());
  }
  const auto l0 = verify_exactness(simple_projective_resolution(0, 4), 0, 8);
  CHECK(l0.asserted_below == 4);
  for (const auto& p : l0.pieces) CHECK(p.homology[0] == (p.j == 0 ? 1u : 0u));
}

TEST_CASE("serial and parallel paths agree") {
  for (int n = 0; n <= 5; ++n) {
    const auto c = standard_resolution(n);
    const auto s = verify_exactness(c, 0, 8, Exec::serial);
    const auto p = verify_exactness(c, 0, 8, Exec::parallel);
    REQUIRE(s.pieces.size() == p.pieces.size());
    for (std::size_t i = 0; i < s.pieces.size(); ++i) {
      CHECK(s.pieces[i].homology == p.pieces[i].homology);
      CHECK(s.pieces[i].target_dim == p.pieces[i].target_dim);
    }
  }
  for (int k = 0; k <= 4; ++k)
    CHECK(derived_truncation(k, 4, 8, Exec::serial) == derived_truncation(k, 4, 8, Exec::parallel));
}

TEST_CASE("bad complexes are rejected") {
  // 1_1 composed with itself is not zero.
  const auto id = AlgebraElement::idempotent(1);
  std::vector<std::vector<Summand>> terms{{{ModuleId::projective(1), {}}},
                                          {{ModuleId::projective(1), {}}},
                                          {{ModuleId::projective(1), {}}}};
  std::vector<std::vector<DiffEntry>> diffs{{}, {{0, 0, id}}, {{0, 0, id}}};
  CHECK(code_of([&] { ComplexSpec(terms, diffs, std::nullopt, std::nullopt); }) == Errc::not_a_complex);

  // A component whose signature does not match its summands.
  std::vector<std::vector<Summand>> t2{{{ModuleId::projective(1), {}}}, {{ModuleId::projective(1), {}}}};
  std::vector<std::vector<DiffEntry>> d2{{}, {{0, 0, AlgebraElement::idempotent(2)}}};
  CHECK_THROWS_AS(ComplexSpec(t2, d2, std::nullopt, std::nullopt), Error);

  std::vector<std::vector<DiffEntry>> d3{{}, {{0, 5, id}}};
  CHECK_THROWS_AS(ComplexSpec(t2, d3, std::nullopt, std::nullopt), Error);
}

TEST_CASE("linearity") {
  CHECK(is_linear(standard_resolution(6)));
  CHECK(is_linear(simple_projective_resolution(0, 4)));
  CHECK(is_linear(simple_projective_resolution(3, 3)));

  // P_2 <- P_2 by the width-zero diagram: degree two.
  const Diagram cc = *compose(Diagram::make(2, 0, {{0, 1}}), Diagram::make(0, 2, {{0, 1}}));
  std::vector<std::vector<Summand>> terms{{{ModuleId::projective(2), {}}}, {{ModuleId::projective(2), {}}}};
  std::vector<std::vector<DiffEntry>> diffs{{}, {{0, 0, AlgebraElement(cc)}}};
  const ComplexSpec c(terms, diffs, std::nullopt, std::nullopt);
  std::string witness;
  CHECK_FALSE(is_linear(c, &witness));
  CHECK_FALSE(witness.empty());
}

TEST_CASE("bicomplex sign") {
  for (int n = 0; n <= 3; ++n) {
    const auto b = simple_bicomplex(n, 3);
    CHECK(squares_anticommute(b));
  }
  // Dropping the (-1)^{k2} twist makes some square commute instead.
  auto b = simple_bicomplex(1, 3);
  for (auto& [cell, entries] : b.horizontal)
    if (cell.second % 2)
      for (auto& e : entries) e.map = -1 * e.map;
  std::string witness;
  CHECK_FALSE(squares_anticommute(b, &witness));
  CHECK_FALSE(witness.empty());
}

TEST_CASE("ext examples") {
  CHECK(ext_dim(ModuleId::standard(2), ModuleId::standard(0), 0) == 1);
  CHECK(ext_dim(ModuleId::standard(2), ModuleId::standard(0), 1) == 1);
  for (int n = 0; n <= 6; ++n) CHECK(ext_dim(ModuleId::standard(n), ModuleId::simple(n), 0) == 1);
  CHECK(ext_dim(ModuleId::simple(0), ModuleId::simple(0), 2) == 1);
  CHECK(ext_dim(ModuleId::simple(0), ModuleId::simple(0), 1) == 0);
  CHECK(ext_dim(ModuleId::standard(3), ModuleId::simple(1), 1) == 2);
}

TEST_CASE("Hom cohomology matches the direct oracle") {
  for (int n = 0; n <= 6; ++n) {
    const auto res = standard_resolution(n);
    for (int k = 0; k <= res.length(); ++k)
      for (int m = 0; m <= 6; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        CHECK(hom_cohomology_dim(res, ModuleId::standard(m), k) == hom_oracle(res, ModuleId::standard(m), k));
        CHECK(hom_cohomology_dim(res, ModuleId::simple(m), k) == hom_oracle(res, ModuleId::simple(m), k));
        // Minimal resolution: Ext^k(M_n, L_m) is the multiplicity of P_m.
        CHECK(hom_oracle(res, ModuleId::simple(m), k) ==
              (m == n - 2 * k ? oracle::binom(n - k, k) : 0));
      }
  }
  for (int n = 0; n <= 2; ++n) {
    const auto res = simple_projective_resolution(n, 5);
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k <= 4; ++k)
        CHECK(hom_cohomology_dim(res, ModuleId::simple(m), k) == hom_oracle(res, ModuleId::simple(m), k));
  }
}

TEST_CASE("homological dimension") {
  CHECK(homological_dimension_standard(0) == 0);
  CHECK(homological_dimension_standard(5) == 2);
  CHECK(homological_dimension_standard(8) == 4);
  CHECK(standard_resolution(8).multiplicity(4, ModuleId::projective(0)) == 1);
}

TEST_CASE("derived truncation") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 7; ++k) {
      const auto t = derived_truncation(k, n, 9);
      for (std::size_t i = 0; i < t.size(); ++i)
        for (int j = 0; j <= 9; ++j) {
          const std::size_t expect = (k >= n && i == 0) ? graded_dim(ModuleId::standard(n), j) : 0;
          CHECK(t[i][static_cast<std::size_t>(j)] == expect);
        }
    }
  // F_k fixes P_n for n <= k.
  for (int n = 0; n <= 5; ++n)
    for (int k = n; k <= 6; ++k)
      for (int j = 0; j <= 8; ++j)
        CHECK(graded_dim(ModuleId::truncated_projective(n, k), j) == graded_dim(ModuleId::projective(n), j));
}

TEST_CASE("json export") {
  const Json j = to_json(standard_resolution(2));
  CHECK(j["augmentation"] == "M2");
  CHECK(j["truncated_at"].is_null());
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][1]["summands"][0]["module"] == "P0");
  CHECK(j.dump() == to_json(standard_resolution(2)).dump());

  const Json r = to_json(verify_exactness(standard_resolution(3), 0, 5));
  CHECK(r.dump().find("\"exact\"") != std::string::npos);
}
