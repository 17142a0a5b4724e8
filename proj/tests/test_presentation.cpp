#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chebtl/io.hpp"
#include "chebtl/presentation.hpp"

using namespace chebtl;

namespace {

const QuadraticBlock* find_block(const QuadraticReport& r, int a, int b) {
  for (const auto& q : r.blocks)
    if (q.a == a && q.b == b) return &q;
  return nullptr;
}

Monomial word(std::initializer_list<Generator> g, Coeff c = 1) { return Monomial{c, g}; }

}  // namespace

TEST_CASE("generators") {
  CHECK(Generator::up(2, 1).diagram() == b_right(2, 1));
  CHECK(Generator::down(2, 1).diagram() == b_left(2, 1));
  CHECK(Generator::idem(3).diagram() == Diagram::identity(3));
  CHECK(Generator::up(2, 1).label() == "b^1_4");
  CHECK(Generator::down(2, 1).label() == "^1b_2");
  CHECK(Generator::idem(2).label() == "1_2");
}

TEST_CASE("relation examples") {
  // b^1_2 ^1b_0 = 0
  CHECK(evaluate({word({Generator::up(0, 1), Generator::down(0, 1)})}, 0, 0).is_zero());
  // b^1_3 ^2b_1 = 0
  CHECK(evaluate({word({Generator::up(1, 1), Generator::down(1, 2)})}, 1, 1).is_zero());
  // KG5 at n = 2, i = 1, j = 3
  const auto lhs = evaluate({word({Generator::up(2, 1), Generator::up(4, 3)})}, 2, 6);
  const auto rhs = evaluate({word({Generator::up(2, 1), Generator::up(4, 1)})}, 2, 6);
  CHECK_FALSE(lhs.is_zero());
  CHECK(lhs == rhs);
  CHECK(*compose(b_right(2, 1), b_right(4, 3)) == *compose(b_right(2, 1), b_right(4, 1)));

  // Sums and coefficients.
  const auto two = evaluate({word({Generator::idem(1)}, 2), word({Generator::idem(1)}, -2)}, 1, 1);
  CHECK(two.is_zero());
  CHECK(evaluate({}, 3, 1).is_zero());
}

TEST_CASE("all families hold") {
  const auto rep = verify_relations(10);
  CHECK(rep.all_hold());
  CHECK_FALSE(rep.checks.empty());
  bool seen[5] = {};
  for (const auto& c : rep.checks) {
    CHECK(c.status == RelationStatus::holds);
    const auto f = static_cast<int>(c.relation.family);
    if (f < 5) seen[f] = true;
  }
  for (bool s : seen) CHECK(s);

  // The unswapped KG3 variant fails on every instance.
  REQUIRE_FALSE(rep.kg3_alt.empty());
  for (const auto& c : rep.kg3_alt) {
    CHECK(c.status == RelationStatus::violated);
    CHECK(c.witness.has_value());
  }

  const Json j = to_json(rep);
  CHECK(j.dump().find("KG3") != std::string::npos);
}

TEST_CASE("instance counts") {
  // KG2 has one instance per arrow n -> n+2, i = 1..n+1, for n <= n_max.
  std::size_t kg2 = 0;
  for (const auto& r : relation_instances(6))
    if (r.family == RelationFamily::kg2) ++kg2;
  std::size_t expect = 0;
  for (int n = 0; n <= 6; ++n) expect += static_cast<std::size_t>(n + 1);
  CHECK(kg2 == expect);
}

TEST_CASE("quadratic completeness") {
  const auto rep = quadratic_completeness_check(8);
  CHECK(rep.ok());

  const auto* b00 = find_block(rep, 0, 0);
  REQUIRE(b00);
  CHECK(b00->paths == 1);
  CHECK(b00->degree2_dim == 0);
  CHECK(b00->relation_rank == 1);

  const auto* b11 = find_block(rep, 1, 1);
  REQUIRE(b11);
  CHECK(b11->paths == 4);
  CHECK(b11->degree2_dim == 0);
  CHECK(b11->relation_rank == 4);

  // 2 -> 4 -> 2 gives 9 paths, 2 -> 0 -> 2 one more; one cap-cup diagram survives.
  const auto* b22 = find_block(rep, 2, 2);
  REQUIRE(b22);
  CHECK(b22->paths == 10);
  CHECK(b22->degree2_dim == 1);
  CHECK(b22->relation_rank == 9);

  for (int n = 0; n + 4 <= 8; ++n) {
    const auto* b = find_block(rep, n, n + 4);
    REQUIRE(b);
    CHECK(b->paths == static_cast<std::size_t>((n + 1) * (n + 3)));
    EnumFilter f;
    f.width_eq = n;
    CHECK(b->degree2_dim == count_diagrams(n, n + 4, f));
    CHECK(b->ok());
  }
}

TEST_CASE("koszul linearity and arrows") {
  CHECK(koszul_linearity_check(0, 4));
  CHECK(koszul_linearity_check(3, 3));
  std::string witness;
  CHECK(quiver_arrow_counts_match(8, &witness));
  CHECK(witness.empty());
}
