#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "chebtl/diagram.hpp"
#include "chebtl/io.hpp"
#include "oracles.hpp"

using namespace chebtl;

namespace {

oracle::Matching partners_of(const Diagram& d) {
  oracle::Matching p(static_cast<std::size_t>(d.size()));
  for (int i = 0; i < d.size(); ++i) p[static_cast<std::size_t>(i)] = d.partner(i);
  return p;
}

std::vector<Diagram> all_diagrams(int n, int m) { return enumerate(n, m); }

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

TEST_CASE("construction") {
  const Diagram cap = Diagram::make(2, 0, {{0, 1}});
  CHECK(cap.left_returns() == 1);
  CHECK(cap.width() == 0);

  CHECK(Diagram::make(1, 1, {{0, 1}}) == Diagram::identity(1));

  const Diagram nested = Diagram::make(2, 2, {{0, 3}, {1, 2}});
  CHECK(nested.is_identity());

  CHECK(code_of([] { Diagram::make(2, 2, {{0, 2}, {1, 3}}); }) == Errc::crossing);
  CHECK(code_of([] { Diagram::make(2, 1, {{0, 1}}); }) == Errc::odd_total);
  CHECK(code_of([] { Diagram::make(2, 2, {{0, 1}}); }) == Errc::not_perfect_matching);
  CHECK(code_of([] { Diagram::make(2, 2, {{0, 1}, {1, 2}}); }) == Errc::not_perfect_matching);
  CHECK(code_of([] { Diagram::make(1, 1, {{0, 5}}); }) == Errc::not_perfect_matching);
}

TEST_CASE("enumeration matches brute force") {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; n + m <= 10; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      std::set<oracle::Matching> expected;
      for (auto& p : oracle::crossingless(n + m)) expected.insert(p);
      std::set<oracle::Matching> got;
      for (const auto& d : all_diagrams(n, m)) got.insert(partners_of(d));
      CHECK(got == expected);
      CHECK(count_diagrams(n, m) == expected.size());
    }
}

TEST_CASE("enumeration examples and filters") {
  CHECK(enumerate(2, 2).size() == 2);
  REQUIRE(enumerate(1, 1).size() == 1);
  CHECK(enumerate(1, 1)[0] == Diagram::identity(1));

  EnumFilter xf;
  xf.no_left_returns = true;
  CHECK(enumerate(1, 3, xf).size() == 2);
  EnumFilter yf = xf;
  yf.unnested_right_returns = true;
  CHECK(enumerate(1, 3, yf).size() == 2);
  CHECK(x_tilde(1, 3).size() == 2);
  CHECK(y_tilde(1, 3).size() == 2);

  // Every filter combination agrees with filtering the full list by hand.
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; n + m <= 9; ++m)
      for (int mask = 0; mask < 8; ++mask) {
        EnumFilter f;
        f.no_left_returns = mask & 1;
        f.no_right_returns = mask & 2;
        f.unnested_right_returns = mask & 4;
        f.width_le = 3;
        std::size_t expect = 0;
        for (const auto& d : all_diagrams(n, m)) {
          const bool ok = (!f.no_left_returns || d.left_returns() == 0) &&
                          (!f.no_right_returns || d.right_returns() == 0) &&
                          (!f.unnested_right_returns || !d.has_nested_right_returns()) &&
                          d.width() <= 3;
          expect += ok;
        }
        CHECK(count_diagrams(n, m, f) == expect);
      }

  const auto ds = enumerate(3, 5);
  CHECK(std::is_sorted(ds.begin(), ds.end()));
}

TEST_CASE("composition examples") {
  CHECK_FALSE(compose(b_right(0, 1), b_left(0, 1)).has_value());
  CHECK_FALSE(compose(b_right(1, 1), b_left(1, 2)).has_value());

  const Diagram cap = Diagram::make(2, 0, {{0, 1}});
  const Diagram cup = Diagram::make(0, 2, {{0, 1}});
  auto r = compose(cap, cup);
  REQUIRE(r.has_value());
  CHECK(r->n_left() == 2);
  CHECK(r->m_right() == 2);
  CHECK(r->left_returns() == 1);
  CHECK(r->right_returns() == 1);

  for (int n = 0; n <= 4; ++n)
    for (int m = 0; n + m <= 8; ++m)
      for (const auto& d : all_diagrams(n, m)) {
        CHECK(compose(Diagram::identity(n), d) == d);
        CHECK(compose(d, Diagram::identity(m)) == d);
      }

  CHECK(code_of([] { compose(Diagram::identity(1), Diagram::identity(2)); }) ==
        Errc::signature_mismatch);
}

TEST_CASE("composition matches the graph oracle") {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int s = 0; n + 2 * m + s <= 12 && s <= 4; ++s) {
        if ((n + m) % 2 || (m + s) % 2) continue;
        for (const auto& x : all_diagrams(n, m))
          for (const auto& y : all_diagrams(m, s)) {
            const auto got = compose(x, y);
            const auto want = oracle::compose(partners_of(x), n, m, partners_of(y), s);
            REQUIRE(got.has_value() == want.has_value());
            if (got) CHECK(partners_of(*got) == *want);
          }
      }
}

TEST_CASE("reflection, stacking, inclusion") {
  CHECK(reflect(Diagram::identity(3)) == Diagram::identity(3));
  for (int n = 0; n <= 6; ++n)
    for (int i = 1; i <= n + 1; ++i) CHECK(reflect(b_right(n, i)) == b_left(n, i));

  for (int n = 0; n <= 10; ++n)
    for (int m = 0; n + m <= 10; ++m)
      for (const auto& d : all_diagrams(n, m)) {
        const Diagram r = reflect(d);
        CHECK(r.n_left() == m);
        CHECK(reflect(r) == d);
        CHECK(r.left_returns() == d.right_returns());
      }

  CHECK(stack(Diagram::identity(1), Diagram::identity(1)) == Diagram::identity(2));
  const Diagram cup = Diagram::make(0, 2, {{0, 1}});
  CHECK(stack(cup, Diagram::identity(1)) == Diagram::make(1, 3, {{0, 1}, {2, 3}}));

  CHECK(add_through_top(Diagram::identity(2)) == Diagram::identity(3));
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int s = 0; n + 2 * m + s <= 8 && s <= 4; ++s) {
        if ((n + m) % 2 || (m + s) % 2) continue;
        for (const auto& x : all_diagrams(n, m)) {
          CHECK(add_through_top(x).width() == x.width() + 1);
          for (const auto& y : all_diagrams(m, s)) {
            const auto lhs = compose(add_through_top(x), add_through_top(y));
            const auto xy = compose(x, y);
            REQUIRE(lhs.has_value() == xy.has_value());
            if (xy) CHECK(*lhs == add_through_top(*xy));
          }
        }
      }
}

TEST_CASE("interchange law") {
  // stack(a,b) * stack(c,d) against stack(ac, bd) over small signatures.
  for (int na = 0; na <= 2; ++na)
    for (int ma = 0; ma <= 2; ++ma)
      for (int nb = 0; nb <= 2; ++nb)
        for (int mb = 0; mb <= 2; ++mb) {
          if ((na + ma) % 2 || (nb + mb) % 2) continue;
          for (int sc = 0; sc <= 2; ++sc)
            for (int sd = 0; sd <= 2; ++sd) {
              if ((ma + sc) % 2 || (mb + sd) % 2) continue;
              for (const auto& a : all_diagrams(na, ma))
                for (const auto& b : all_diagrams(nb, mb))
                  for (const auto& c : all_diagrams(ma, sc))
                    for (const auto& d : all_diagrams(mb, sd)) {
                      const auto ac = compose(a, c);
                      const auto bd = compose(b, d);
                      const auto lhs = compose(stack(a, b), stack(c, d));
                      if (ac && bd) {
                        REQUIRE(lhs.has_value());
                        CHECK(*lhs == stack(*ac, *bd));
                      } else {
                        CHECK_FALSE(lhs.has_value());
                      }
                    }
            }
        }
}

TEST_CASE("generators") {
  CHECK(b_right(0, 1) == Diagram::make(0, 2, {{0, 1}}));
  for (int n = 0; n <= 7; ++n) {
    EnumFilter f;
    f.width_eq = n;
    f.no_left_returns = true;
    const auto expect = enumerate(n, n + 2, f);
    std::vector<Diagram> got;
    for (int i = 1; i <= n + 1; ++i) {
      const Diagram b = b_right(n, i);
      CHECK(b.degree() == 1);
      CHECK(b.width() == n);
      REQUIRE(b.right_return_points().size() == 1);
      CHECK(b.right_return_points()[0] == std::pair{i - 1, i});
      got.push_back(b);
    }
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
  CHECK(code_of([] { b_right(2, 4); }) == Errc::index_out_of_range);
  CHECK(code_of([] { b_right(2, 0); }) == Errc::index_out_of_range);
}

TEST_CASE("laws on small signatures") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (int s = 0; s <= 3; ++s)
        for (int t = 0; t <= 3; ++t) {
          if ((n + m) % 2 || (m + s) % 2 || (s + t) % 2) continue;
          for (const auto& x : all_diagrams(n, m))
            for (const auto& y : all_diagrams(m, s)) {
              const auto xy = compose(x, y);
              const auto rr = compose(reflect(y), reflect(x));
              REQUIRE(xy.has_value() == rr.has_value());
              if (xy) {
                CHECK(reflect(*xy) == *rr);
                CHECK(xy->degree() == x.degree() + y.degree());
                CHECK(xy->width() <= std::min(x.width(), y.width()));
              }
              for (const auto& z : all_diagrams(s, t)) {
                const auto yz = compose(y, z);
                const auto l = xy ? compose(*xy, z) : std::nullopt;
                const auto r = yz ? compose(x, *yz) : std::nullopt;
                CHECK(l == r);
              }
            }
        }
}

TEST_CASE("return orders") {
  // Right returns of a diagram in 0B6 with three unnested cups.
  const Diagram d = Diagram::make(0, 6, {{0, 1}, {2, 3}, {4, 5}});
  // Right point j sits at position 5 - j, so the return on points (0,1) is the top one.
  CHECK(right_return_order_from_top(d, 0) == 1);
  CHECK(right_return_order_from_top(d, 4) == 3);
  CHECK(right_return_order_from_bottom(d, 0) == 3);
  CHECK(right_return_order_from_bottom(d, 4) == 1);
}

TEST_CASE("json round trip") {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; n + m <= 8; ++m)
      for (const auto& d : all_diagrams(n, m)) {
        const Json j = to_json(d);
        CHECK(diagram_from_json(j) == d);
        CHECK(diagram_from_json(Json::parse(j.dump())) == d);
      }
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"n":2,"m":2,"arcs":[[0,2],[1,3]]})")), Error);
}
