#pragma once

// Crossingless matching diagrams between n left and m right boundary points.
//
// Boundary positions run around the rectangle: left point i (top to bottom)
// sits at position i, right point j (top to bottom) at n + (m - 1 - j).
// With that numbering planarity is exactly "noncrossing on a convex cycle".
// Serialized diagrams always use this convention.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chebtl/error.hpp"

namespace chebtl {

using Arc = std::pair<int, int>;

enum class Side : std::uint8_t { left, right };

struct Endpoint {
  Side side;
  int index;  // 0-based, top to bottom

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

enum class ArcKind : std::uint8_t { through, left_return, right_return };

class Diagram {
 public:
  // Validated construction from a list of position pairs.
  static Diagram make(int n, int m, std::span<const Arc> arcs);
  static Diagram make(int n, int m, std::initializer_list<Arc> arcs) {
    return make(n, m, std::span<const Arc>(arcs.begin(), arcs.size()));
  }
  // Construction from endpoint pairs; also validated.
  static Diagram from_endpoints(int n, int m,
                                std::span<const std::pair<Endpoint, Endpoint>> arcs);
  // From a full partner table (partner[p] = q); validated.
  static Diagram from_partners(int n, int m, std::span<const int> partner);
  // 1_n: n order-preserving through arcs.
  static Diagram identity(int n);

  int n_left() const noexcept { return n_; }
  int m_right() const noexcept { return m_; }
  int size() const noexcept { return n_ + m_; }

  int partner(int pos) const { return partner_[static_cast<std::size_t>(pos)]; }
  Endpoint endpoint(int pos) const;
  int position(Endpoint e) const;
  ArcKind kind_at(int pos) const;

  // Arcs as (p, q) with p < q, sorted by p.
  std::vector<Arc> arcs() const;

  int width() const noexcept { return width_; }
  int left_returns() const noexcept { return (n_ - width_) / 2; }
  int right_returns() const noexcept { return (m_ - width_) / 2; }
  // Grading: total number of returns.
  int degree() const noexcept { return left_returns() + right_returns(); }
  bool is_identity() const noexcept { return n_ == m_ && width_ == n_; }

  // Right returns as (top, bottom) right-point index pairs, ordered top to bottom.
  std::vector<std::pair<int, int>> right_return_points() const;
  // Left returns as (top, bottom) left-point index pairs, ordered top to bottom.
  std::vector<std::pair<int, int>> left_return_points() const;
  bool has_nested_right_returns() const;

  std::string to_string() const;

  // Canonical order: signature first, then lexicographic on sorted arc lists.
  std::strong_ordering operator<=>(const Diagram& other) const;
  bool operator==(const Diagram& other) const noexcept {
    return n_ == other.n_ && m_ == other.m_ && partner_ == other.partner_;
  }

  std::size_t hash() const noexcept;

 private:
  Diagram(int n, int m, std::vector<std::uint16_t> partner, int width);

  int n_ = 0;
  int m_ = 0;
  int width_ = 0;
  std::vector<std::uint16_t> partner_;
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const noexcept { return d.hash(); }
};

// Product in the frozen algebra: glue x's right side to y's left side. The
// result is Zero (nullopt) when a closed loop appears or when a component
// carries two or more returns. Throws signature_mismatch when x.m != y.n.
std::optional<Diagram> compose(const Diagram& x, const Diagram& y);

// Mirror about a vertical axis; nB_m -> mB_n.
Diagram reflect(const Diagram& d);

// d1 placed above d2.
Diagram stack(const Diagram& d1, const Diagram& d2);

// The inclusion iota: nB_m -> (n+1)B_(m+1), a through strand added on top.
Diagram add_through_top(const Diagram& d);

// b^i_{n+2} in nB_{n+2}: one right return on right points i-1, i; 1 <= i <= n+1.
Diagram b_right(int n, int i);
// ^ib_n in (n+2)B_n, the reflection of b_right(n, i).
Diagram b_left(int n, int i);

struct EnumFilter {
  std::optional<int> width_eq;
  std::optional<int> width_le;
  bool no_left_returns = false;
  bool no_right_returns = false;
  bool unnested_right_returns = false;

  bool accepts(const Diagram& d) const;
};

// All diagrams of nB_m passing the filter, in canonical order.
std::vector<Diagram> enumerate(int n, int m, const EnumFilter& filter = {});

// Visit every diagram of nB_m passing the filter (unspecified order).
void for_each_diagram(int n, int m, const EnumFilter& filter,
                      const std::function<void(const Diagram&)>& visit);

std::size_t count_diagrams(int n, int m, const EnumFilter& filter = {});

// The sets X~_{n,m} (no left returns) and Y~_{n,m} (no left returns, unnested
// right returns), canonical order.
std::vector<Diagram> x_tilde(int n, int m);
std::vector<Diagram> y_tilde(int n, int m);

// 1-based order of the right return on right points (top, top+1) among all
// right returns of d, counted from the top (or from the bottom).
int right_return_order_from_top(const Diagram& d, int top_point);
int right_return_order_from_bottom(const Diagram& d, int top_point);

}  // namespace chebtl

template <>
struct std::hash<chebtl::Diagram> {
  std::size_t operator()(const chebtl::Diagram& d) const noexcept { return d.hash(); }
};
