#include "chebtl/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace chebtl {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_perfect_matching: return "NotPerfectMatching";
    case Errc::crossing: return "Crossing";
    case Errc::odd_total: return "OddTotal";
    case Errc::signature_mismatch: return "SignatureMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_a_complex: return "NotAComplex";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool same_side(int n, int p, int q) { return (p < n) == (q < n); }

}  // namespace

Diagram::Diagram(int n, int m, std::vector<std::uint16_t> partner, int width)
    : n_(n), m_(m), width_(width), partner_(std::move(partner)) {}

Diagram Diagram::from_partners(int n, int m, std::span<const int> partner) {
  if (n < 0 || m < 0) throw Error(Errc::invalid_argument, "negative boundary count");
  const int total = n + m;
  if (total % 2 != 0)
    throw Error(Errc::odd_total, "n + m = " + std::to_string(total) + " is odd");
  if (static_cast<int>(partner.size()) != total)
    throw Error(Errc::not_perfect_matching, "partner table has wrong length");
  std::vector<std::uint16_t> table(static_cast<std::size_t>(total));
  int width = 0;
  for (int p = 0; p < total; ++p) {
    const int q = partner[static_cast<std::size_t>(p)];
    if (q < 0 || q >= total || q == p || partner[static_cast<std::size_t>(q)] != p)
      throw Error(Errc::not_perfect_matching,
                  "position " + std::to_string(p) + " is not matched exactly once");
    table[static_cast<std::size_t>(p)] = static_cast<std::uint16_t>(q);
    if (p < q && !same_side(n, p, q)) ++width;
  }
  // Stack discipline on the cyclic order is equivalent to noncrossing.
  std::vector<int> open;
  open.reserve(static_cast<std::size_t>(total));
  for (int p = 0; p < total; ++p) {
    const int q = table[static_cast<std::size_t>(p)];
    if (q > p) {
      open.push_back(p);
    } else {
      if (open.empty() || open.back() != q)
        throw Error(Errc::crossing, "arc (" + std::to_string(q) + "," + std::to_string(p) +
                                        ") crosses another arc");
      open.pop_back();
    }
  }
  return Diagram(n, m, std::move(table), width);
}

Diagram Diagram::make(int n, int m, std::span<const Arc> arcs) {
  if (n < 0 || m < 0) throw Error(Errc::invalid_argument, "negative boundary count");
  const int total = n + m;
  if (total % 2 != 0)
    throw Error(Errc::odd_total, "n + m = " + std::to_string(total) + " is odd");
  std::vector<int> partner(static_cast<std::size_t>(total), -1);
  for (auto [p, q] : arcs) {
    if (p < 0 || q < 0 || p >= total || q >= total || p == q)
      throw Error(Errc::not_perfect_matching,
                  "arc (" + std::to_string(p) + "," + std::to_string(q) + ") is out of range");
    auto& a = partner[static_cast<std::size_t>(p)];
    auto& b = partner[static_cast<std::size_t>(q)];
    if (a != -1 || b != -1)
      throw Error(Errc::not_perfect_matching, "position used twice");
    a = q;
    b = p;
  }
  if (std::find(partner.begin(), partner.end(), -1) != partner.end())
    throw Error(Errc::not_perfect_matching, "some position is unmatched");
  return from_partners(n, m, partner);
}

Diagram Diagram::from_endpoints(int n, int m,
                                std::span<const std::pair<Endpoint, Endpoint>> arcs) {
  std::vector<Arc> positions;
  positions.reserve(arcs.size());
  auto pos = [&](Endpoint e) {
    const int bound = e.side == Side::left ? n : m;
    if (e.index < 0 || e.index >= bound)
      throw Error(Errc::index_out_of_range, "endpoint index out of range");
    return e.side == Side::left ? e.index : n + (m - 1 - e.index);
  };
  for (const auto& [a, b] : arcs) positions.emplace_back(pos(a), pos(b));
  return make(n, m, positions);
}

Diagram Diagram::identity(int n) {
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    const int r = n + (n - 1 - i);
    partner[static_cast<std::size_t>(i)] = r;
    partner[static_cast<std::size_t>(r)] = i;
  }
  return from_partners(n, n, partner);
}

Endpoint Diagram::endpoint(int pos) const {
  if (pos < n_) return {Side::left, pos};
  return {Side::right, n_ + m_ - 1 - pos};
}

int Diagram::position(Endpoint e) const {
  return e.side == Side::left ? e.index : n_ + (m_ - 1 - e.index);
}

ArcKind Diagram::kind_at(int pos) const {
  const int q = partner(pos);
  if (!same_side(n_, pos, q)) return ArcKind::through;
  return pos < n_ ? ArcKind::left_return : ArcKind::right_return;
}

std::vector<Arc> Diagram::arcs() const {
  std::vector<Arc> out;
  out.reserve(partner_.size() / 2);
  for (int p = 0; p < size(); ++p)
    if (partner(p) > p) out.emplace_back(p, partner(p));
  return out;
}

std::vector<std::pair<int, int>> Diagram::right_return_points() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < m_; ++j) {
    const int p = n_ + m_ - 1 - j;
    const int q = partner(p);
    if (q >= n_ && q < p) out.emplace_back(j, n_ + m_ - 1 - q);
  }
  return out;
}

std::vector<std::pair<int, int>> Diagram::left_return_points() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    const int q = partner(i);
    if (q < n_ && q > i) out.emplace_back(i, q);
  }
  return out;
}

bool Diagram::has_nested_right_returns() const {
  for (int p = n_; p < size(); ++p) {
    const int q = partner(p);
    if (q > p + 1 && q >= n_) return true;  // encloses at least one more right arc
  }
  return false;
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << n_ << "B" << m_ << "{";
  bool first = true;
  for (auto [p, q] : arcs()) {
    if (!first) os << ",";
    first = false;
    os << "(" << p << "," << q << ")";
  }
  os << "}";
  return os.str();
}

std::strong_ordering Diagram::operator<=>(const Diagram& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = m_ <=> other.m_; c != 0) return c;
  // Walk the sorted arc lists of both diagrams in step.
  int a = 0;
  int b = 0;
  const int total = size();
  while (true) {
    while (a < total && partner(a) < a) ++a;
    while (b < total && other.partner(b) < b) ++b;
    // Equal signatures give equally long arc lists.
    if (a >= total || b >= total) return std::strong_ordering::equal;
    if (auto c = a <=> b; c != 0) return c;
    if (auto c = partner(a) <=> other.partner(b); c != 0) return c;
    ++a;
    ++b;
  }
}

std::size_t Diagram::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(n_));
  mix(static_cast<std::size_t>(m_));
  for (auto p : partner_) mix(p);
  return h;
}

std::optional<Diagram> compose(const Diagram& x, const Diagram& y) {
  if (x.m_right() != y.n_left())
    throw Error(Errc::signature_mismatch, "cannot compose " + x.to_string() + " with " +
                                              y.to_string());
  const int n = x.n_left();
  const int m = x.m_right();
  const int s = y.m_right();
  const int xs = n + m;
  const int ys = m + s;

  // Glue index j is x's right point j == y's left point j.
  auto x_glue = [&](int pos) { return xs - 1 - pos; };
  auto x_from_glue = [&](int j) { return xs - 1 - j; };

  std::vector<int> result(static_cast<std::size_t>(n + s), -1);
  std::vector<char> glue_seen(static_cast<std::size_t>(m), 0);

  auto result_pos = [&](bool in_x, int pos) { return in_x ? pos : pos - m + n; };

  auto trace = [&](bool in_x, int start) -> bool {
    bool cur_x = in_x;
    int p = start;
    int returns = 0;
    while (true) {
      const int q = cur_x ? x.partner(p) : y.partner(p);
      const bool ret = cur_x ? same_side(n, p, q) : same_side(m, p, q);
      if (ret && ++returns >= 2) return false;
      const bool external = cur_x ? (q < n) : (q >= m);
      if (external) {
        const int a = result_pos(in_x, start);
        const int b = result_pos(cur_x, q);
        result[static_cast<std::size_t>(a)] = b;
        result[static_cast<std::size_t>(b)] = a;
        return true;
      }
      const int j = cur_x ? x_glue(q) : q;
      glue_seen[static_cast<std::size_t>(j)] = 1;
      if (cur_x) {
        p = j;
      } else {
        p = x_from_glue(j);
      }
      cur_x = !cur_x;
    }
  };

  for (int p = 0; p < n; ++p)
    if (result[static_cast<std::size_t>(p)] == -1 && !trace(true, p)) return std::nullopt;
  for (int p = m; p < ys; ++p)
    if (result[static_cast<std::size_t>(p - m + n)] == -1 && !trace(false, p))
      return std::nullopt;
  // Anything left unvisited in the middle closes up into a circle.
  for (char seen : glue_seen)
    if (!seen) return std::nullopt;
  return Diagram::from_partners(n, s, result);
}

Diagram reflect(const Diagram& d) {
  const int n = d.n_left();
  const int m = d.m_right();
  std::vector<std::pair<Endpoint, Endpoint>> arcs;
  auto flip = [](Endpoint e) {
    return Endpoint{e.side == Side::left ? Side::right : Side::left, e.index};
  };
  for (auto [p, q] : d.arcs()) arcs.emplace_back(flip(d.endpoint(p)), flip(d.endpoint(q)));
  return Diagram::from_endpoints(m, n, arcs);
}

Diagram stack(const Diagram& d1, const Diagram& d2) {
  const int a = d1.n_left();
  const int b = d1.m_right();
  const int n = a + d2.n_left();
  const int m = b + d2.m_right();
  std::vector<std::pair<Endpoint, Endpoint>> arcs;
  for (auto [p, q] : d1.arcs()) arcs.emplace_back(d1.endpoint(p), d1.endpoint(q));
  auto shift = [&](Endpoint e) {
    return Endpoint{e.side, e.index + (e.side == Side::left ? a : b)};
  };
  for (auto [p, q] : d2.arcs()) arcs.emplace_back(shift(d2.endpoint(p)), shift(d2.endpoint(q)));
  return Diagram::from_endpoints(n, m, arcs);
}

Diagram add_through_top(const Diagram& d) { return stack(Diagram::identity(1), d); }

Diagram b_right(int n, int i) {
  if (n < 0 || i < 1 || i > n + 1)
    throw Error(Errc::index_out_of_range,
                "b_right(" + std::to_string(n) + "," + std::to_string(i) + ")");
  std::vector<std::pair<Endpoint, Endpoint>> arcs;
  arcs.push_back({{Side::right, i - 1}, {Side::right, i}});
  for (int l = 0; l < n; ++l)
    arcs.push_back({{Side::left, l}, {Side::right, l < i - 1 ? l : l + 2}});
  return Diagram::from_endpoints(n, n + 2, arcs);
}

Diagram b_left(int n, int i) { return reflect(b_right(n, i)); }

bool EnumFilter::accepts(const Diagram& d) const {
  if (width_eq && d.width() != *width_eq) return false;
  if (width_le && d.width() > *width_le) return false;
  if (no_left_returns && d.left_returns() != 0) return false;
  if (no_right_returns && d.right_returns() != 0) return false;
  if (unnested_right_returns && d.has_nested_right_returns()) return false;
  return true;
}

namespace {

// Depth-first generation of noncrossing matchings, one position at a time:
// each position either opens an arc or closes the innermost open one. The
// return-type filters are applied when an arc closes, which keeps the search
// free of large dead subtrees.
class Generator {
 public:
  Generator(int n, int m, const EnumFilter& f, const std::function<void(const Diagram&)>& v)
      : n_(n), total_(n + m), filter_(f), visit_(v),
        partner_(static_cast<std::size_t>(n + m), -1) {
    open_.reserve(static_cast<std::size_t>(total_));
  }

  void run() {
    if (total_ % 2 != 0) return;
    step(0);
  }

 private:
  void step(int p) {
    const int remaining = total_ - p;
    if (static_cast<int>(open_.size()) > remaining) return;
    if (p == total_) {
      Diagram d = Diagram::from_partners(n_, total_ - n_, partner_);
      if (filter_.accepts(d)) visit_(d);
      return;
    }
    // With no right returns exactly m arcs must be open when the right side starts.
    if (filter_.no_right_returns && p <= n_) {
      const int open = static_cast<int>(open_.size());
      const int m = total_ - n_;
      if (open > m + (n_ - p) || open + (n_ - p) < m) return;
    }
    const bool at_right = p >= n_;
    // Open.
    if (!(filter_.no_right_returns && at_right)) {
      open_.push_back(p);
      step(p + 1);
      open_.pop_back();
    }
    // Close.
    if (!open_.empty()) {
      const int q = open_.back();
      const bool left_ret = p < n_;  // then q < n_ as well
      const bool right_ret = q >= n_;
      bool ok = true;
      if (left_ret && filter_.no_left_returns) ok = false;
      if (right_ret && filter_.no_right_returns) ok = false;
      if (right_ret && filter_.unnested_right_returns && p != q + 1) ok = false;
      if (ok) {
        open_.pop_back();
        partner_[static_cast<std::size_t>(p)] = q;
        partner_[static_cast<std::size_t>(q)] = p;
        step(p + 1);
        partner_[static_cast<std::size_t>(p)] = -1;
        partner_[static_cast<std::size_t>(q)] = -1;
        open_.push_back(q);
      }
    }
  }

  int n_;
  int total_;
  const EnumFilter& filter_;
  const std::function<void(const Diagram&)>& visit_;
  std::vector<int> partner_;
  std::vector<int> open_;
};

}  // namespace

void for_each_diagram(int n, int m, const EnumFilter& filter,
                      const std::function<void(const Diagram&)>& visit) {
  if (n < 0 || m < 0) return;
  Generator(n, m, filter, visit).run();
}

std::vector<Diagram> enumerate(int n, int m, const EnumFilter& filter) {
  std::vector<Diagram> out;
  for_each_diagram(n, m, filter, [&out](const Diagram& d) { out.push_back(d); });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_diagrams(int n, int m, const EnumFilter& filter) {
  std::size_t count = 0;
  for_each_diagram(n, m, filter, [&count](const Diagram&) { ++count; });
  return count;
}

std::vector<Diagram> x_tilde(int n, int m) {
  EnumFilter f;
  f.no_left_returns = true;
  return enumerate(n, m, f);
}

std::vector<Diagram> y_tilde(int n, int m) {
  EnumFilter f;
  f.no_left_returns = true;
  f.unnested_right_returns = true;
  return enumerate(n, m, f);
}

namespace {

int return_order(const Diagram& d, int top_point, bool from_top) {
  const auto rets = d.right_return_points();
  for (std::size_t k = 0; k < rets.size(); ++k) {
    if (rets[k].first == top_point)
      return from_top ? static_cast<int>(k) + 1 : static_cast<int>(rets.size() - k);
  }
  throw Error(Errc::invalid_argument, "no right return starts at right point " +
                                          std::to_string(top_point) + " of " + d.to_string());
}

}  // namespace

int right_return_order_from_top(const Diagram& d, int top_point) {
  return return_order(d, top_point, true);
}

int right_return_order_from_bottom(const Diagram& d, int top_point) {
  return return_order(d, top_point, false);
}

}  // namespace chebtl
