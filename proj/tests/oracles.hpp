#pragma once

// Brute-force references for the unit tests. Nothing here calls into the
// library's enumeration, composition or elimination code.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

// Perfect matching on positions 0..N-1 as a partner array.
using Matching = std::vector<int>;

inline void all_matchings(std::vector<int>& p, std::vector<Matching>& out) {
  int first = -1;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[static_cast<std::size_t>(i)] < 0) { first = i; break; }
  if (first < 0) { out.push_back(p); return; }
  for (int j = first + 1; j < static_cast<int>(p.size()); ++j) {
    if (p[static_cast<std::size_t>(j)] >= 0) continue;
    p[static_cast<std::size_t>(first)] = j;
    p[static_cast<std::size_t>(j)] = first;
    all_matchings(p, out);
    p[static_cast<std::size_t>(first)] = p[static_cast<std::size_t>(j)] = -1;
  }
}

inline bool noncrossing(const Matching& m) {
  const int n = static_cast<int>(m.size());
  for (int a = 0; a < n; ++a) {
    const int b = m[static_cast<std::size_t>(a)];
    if (b < a) continue;
    for (int c = a + 1; c < b; ++c) {
      const int d = m[static_cast<std::size_t>(c)];
      if (d > b || d < a) return false;
    }
  }
  return true;
}

// All noncrossing perfect matchings of N points, by filtering every matching.
inline std::vector<Matching> crossingless(int N) {
  std::vector<Matching> all, out;
  if (N % 2 != 0) return out;
  std::vector<int> p(static_cast<std::size_t>(N), -1);
  all_matchings(p, all);
  for (auto& m : all)
    if (noncrossing(m)) out.push_back(std::move(m));
  return out;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Catalan numbers by the convolution recurrence.
inline std::uint64_t catalan(int k) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j < i; ++j)
      c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - 1 - j)];
  return c[static_cast<std::size_t>(k)];
}

// Boundary position of left point i / right point j in nBm.
inline int lpos(int, int i) { return i; }
inline int rpos(int n, int m, int j) { return n + (m - 1 - j); }

// Composition by explicit graph walk. Vertices: x positions 0..n+m-1 and y
// positions offset by n+m. Returns nullopt for Zero, else the partner array
// of the result in nBs.
inline std::optional<Matching> compose(const Matching& x, int n, int m, const Matching& y, int s) {
  const int off = n + m;
  const int V = off + m + s;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(V));
  auto edge = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  for (int p = 0; p < off; ++p)
    if (x[static_cast<std::size_t>(p)] > p) edge(p, x[static_cast<std::size_t>(p)]);
  for (int p = 0; p < m + s; ++p)
    if (y[static_cast<std::size_t>(p)] > p) edge(off + p, off + y[static_cast<std::size_t>(p)]);
  for (int j = 0; j < m; ++j) edge(rpos(n, m, j), off + lpos(m, j));

  auto is_return = [&](int a, int b) {
    auto side = [&](int v) {
      if (v < off) return v < n ? 0 : 1;
      return (v - off) < m ? 0 : 1;
    };
    const bool in_x = a < off && b < off;
    const bool in_y = a >= off && b >= off;
    return (in_x || in_y) && side(a) == side(b);
  };

  std::vector<int> comp(static_cast<std::size_t>(V), -1);
  int ncomp = 0;
  for (int v = 0; v < V; ++v) {
    if (comp[static_cast<std::size_t>(v)] >= 0) continue;
    std::vector<int> stack{v};
    comp[static_cast<std::size_t>(v)] = ncomp;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(u)])
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }

  auto external = [&](int v) { return v < n || v >= off + m; };
  std::vector<int> ends(static_cast<std::size_t>(ncomp), 0), returns(static_cast<std::size_t>(ncomp), 0);
  for (int v = 0; v < V; ++v) {
    if (external(v)) ++ends[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    for (int w : adj[static_cast<std::size_t>(v)])
      if (w > v && is_return(v, w)) ++returns[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
  }
  for (int c = 0; c < ncomp; ++c) {
    if (ends[static_cast<std::size_t>(c)] == 0) return std::nullopt;  // closed loop
    if (returns[static_cast<std::size_t>(c)] >= 2) return std::nullopt;
  }

  // y's right side starts at off + m; the result's right side starts at n.
  auto result_pos = [&](int v) { return v < n ? v : n + (v - off - m); };
  Matching out(static_cast<std::size_t>(n + s), -1);
  std::map<int, int> first_end;
  for (int v = 0; v < V; ++v) {
    if (!external(v)) continue;
    const int c = comp[static_cast<std::size_t>(v)];
    auto it = first_end.find(c);
    if (it == first_end.end()) first_end[c] = v;
    else {
      out[static_cast<std::size_t>(result_pos(it->second))] = result_pos(v);
      out[static_cast<std::size_t>(result_pos(v))] = result_pos(it->second);
    }
  }
  return out;
}

// Rank over F_p, p = 2^31 - 1, by Gauss-Jordan. It can only undercount the
// rational rank, and only when p divides every nonzero maximal minor.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a) {
  constexpr std::int64_t p = 2147483647;
  auto norm = [](std::int64_t v) { v %= p; return v < 0 ? v + p : v; };
  auto inv = [&](std::int64_t v) {
    std::int64_t r = 1, b = v, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
      b = static_cast<std::int64_t>((__int128)b * b % p);
      e >>= 1;
    }
    return r;
  };
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  for (auto& row : a)
    for (auto& v : row) v = norm(v);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t iv = inv(a[rank][c]);
    for (auto& v : a[rank]) v = static_cast<std::int64_t>((__int128)v * iv % p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        a[r][k] = norm(a[r][k] - static_cast<std::int64_t>((__int128)f * a[rank][k] % p));
    }
    ++rank;
  }
  return rank;
}

// U_n by the explicit sum (-1)^k binom(n-k, k) x^{n-2k}; index = power.
inline std::vector<std::int64_t> chebyshev_explicit(int n) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; 2 * k <= n; ++k)
    c[static_cast<std::size_t>(n - 2 * k)] = (k % 2 ? -1 : 1) * static_cast<std::int64_t>(binom(n - k, k));
  return c;
}

}  // namespace oracle
