#include "chebtl/homology.hpp"

#include <algorithm>
#include <unordered_map>

namespace chebtl {

namespace {

int module_index(const Summand& s) { return s.module.n; }

// Sum over paths of d_{k-1} d_k, keyed by (source in C_k, target in C_{k-2}).
bool composite_vanishes(const std::vector<DiffEntry>& upper, const std::vector<DiffEntry>& lower,
                        std::string* witness) {
  std::unordered_map<std::size_t, std::vector<const DiffEntry*>> lower_by_source;
  for (const auto& e : lower) lower_by_source[e.from].push_back(&e);
  std::map<std::pair<std::size_t, std::size_t>, AlgebraElement> acc;
  for (const auto& e : upper) {
    auto it = lower_by_source.find(e.to);
    if (it == lower_by_source.end()) continue;
    for (const DiffEntry* f : it->second) {
      AlgebraElement p = multiply(e.map, f->map);
      auto key = std::make_pair(e.from, f->to);
      auto slot = acc.find(key);
      if (slot == acc.end()) acc.emplace(key, std::move(p));
      else slot->second += p;
    }
  }
  for (const auto& [key, v] : acc) {
    if (!v.is_zero()) {
      if (witness)
        *witness = "summand " + std::to_string(key.first) + " -> " + std::to_string(key.second) +
                   ": " + v.to_string();
      return false;
    }
  }
  return true;
}

}  // namespace

ComplexSpec::ComplexSpec(std::vector<std::vector<Summand>> terms,
                         std::vector<std::vector<DiffEntry>> diffs,
                         std::optional<ModuleId> augmentation, std::optional<int> truncated_at)
    : terms_(std::move(terms)),
      diffs_(std::move(diffs)),
      augmentation_(augmentation),
      truncated_at_(truncated_at) {
  if (terms_.empty()) throw Error(Errc::invalid_argument, "complex without terms");
  if (diffs_.size() != terms_.size() || !diffs_[0].empty())
    throw Error(Errc::invalid_argument, "need one differential slot per term, d_0 empty");
  for (std::size_t k = 1; k < terms_.size(); ++k) {
    for (const auto& e : diffs_[k]) {
      if (e.from >= terms_[k].size() || e.to >= terms_[k - 1].size())
        throw Error(Errc::not_a_complex, "differential component out of range");
      const auto& src = terms_[k][e.from];
      const auto& dst = terms_[k - 1][e.to];
      if (e.map.n_left() != module_index(src) || e.map.m_right() != module_index(dst))
        throw Error(Errc::signature_mismatch, "component of d_" + std::to_string(k) +
                                                  " does not match its summands");
    }
  }
  for (std::size_t k = 2; k < terms_.size(); ++k) {
    std::string why;
    if (!composite_vanishes(diffs_[k], diffs_[k - 1], &why))
      throw Error(Errc::not_a_complex,
                  "d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + " != 0 at " + why);
  }
  if (augmentation_) {
    if (terms_[0].size() != 1 || terms_[0][0].module.n != augmentation_->n)
      throw Error(Errc::invalid_argument, "augmentation needs a single degree-0 summand");
  }
}

std::size_t ComplexSpec::multiplicity(int k, const ModuleId& module) const {
  if (k < 0 || k > length()) return 0;
  return static_cast<std::size_t>(std::count_if(
      term(k).begin(), term(k).end(), [&](const Summand& s) { return s.module == module; }));
}

namespace {

std::size_t index_of(const std::vector<Diagram>& sorted, const Diagram& d) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), d);
  if (it == sorted.end() || !(*it == d))
    throw Error(Errc::invalid_argument, d.to_string() + " missing from tag set");
  return static_cast<std::size_t>(it - sorted.begin());
}

bool contains(const std::vector<Diagram>& sorted, const Diagram& d) {
  return std::binary_search(sorted.begin(), sorted.end(), d);
}

// Components of d_k in the resolution of M_top: Y~_{a,top} -> Y~_{a+2,top}
// with a = top - 2k. Entries are (alpha, beta, signed b^i).
std::vector<DiffEntry> standard_components(int top, int k, const std::vector<Diagram>& src,
                                           const std::vector<Diagram>& dst) {
  const int a = top - 2 * k;
  std::vector<DiffEntry> out;
  for (std::size_t b = 0; b < dst.size(); ++b) {
    const Diagram& beta = dst[b];
    for (int i = 1; i <= a + 1; ++i) {
      const Diagram bi = b_right(a, i);
      auto alpha = compose(bi, beta);
      if (!alpha || !contains(src, *alpha)) continue;
      // The new return runs from beta's ends of its left points i-1 and i.
      const int top_point = beta.endpoint(beta.partner(i - 1)).index;
      const int order = right_return_order_from_top(*alpha, top_point);
      const Coeff sign = (order % 2 == 1) ? 1 : -1;
      out.push_back(DiffEntry{index_of(src, *alpha), b, AlgebraElement(bi, sign)});
    }
  }
  return out;
}

// Components of d_k in the resolution of L_n by standard modules:
// Y~_{n,n+2k} -> Y~_{n,n+2k-2}, entries (alpha, beta, signed ^ib, i).
struct SimpleStdComponent {
  std::size_t alpha;
  std::size_t beta;
  int i;
  Coeff sign;
};

std::vector<SimpleStdComponent> simple_std_components(int n, int k, const std::vector<Diagram>& src,
                                                      const std::vector<Diagram>& dst) {
  const int mid = n + 2 * k - 2;
  std::vector<SimpleStdComponent> out;
  for (std::size_t b = 0; b < dst.size(); ++b) {
    for (int i = 1; i <= mid + 1; ++i) {
      auto alpha = compose(dst[b], b_right(mid, i));
      if (!alpha || !contains(src, *alpha)) continue;
      const int order = right_return_order_from_bottom(*alpha, i - 1);
      out.push_back({index_of(src, *alpha), b, i, (order % 2 == 1) ? Coeff{1} : Coeff{-1}});
    }
  }
  return out;
}

// D has exactly one left return, on adjacent left points (p, p+1). Returns
// (i, rest) with D = b_left(D.n - 2, i) * rest.
std::pair<int, Diagram> split_left_return(const Diagram& d) {
  const auto lefts = d.left_return_points();
  if (lefts.size() != 1 || lefts[0].second != lefts[0].first + 1)
    throw Error(Errc::invalid_argument, "expected one innermost left return in " + d.to_string());
  const int p = lefts[0].first;
  std::vector<std::pair<Endpoint, Endpoint>> arcs;
  auto shift = [p](Endpoint e) {
    if (e.side == Side::left && e.index > p) e.index -= 2;
    return e;
  };
  for (auto [u, v] : d.arcs()) {
    if (u == p || v == p) continue;
    arcs.emplace_back(shift(d.endpoint(u)), shift(d.endpoint(v)));
  }
  Diagram rest = Diagram::from_endpoints(d.n_left() - 2, d.m_right(), arcs);
  const int i = p + 1;
  auto check = compose(b_left(d.n_left() - 2, i), rest);
  if (!check || !(*check == d))
    throw Error(Errc::invalid_argument, "left-return factorization failed for " + d.to_string());
  return {i, std::move(rest)};
}

}  // namespace

ComplexSpec standard_resolution(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative n");
  const int len = n / 2;
  std::vector<std::vector<Diagram>> tags(static_cast<std::size_t>(len + 1));
  std::vector<std::vector<Summand>> terms(static_cast<std::size_t>(len + 1));
  for (int k = 0; k <= len; ++k) {
    auto& t = tags[static_cast<std::size_t>(k)];
    t = y_tilde(n - 2 * k, n);
    for (const auto& alpha : t)
      terms[static_cast<std::size_t>(k)].push_back({ModuleId::projective(n - 2 * k), {alpha}});
  }
  std::vector<std::vector<DiffEntry>> diffs(static_cast<std::size_t>(len + 1));
  for (int k = 1; k <= len; ++k)
    diffs[static_cast<std::size_t>(k)] =
        standard_components(n, k, tags[static_cast<std::size_t>(k)], tags[static_cast<std::size_t>(k - 1)]);
  return ComplexSpec(std::move(terms), std::move(diffs), ModuleId::standard(n), std::nullopt);
}

ComplexSpec simple_by_standard_resolution(int n, int k_max) {
  if (n < 0 || k_max < 0) throw Error(Errc::invalid_argument, "negative argument");
  std::vector<std::vector<Diagram>> tags(static_cast<std::size_t>(k_max + 1));
  std::vector<std::vector<Summand>> terms(static_cast<std::size_t>(k_max + 1));
  for (int k = 0; k <= k_max; ++k) {
    auto& t = tags[static_cast<std::size_t>(k)];
    t = y_tilde(n, n + 2 * k);
    for (const auto& alpha : t)
      terms[static_cast<std::size_t>(k)].push_back({ModuleId::standard(n + 2 * k), {alpha}});
  }
  std::vector<std::vector<DiffEntry>> diffs(static_cast<std::size_t>(k_max + 1));
  for (int k = 1; k <= k_max; ++k) {
    const int mid = n + 2 * k - 2;
    for (const auto& c : simple_std_components(n, k, tags[static_cast<std::size_t>(k)],
                                               tags[static_cast<std::size_t>(k - 1)]))
      diffs[static_cast<std::size_t>(k)].push_back(
          DiffEntry{c.alpha, c.beta, AlgebraElement(b_left(mid, c.i), c.sign)});
  }
  return ComplexSpec(std::move(terms), std::move(diffs), ModuleId::simple(n), k_max);
}

SimpleBicomplex simple_bicomplex(int n, int k_max) {
  if (n < 0 || k_max < 0) throw Error(Errc::invalid_argument, "negative argument");
  SimpleBicomplex b;
  b.n = n;
  b.k_max = k_max;

  // Tag sets per cell; outer = Y~_{n,N}, inner = Y~_{a,N}.
  std::map<std::pair<int, int>, std::pair<std::vector<Diagram>, std::vector<Diagram>>> tags;
  for (int k1 = 0; k1 <= k_max; ++k1) {
    const int top = n + 2 * k1;
    auto outer = y_tilde(n, top);
    for (int k2 = 0; k1 + k2 <= k_max && 2 * k2 <= top; ++k2) {
      const int a = top - 2 * k2;
      auto inner = y_tilde(a, top);
      auto& cell = b.cells[{k1, k2}];
      for (const auto& o : outer)
        for (const auto& in : inner) cell.push_back({ModuleId::projective(a), {o, in}});
      tags[{k1, k2}] = {outer, std::move(inner)};
    }
  }

  for (const auto& [key, tg] : tags) {
    const auto [k1, k2] = key;
    const int top = n + 2 * k1;
    const int a = top - 2 * k2;
    const auto& [outer, inner] = tg;
    const std::size_t inner_size = inner.size();

    if (k2 >= 1) {
      const auto& dst_inner = tags.at({k1, k2 - 1}).second;
      const auto comps = standard_components(top, k2, inner, dst_inner);
      auto& out = b.vertical[key];
      for (std::size_t o = 0; o < outer.size(); ++o)
        for (const auto& c : comps)
          out.push_back(DiffEntry{o * inner_size + c.from, o * dst_inner.size() + c.to, c.map});
    }

    if (k1 >= 1) {
      auto dst = tags.find({k1 - 1, k2});
      if (dst == tags.end()) continue;
      const auto& [dst_outer, dst_inner] = dst->second;
      const Coeff twist = (k2 % 2 == 0) ? 1 : -1;
      const int mid = top - 2;
      auto& out = b.horizontal[key];
      for (const auto& c : simple_std_components(n, k1, outer, dst_outer)) {
        const Diagram lower = b_left(mid, c.i);
        for (std::size_t in = 0; in < inner_size; ++in) {
          auto prod = compose(inner[in], lower);
          if (!prod) continue;
          auto [ip, rest] = split_left_return(*prod);
          const std::size_t to = index_of(dst_inner, rest);
          out.push_back(DiffEntry{c.alpha * inner_size + in, c.beta * dst_inner.size() + to,
                                  AlgebraElement(b_left(a - 2, ip), c.sign * twist)});
        }
      }
    }
  }
  return b;
}

namespace {

void accumulate_paths(const std::vector<DiffEntry>& first, const std::vector<DiffEntry>& second,
                      std::map<std::pair<std::size_t, std::size_t>, AlgebraElement>& acc) {
  std::unordered_map<std::size_t, std::vector<const DiffEntry*>> by_source;
  for (const auto& e : second) by_source[e.from].push_back(&e);
  for (const auto& e : first) {
    auto it = by_source.find(e.to);
    if (it == by_source.end()) continue;
    for (const DiffEntry* f : it->second) {
      AlgebraElement p = multiply(e.map, f->map);
      auto key = std::make_pair(e.from, f->to);
      auto slot = acc.find(key);
      if (slot == acc.end()) acc.emplace(key, std::move(p));
      else slot->second += p;
    }
  }
}

}  // namespace

bool squares_anticommute(const SimpleBicomplex& b, std::string* witness) {
  static const std::vector<DiffEntry> none;
  auto get = [](const auto& m, std::pair<int, int> k) -> const std::vector<DiffEntry>& {
    auto it = m.find(k);
    return it == m.end() ? none : it->second;
  };
  for (const auto& [key, summands] : b.cells) {
    const auto [k1, k2] = key;
    if (k1 < 1 || k2 < 1) continue;
    std::map<std::pair<std::size_t, std::size_t>, AlgebraElement> acc;
    accumulate_paths(get(b.vertical, key), get(b.horizontal, {k1, k2 - 1}), acc);
    accumulate_paths(get(b.horizontal, key), get(b.vertical, {k1 - 1, k2}), acc);
    for (const auto& [pair, v] : acc) {
      if (!v.is_zero()) {
        if (witness)
          *witness = "cell (" + std::to_string(k1) + "," + std::to_string(k2) + ") summand " +
                     std::to_string(pair.first) + ": " + v.to_string();
        return false;
      }
    }
  }
  return true;
}

ComplexSpec totalize(const SimpleBicomplex& b) {
  // Summands of degree t are laid out by increasing k1.
  std::map<std::pair<int, int>, std::size_t> offset;
  std::vector<std::vector<Summand>> terms(static_cast<std::size_t>(b.k_max + 1));
  for (int t = 0; t <= b.k_max; ++t) {
    auto& term = terms[static_cast<std::size_t>(t)];
    for (int k1 = 0; k1 <= t; ++k1) {
      auto it = b.cells.find({k1, t - k1});
      if (it == b.cells.end()) continue;
      offset[{k1, t - k1}] = term.size();
      term.insert(term.end(), it->second.begin(), it->second.end());
    }
  }
  std::vector<std::vector<DiffEntry>> diffs(static_cast<std::size_t>(b.k_max + 1));
  auto add = [&](const auto& family, int dk1, int dk2) {
    for (const auto& [key, entries] : family) {
      const auto [k1, k2] = key;
      const std::pair<int, int> dst{k1 - dk1, k2 - dk2};
      const std::size_t src_off = offset.at(key);
      const std::size_t dst_off = offset.at(dst);
      auto& d = diffs[static_cast<std::size_t>(k1 + k2)];
      for (const auto& e : entries) d.push_back(DiffEntry{src_off + e.from, dst_off + e.to, e.map});
    }
  };
  add(b.vertical, 0, 1);
  add(b.horizontal, 1, 0);
  return ComplexSpec(std::move(terms), std::move(diffs), ModuleId::simple(b.n), b.k_max);
}

ComplexSpec simple_projective_resolution(int n, int k_max) {
  return totalize(simple_bicomplex(n, k_max));
}

namespace {

struct IndexedBasis {
  std::vector<Diagram> diagrams;
  std::unordered_map<Diagram, std::size_t> index;
};

class BasisCache {
 public:
  explicit BasisCache(int j) : j_(j) {}
  const IndexedBasis& get(const ModuleId& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    IndexedBasis b;
    b.diagrams = basis(m, j_);
    b.index.reserve(b.diagrams.size());
    for (std::size_t i = 0; i < b.diagrams.size(); ++i) b.index.emplace(b.diagrams[i], i);
    return cache_.emplace(m, std::move(b)).first->second;
  }

 private:
  int j_;
  std::map<ModuleId, IndexedBasis> cache_;
};

}  // namespace

SparseChainComplex graded_piece(const ComplexSpec& c, int j, bool augmented) {
  if (augmented && !c.augmentation())
    throw Error(Errc::invalid_argument, "complex has no augmentation");
  BasisCache cache(j);
  const int len = c.length();
  const std::size_t shift = augmented ? 1 : 0;

  // Offsets of each summand inside 1_j(C_k).
  std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(len + 1));
  SparseChainComplex out;
  out.dims.assign(static_cast<std::size_t>(len + 1) + shift, 0);
  out.diffs.resize(static_cast<std::size_t>(len) + shift);
  if (augmented) out.dims[0] = cache.get(*c.augmentation()).diagrams.size();
  for (int k = 0; k <= len; ++k) {
    std::size_t acc = 0;
    for (const auto& s : c.term(k)) {
      offsets[static_cast<std::size_t>(k)].push_back(acc);
      acc += cache.get(s.module).diagrams.size();
    }
    out.dims[static_cast<std::size_t>(k) + shift] = acc;
  }
  for (std::size_t i = 0; i < out.diffs.size(); ++i) {
    out.diffs[i].rows = out.dims[i];
    out.diffs[i].cols = out.dims[i + 1];
  }

  if (augmented) {
    const ModuleId& target = *c.augmentation();
    const auto& tb = cache.get(target);
    const auto& src = cache.get(c.term(0)[0].module);
    for (std::size_t v = 0; v < src.diagrams.size(); ++v) {
      auto it = tb.index.find(src.diagrams[v]);
      if (it != tb.index.end()) out.diffs[0].entries.push_back({it->second, v, 1});
    }
  }

  for (int k = 1; k <= len; ++k) {
    auto& mat = out.diffs[static_cast<std::size_t>(k - 1) + shift];
    const auto& src_terms = c.term(k);
    const auto& dst_terms = c.term(k - 1);
    for (const auto& e : c.diff(k)) {
      const ModuleId& sm = src_terms[e.from].module;
      const ModuleId& dm = dst_terms[e.to].module;
      const auto& sb = cache.get(sm);
      const auto& db = cache.get(dm);
      const std::size_t so = offsets[static_cast<std::size_t>(k)][e.from];
      const std::size_t doff = offsets[static_cast<std::size_t>(k - 1)][e.to];
      for (std::size_t v = 0; v < sb.diagrams.size(); ++v) {
        for (const auto& [x, coeff] : e.map.terms()) {
          auto prod = compose(sb.diagrams[v], x);
          if (!prod || !is_basis_diagram(dm, *prod)) continue;
          auto it = db.index.find(*prod);
          if (it == db.index.end())
            throw Error(Errc::invalid_argument, "product left the target basis");
          mat.entries.push_back({doff + it->second, so + v, coeff});
        }
      }
    }
  }
  return out;
}

bool ExactnessReport::exact() const {
  return std::all_of(pieces.begin(), pieces.end(), [](const GradedExactness& p) { return p.exact; });
}

ExactnessReport verify_exactness(const ComplexSpec& c, int j_lo, int j_hi, Exec exec) {
  if (!c.augmentation()) throw Error(Errc::invalid_argument, "exactness needs an augmentation");
  ExactnessReport report;
  report.asserted_below = c.truncated_at() ? *c.truncated_at() : c.length() + 1;
  const int count = std::max(0, j_hi - j_lo + 1);
  report.pieces.resize(static_cast<std::size_t>(count));

  auto one = [&](int j) {
    SparseChainComplex piece = graded_piece(c, j, true);
    const auto h = exec == Exec::serial ? dense_homology_dims(piece) : blocked_homology_dims(piece);
    GradedExactness g;
    g.j = j;
    g.target_dim = piece.dims[0];
    bool exact = h[0] == 0;
    for (int k = 0; k < report.asserted_below; ++k) exact = exact && h[static_cast<std::size_t>(k) + 1] == 0;
    g.exact = exact;
    // Undo the augmentation: H_0 gains back what the augmentation hit.
    g.homology.assign(h.begin() + 1, h.end());
    g.homology[0] += g.target_dim - h[0];
    return g;
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < count; ++t) report.pieces[static_cast<std::size_t>(t)] = one(j_lo + t);
  } else {
    for (int t = 0; t < count; ++t) report.pieces[static_cast<std::size_t>(t)] = one(j_lo + t);
  }
  return report;
}

bool is_linear(const ComplexSpec& c, std::string* witness) {
  for (int k = 1; k <= c.length(); ++k) {
    for (const auto& e : c.diff(k)) {
      auto deg = e.map.degree();
      if (!deg || *deg != 1) {
        if (witness) *witness = "d_" + std::to_string(k) + " component " + e.map.to_string();
        return false;
      }
    }
  }
  return true;
}

std::size_t hom_cohomology_dim(const ComplexSpec& res, const ModuleId& y, int k) {
  if (k < 0) return 0;
  const int top = std::min(res.length(), k + 1);
  if (k > top) return 0;
  if (res.truncated_at() && k + 1 > *res.truncated_at())
    throw Error(Errc::invalid_argument, "resolution too short for this Ext degree");

  // Cochain C^t = sum over summands alpha of C_t of 1_{a(alpha)} Y, t = 0..top.
  std::map<int, BasisCache> caches;
  auto basis_of = [&](int a) -> const IndexedBasis& {
    auto it = caches.find(a);
    if (it == caches.end()) it = caches.emplace(a, BasisCache(a)).first;
    return it->second.get(y);
  };
  std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(top + 1));
  std::vector<std::size_t> cdims(static_cast<std::size_t>(top + 1), 0);
  for (int t = 0; t <= top; ++t) {
    std::size_t acc = 0;
    for (const auto& s : res.term(t)) {
      offsets[static_cast<std::size_t>(t)].push_back(acc);
      acc += basis_of(s.module.n).diagrams.size();
    }
    cdims[static_cast<std::size_t>(t)] = acc;
  }

  // Chain complex D_i = C^{top - i}; D_{i+1} -> D_i is delta^{top-i-1}.
  SparseChainComplex chain;
  for (int i = 0; i <= top; ++i) chain.dims.push_back(cdims[static_cast<std::size_t>(top - i)]);
  for (int i = 0; i < top; ++i) {
    const int t = top - i - 1;  // delta^t : C^t -> C^{t+1}, built from d_{t+1}
    SparseMatrix m;
    m.rows = cdims[static_cast<std::size_t>(t + 1)];
    m.cols = cdims[static_cast<std::size_t>(t)];
    for (const auto& e : res.diff(t + 1)) {
      const auto& src = res.term(t + 1)[e.from];  // alpha
      const auto& dst = res.term(t)[e.to];        // beta
      const auto& yb_beta = basis_of(dst.module.n);
      const auto& yb_alpha = basis_of(src.module.n);
      const std::size_t ro = offsets[static_cast<std::size_t>(t + 1)][e.from];
      const std::size_t co = offsets[static_cast<std::size_t>(t)][e.to];
      for (std::size_t v = 0; v < yb_beta.diagrams.size(); ++v) {
        for (const auto& [x, coeff] : e.map.terms()) {
          auto r = act_on_basis(y, x, yb_beta.diagrams[v]);
          if (!r) continue;
          m.entries.push_back({ro + yb_alpha.index.at(*r), co + v, coeff});
        }
      }
    }
    chain.diffs.push_back(std::move(m));
  }
  const auto h = blocked_homology_dims(chain);
  return h[static_cast<std::size_t>(top - k)];
}

std::size_t ext_dim(const ModuleId& x, const ModuleId& y, int k) {
  if (k < 0) return 0;
  auto admissible = [](const ModuleId& m) {
    return m.kind == ModuleKind::standard || m.kind == ModuleKind::simple;
  };
  if (!admissible(x) || !admissible(y))
    throw Error(Errc::invalid_argument, "ext_dim takes standard or simple modules");
  if (x.kind == ModuleKind::standard) {
    const ComplexSpec res = standard_resolution(x.n);
    if (k > res.length()) return 0;
    return hom_cohomology_dim(res, y, k);
  }
  return hom_cohomology_dim(simple_projective_resolution(x.n, k + 1), y, k);
}

int homological_dimension_standard(int n) {
  const ComplexSpec res = standard_resolution(n);
  std::string why;
  if (!is_linear(res, &why))
    throw Error(Errc::invalid_argument, "resolution of M_" + std::to_string(n) + " not minimal: " + why);
  int len = res.length();
  while (len > 0 && res.term(len).empty()) --len;
  return len;
}

ComplexSpec truncate_resolution(const ComplexSpec& c, int k) {
  std::vector<std::vector<Summand>> terms;
  std::vector<std::vector<DiffEntry>> diffs;
  for (int t = 0; t <= c.length(); ++t) {
    std::vector<Summand> term;
    for (const auto& s : c.term(t)) {
      if (s.module.kind != ModuleKind::projective)
        throw Error(Errc::invalid_argument, "F_k is applied to projective terms only");
      term.push_back({ModuleId::truncated_projective(s.module.n, k), s.tag});
    }
    terms.push_back(std::move(term));
    diffs.push_back(c.diff(t));
  }
  return ComplexSpec(std::move(terms), std::move(diffs), std::nullopt, c.truncated_at());
}

std::vector<std::vector<std::size_t>> derived_truncation(int k, int n, int j_max, Exec exec) {
  const ComplexSpec fk = truncate_resolution(standard_resolution(n), k);
  const int len = fk.length();
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(len + 1),
                                            std::vector<std::size_t>(static_cast<std::size_t>(j_max + 1), 0));
  auto one = [&](int j) {
    SparseChainComplex piece = graded_piece(fk, j, false);
    const auto h = exec == Exec::serial ? dense_homology_dims(piece) : blocked_homology_dims(piece);
    for (int i = 0; i <= len; ++i)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(i)];
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int j = 0; j <= j_max; ++j) one(j);
  } else {
    for (int j = 0; j <= j_max; ++j) one(j);
  }
  return out;
}

}  // namespace chebtl
