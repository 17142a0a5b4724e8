#include "chebtl/presentation.hpp"

#include <map>

#include "chebtl/exactlinalg.hpp"
#include "chebtl/homology.hpp"

namespace chebtl {

Diagram Generator::diagram() const {
  switch (kind) {
    case Kind::idempotent: return Diagram::identity(n);
    case Kind::right: return b_right(n, i);
    case Kind::left: return b_left(n, i);
  }
  return Diagram::identity(0);
}

std::string Generator::label() const {
  switch (kind) {
    case Kind::idempotent: return "1_" + std::to_string(n);
    case Kind::right: return "b^" + std::to_string(i) + "_" + std::to_string(n + 2);
    case Kind::left: return "^" + std::to_string(i) + "b_" + std::to_string(n);
  }
  return "?";
}

const char* family_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::kg1: return "KG1";
    case RelationFamily::kg2: return "KG2";
    case RelationFamily::kg3: return "KG3";
    case RelationFamily::kg4: return "KG4";
    case RelationFamily::kg5: return "KG5";
    case RelationFamily::idempotent: return "idempotent";
    case RelationFamily::kg3_alt: return "KG3-alt";
  }
  return "?";
}

namespace {

std::string side_string(const std::vector<Monomial>& side) {
  if (side.empty()) return "0";
  std::string s;
  for (std::size_t t = 0; t < side.size(); ++t) {
    const auto& m = side[t];
    if (t > 0) s += m.coeff < 0 ? " - " : " + ";
    else if (m.coeff < 0) s += "-";
    const Coeff a = m.coeff < 0 ? -m.coeff : m.coeff;
    if (a != 1) s += std::to_string(a) + "*";
    for (std::size_t g = 0; g < m.word.size(); ++g) {
      if (g > 0) s += " ";
      s += m.word[g].label();
    }
  }
  return s;
}

Monomial word(std::initializer_list<Generator> gens) { return Monomial{1, gens}; }

}  // namespace

std::string RelationInstance::to_string() const {
  return side_string(lhs) + " = " + side_string(rhs);
}

AlgebraElement evaluate(const std::vector<Monomial>& side, int source, int target) {
  AlgebraElement out(source, target);
  for (const auto& m : side) {
    if (m.word.empty()) throw Error(Errc::invalid_argument, "empty word");
    AlgebraElement acc(m.word.front().diagram());
    for (std::size_t g = 1; g < m.word.size(); ++g)
      acc = product_or_zero(acc, AlgebraElement(m.word[g].diagram()));
    if (acc.n_left() != source || acc.m_right() != target) {
      if (!acc.is_zero()) throw Error(Errc::signature_mismatch, "word leaves the relation's signature");
      continue;
    }
    out += m.coeff * acc;
  }
  return out;
}

namespace {

void push(std::vector<RelationInstance>& out, RelationFamily f, int n, int i, int j, int src,
          int dst, std::vector<Monomial> lhs, std::vector<Monomial> rhs) {
  out.push_back(RelationInstance{f, n, i, j, src, dst, std::move(lhs), std::move(rhs)});
}

using G = Generator;

// KG families with the base vertex n, in the convention of the header.
void quadratic_instances(int n, std::vector<RelationInstance>& out) {
  // n -> n+2 -> n
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 1; j <= n + 1; ++j) {
      const Monomial lhs = word({G::up(n, i), G::down(n, j)});
      if (j == i) push(out, RelationFamily::kg2, n, i, j, n, n, {lhs}, {});
      else if (j == i + 1 || j == i - 1) push(out, RelationFamily::kg1, n, i, j, n, n, {lhs}, {});
      else if (i >= j + 2)
        push(out, RelationFamily::kg3, n, i, j, n, n, {lhs}, {word({G::down(n - 2, j), G::up(n - 2, i - 2)})});
      else
        push(out, RelationFamily::kg3, n, i, j, n, n, {lhs}, {word({G::down(n - 2, j - 2), G::up(n - 2, i)})});
    }
  }
  // n+4 -> n+2 -> n; the mirror image of KG5, which needs j = i and j = i+1 too
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i; j <= n + 1; ++j)
      push(out, RelationFamily::kg4, n, i, j, n + 4, n, {word({G::down(n + 2, i), G::down(n, j)})},
           {word({G::down(n + 2, j + 2), G::down(n, i)})});
  // n -> n+2 -> n+4
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 2; j <= n + 3; ++j)
      push(out, RelationFamily::kg5, n, i, j, n, n + 4, {word({G::up(n, i), G::up(n + 2, j)})},
           {word({G::up(n, j - 2), G::up(n + 2, i)})});
}

void idempotent_instances(int n, int n_max, std::vector<RelationInstance>& out) {
  for (int m = 0; m <= n_max; ++m) {
    if (m == n)
      push(out, RelationFamily::idempotent, n, m, 0, n, n, {word({G::idem(n), G::idem(m)})},
           {word({G::idem(n)})});
    else
      push(out, RelationFamily::idempotent, n, m, 0, n, m, {word({G::idem(n), G::idem(m)})}, {});
  }
  for (int i = 1; i <= n + 1; ++i) {
    const Generator up = G::up(n, i), down = G::down(n, i);
    push(out, RelationFamily::idempotent, n, i, 0, n, n + 2, {word({G::idem(n), up})}, {word({up})});
    push(out, RelationFamily::idempotent, n, i, 1, n, n + 2, {word({up, G::idem(n + 2)})}, {word({up})});
    push(out, RelationFamily::idempotent, n, i, 2, n + 2, n, {word({G::idem(n + 2), down})}, {word({down})});
    push(out, RelationFamily::idempotent, n, i, 3, n + 2, n, {word({down, G::idem(n)})}, {word({down})});
    // a mismatched idempotent kills the arrow
    push(out, RelationFamily::idempotent, n, i, 4, n + 2, n + 2, {word({G::idem(n + 2), up})}, {});
  }
}

}  // namespace

std::vector<RelationInstance> relation_instances(int n_max) {
  std::vector<RelationInstance> out;
  for (int n = 0; n <= n_max; ++n) {
    quadratic_instances(n, out);
    idempotent_instances(n, n_max, out);
  }
  return out;
}

namespace {

RelationCheck check(const RelationInstance& r) {
  RelationCheck c{r, RelationStatus::holds, std::nullopt};
  const AlgebraElement diff = evaluate(r.lhs, r.source, r.target) - evaluate(r.rhs, r.source, r.target);
  if (!diff.is_zero()) {
    c.status = RelationStatus::violated;
    c.witness = diff.to_string();
  }
  return c;
}

}  // namespace

bool RelationReport::all_hold() const {
  for (const auto& c : checks)
    if (c.status != RelationStatus::holds) return false;
  return true;
}

RelationReport verify_relations(int n_max) {
  RelationReport report;
  for (const auto& r : relation_instances(n_max)) report.checks.push_back(check(r));
  // The unswapped variant: ^jb_{n-2} b^{i-2}_n also for j >= i+2.
  for (int n = 0; n <= n_max; ++n)
    for (int i = 3; i <= n + 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) {  // ^jb_{n-2} needs j <= n-1
        RelationInstance r{RelationFamily::kg3_alt, n, i, j, n, n,
                           {word({G::up(n, i), G::down(n, j)})},
                           {word({G::down(n - 2, j), G::up(n - 2, i - 2)})}};
        report.kg3_alt.push_back(check(r));
      }
  return report;
}

bool QuadraticReport::ok() const {
  for (const auto& b : blocks)
    if (!b.ok()) return false;
  return true;
}

QuadraticReport quadratic_completeness_check(int n_max) {
  // KG instances indexed by signature.
  std::map<std::pair<int, int>, std::vector<RelationInstance>> by_sig;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<RelationInstance> inst;
    quadratic_instances(n, inst);
    for (auto& r : inst) by_sig[{r.source, r.target}].push_back(std::move(r));
  }

  QuadraticReport report;
  for (int a = 0; a <= n_max; ++a) {
    for (int b : {a - 4, a, a + 4}) {
      if (b < 0 || b > n_max) continue;
      // Paths a -> c -> b, c = a +- 2, as generator pairs.
      std::vector<std::pair<Generator, Generator>> paths;
      auto arrows = [](int from, int to) {
        std::vector<Generator> g;
        if (to == from + 2)
          for (int i = 1; i <= from + 1; ++i) g.push_back(G::up(from, i));
        else if (to == from - 2 && to >= 0)
          for (int i = 1; i <= to + 1; ++i) g.push_back(G::down(to, i));
        return g;
      };
      for (int c : {a - 2, a + 2}) {
        if (c < 0) continue;
        for (const auto& g1 : arrows(a, c))
          for (const auto& g2 : arrows(c, b)) paths.emplace_back(g1, g2);
      }
      auto path_index = [&](const std::vector<Generator>& w) -> std::size_t {
        for (std::size_t p = 0; p < paths.size(); ++p) {
          const auto& [g1, g2] = paths[p];
          if (g1.kind == w[0].kind && g1.n == w[0].n && g1.i == w[0].i && g2.kind == w[1].kind &&
              g2.n == w[1].n && g2.i == w[1].i)
            return p;
        }
        throw Error(Errc::invalid_argument, "relation word is not a path");
      };

      QuadraticBlock blk;
      blk.a = a;
      blk.b = b;
      blk.paths = paths.size();

      const auto& rels = by_sig[{a, b}];
      ExactMatrix rel(rels.size(), paths.size());
      for (std::size_t r = 0; r < rels.size(); ++r) {
        for (const auto& m : rels[r].lhs) rel.at(r, path_index(m.word)) += m.coeff;
        for (const auto& m : rels[r].rhs) rel.at(r, path_index(m.word)) -= m.coeff;
      }
      blk.relation_rank = rank(rel);

      const auto deg2 = graded_component(a, b, 2);
      blk.degree2_dim = deg2.size();
      ExactMatrix ev(deg2.size(), paths.size());
      for (std::size_t p = 0; p < paths.size(); ++p) {
        auto d = compose(paths[p].first.diagram(), paths[p].second.diagram());
        if (!d) continue;
        auto it = std::lower_bound(deg2.begin(), deg2.end(), *d);
        ev.at(static_cast<std::size_t>(it - deg2.begin()), p) = 1;
      }
      blk.evaluation_rank = rank(ev);
      report.blocks.push_back(blk);
    }
  }
  return report;
}

bool koszul_linearity_check(int n, int k_max, std::string* witness) {
  return is_linear(simple_projective_resolution(n, k_max), witness);
}

bool quiver_arrow_counts_match(int n_max, std::string* witness) {
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n_max; ++m) {
      std::size_t expected = 0;
      if (m == n + 2) expected = static_cast<std::size_t>(n + 1);
      if (n == m + 2) expected = static_cast<std::size_t>(m + 1);
      const std::size_t got = graded_component(n, m, 1).size();
      if (got != expected) {
        if (witness)
          *witness = "1_" + std::to_string(n) + " -> 1_" + std::to_string(m) + ": " +
                     std::to_string(got) + " arrows, expected " + std::to_string(expected);
        return false;
      }
    }
  }
  return true;
}

}  // namespace chebtl
