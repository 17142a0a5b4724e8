#include "chebtl/modcat.hpp"

#include <regex>

namespace chebtl {

std::string ModuleId::label() const {
  switch (kind) {
    case ModuleKind::projective: return "P" + std::to_string(n);
    case ModuleKind::standard: return "M" + std::to_string(n);
    case ModuleKind::simple: return "L" + std::to_string(n);
    case ModuleKind::truncated_projective:
      return "P" + std::to_string(n) + "(<=" + std::to_string(w) + ")";
  }
  return "?";
}

ModuleId ModuleId::parse(const std::string& text) {
  static const std::regex re(R"(^([PML])(\d+)(?:\(<=(\d+)\))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw Error(Errc::invalid_argument, "cannot parse module label '" + text + "'");
  const int n = std::stoi(m[2].str());
  const char k = m[1].str()[0];
  if (m[3].matched) {
    if (k != 'P') throw Error(Errc::invalid_argument, "only projectives can be truncated");
    return truncated_projective(n, std::stoi(m[3].str()));
  }
  if (k == 'P') return projective(n);
  if (k == 'M') return standard(n);
  return simple(n);
}

bool is_basis_diagram(const ModuleId& module, const Diagram& d) {
  if (d.m_right() != module.n) return false;
  switch (module.kind) {
    case ModuleKind::projective: return true;
    case ModuleKind::standard: return d.right_returns() == 0;
    case ModuleKind::simple: return d.is_identity();
    case ModuleKind::truncated_projective: return d.width() <= module.w;
  }
  return false;
}

std::vector<Diagram> basis(const ModuleId& module, int j) {
  if (j < 0 || module.n < 0) return {};
  EnumFilter f;
  switch (module.kind) {
    case ModuleKind::projective: break;
    case ModuleKind::standard: f.no_right_returns = true; break;
    case ModuleKind::simple:
      if (j == module.n) return {Diagram::identity(module.n)};
      return {};
    case ModuleKind::truncated_projective: f.width_le = module.w; break;
  }
  return enumerate(j, module.n, f);
}

std::size_t graded_dim(const ModuleId& module, int j) {
  if (j < 0 || module.n < 0) return 0;
  switch (module.kind) {
    case ModuleKind::simple: return j == module.n ? 1 : 0;
    case ModuleKind::projective: return count_diagrams(j, module.n);
    case ModuleKind::standard: {
      EnumFilter f;
      f.no_right_returns = true;
      return count_diagrams(j, module.n, f);
    }
    case ModuleKind::truncated_projective: {
      EnumFilter f;
      f.width_le = module.w;
      return count_diagrams(j, module.n, f);
    }
  }
  return 0;
}

ModuleElement basis_element(const ModuleId& module, const Diagram& d) {
  if (!is_basis_diagram(module, d))
    throw Error(Errc::invalid_argument, d.to_string() + " is not a basis vector of " + module.label());
  return ModuleElement{module, d.n_left(), {{d, 1}}};
}

std::optional<Diagram> act_on_basis(const ModuleId& module, const Diagram& a, const Diagram& v) {
  auto prod = compose(a, v);
  if (!prod) return std::nullopt;
  // P_n(<=w) is stable because A(<=w) is an ideal; M_n kills right returns;
  // on L_n only 1_n survives.
  if (!is_basis_diagram(module, *prod)) {
    if (module.kind == ModuleKind::truncated_projective)
      throw Error(Errc::invalid_argument, "width ideal not preserved");
    return std::nullopt;
  }
  return prod;
}

ModuleElement act(const Diagram& a, const ModuleElement& v) {
  if (a.m_right() != v.j)
    throw Error(Errc::signature_mismatch, "diagram " + a.to_string() + " cannot act on 1_" +
                                              std::to_string(v.j) + v.module.label());
  ModuleElement out{v.module, a.n_left(), {}};
  for (const auto& [d, c] : v.terms) {
    if (auto r = act_on_basis(v.module, a, d)) {
      auto& slot = out.terms[*r];
      slot += c;
      if (slot == 0) out.terms.erase(*r);
    }
  }
  return out;
}

ModuleElement act(const AlgebraElement& a, const ModuleElement& v) {
  if (a.m_right() != v.j)
    throw Error(Errc::signature_mismatch, "element cannot act on this graded piece");
  ModuleElement out{v.module, a.n_left(), {}};
  for (const auto& [x, cx] : a.terms()) {
    ModuleElement part = act(x, v);
    for (const auto& [d, c] : part.terms) {
      auto& slot = out.terms[d];
      slot += cx * c;
      if (slot == 0) out.terms.erase(d);
    }
  }
  return out;
}

std::size_t multiplicity_simple(const ModuleId& module, int n) { return graded_dim(module, n); }

std::vector<std::pair<int, std::size_t>> standard_filtration_multiplicities(int n) {
  std::vector<std::pair<int, std::size_t>> out;
  EnumFilter f;
  f.no_left_returns = true;
  for (int k = 0; 2 * k <= n; ++k) out.emplace_back(n - 2 * k, count_diagrams(n - 2 * k, n, f));
  return out;
}

std::size_t pairing(const ModuleId& projective, const ModuleId& module) {
  if (projective.kind != ModuleKind::projective)
    throw Error(Errc::invalid_argument, "pairing expects a projective on the left");
  return graded_dim(module, projective.n);
}

std::vector<std::size_t> rho_vector(const ModuleId& module, int j_max) {
  std::vector<std::size_t> out;
  for (int j = 0; j <= j_max; ++j) out.push_back(graded_dim(module, j));
  return out;
}

std::vector<std::size_t> restriction_graded_dims(const ModuleId& module, int j_max) {
  std::vector<std::size_t> out;
  for (int j = 0; j <= j_max; ++j) out.push_back(graded_dim(module, j + 1));
  return out;
}

ModuleId induce_projective(const ModuleId& projective) {
  if (projective.kind != ModuleKind::projective)
    throw Error(Errc::invalid_argument, "induction is realized on projectives only");
  return ModuleId::projective(projective.n + 1);
}

void write_rho_csv(std::ostream& os, const std::vector<ModuleId>& modules, int j_max) {
  os << "module,j,dim\n";
  for (const auto& m : modules) {
    const auto rho = rho_vector(m, j_max);
    for (int j = 0; j <= j_max; ++j)
      os << m.label() << ',' << j << ',' << rho[static_cast<std::size_t>(j)] << '\n';
  }
}

void write_multiplicity_csv(std::ostream& os, int max) {
  os << "n,m,P_n:M_m,M_m:L_n\n";
  for (int n = 0; n <= max; ++n) {
    const auto filt = standard_filtration_multiplicities(n);
    for (int m = 0; m <= max; ++m) {
      std::size_t pm = 0;
      for (auto [idx, c] : filt)
        if (idx == m) pm = c;
      os << n << ',' << m << ',' << pm << ',' << multiplicity_simple(ModuleId::standard(m), n)
         << '\n';
    }
  }
}

}  // namespace chebtl
