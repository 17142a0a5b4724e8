#include "chebtl/io.hpp"

namespace chebtl {

Json to_json(const Diagram& d) {
  Json arcs = Json::array();
  for (auto [p, q] : d.arcs()) arcs.push_back({p, q});
  return Json{{"n", d.n_left()}, {"m", d.m_right()}, {"arcs", std::move(arcs)}};
}

Diagram diagram_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw Error(Errc::invalid_argument, "arc must be a pair");
      arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return Diagram::make(n, m, arcs);
  } catch (const Json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed diagram JSON: ") + e.what());
  }
}

Json to_json(const AlgebraElement& a) {
  Json terms = Json::array();
  for (const auto& [d, c] : a.terms()) terms.push_back({{"coeff", c}, {"diagram", to_json(d)}});
  return Json{{"n", a.n_left()}, {"m", a.m_right()}, {"terms", std::move(terms)}};
}

Json to_json(const ComplexSpec& c) {
  Json terms = Json::array();
  Json diffs = Json::array();
  for (int k = 0; k <= c.length(); ++k) {
    Json summands = Json::array();
    for (const auto& s : c.term(k)) {
      Json tag = Json::array();
      for (const auto& d : s.tag) tag.push_back(to_json(d));
      summands.push_back({{"module", s.module.label()}, {"tag", std::move(tag)}});
    }
    terms.push_back({{"degree", k}, {"summands", std::move(summands)}});
    if (k == 0) continue;
    Json entries = Json::array();
    for (const auto& e : c.diff(k))
      for (const auto& [d, coeff] : e.map.terms())
        entries.push_back({{"from", e.from}, {"to", e.to}, {"coeff", coeff}, {"diagram", to_json(d)}});
    diffs.push_back({{"degree", k}, {"entries", std::move(entries)}});
  }
  return Json{{"augmentation", c.augmentation() ? Json(c.augmentation()->label()) : Json(nullptr)},
              {"truncated_at", c.truncated_at() ? Json(*c.truncated_at()) : Json(nullptr)},
              {"terms", std::move(terms)},
              {"differentials", std::move(diffs)}};
}

Json to_json(const ExactnessReport& r) {
  Json pieces = Json::array();
  for (const auto& p : r.pieces)
    pieces.push_back(
        {{"j", p.j}, {"homology", p.homology}, {"target_dim", p.target_dim}, {"exact", p.exact}});
  return Json{{"asserted_below", r.asserted_below}, {"exact", r.exact()}, {"pieces", std::move(pieces)}};
}

namespace {

Json check_json(const RelationCheck& c) {
  Json j{{"family", family_name(c.relation.family)},
         {"params", {{"n", c.relation.n}, {"i", c.relation.i}, {"j", c.relation.j}}},
         {"relation", c.relation.to_string()},
         {"status", c.status == RelationStatus::holds ? "holds" : "violated"}};
  if (c.witness) j["witness"] = *c.witness;
  return j;
}

}  // namespace

Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  Json alt = Json::array();
  for (const auto& c : r.kg3_alt) alt.push_back(check_json(c));
  return Json{{"all_hold", r.all_hold()}, {"checks", std::move(checks)}, {"kg3_alt", std::move(alt)}};
}

Json to_json(const QuadraticReport& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks)
    blocks.push_back({{"a", b.a},
                      {"b", b.b},
                      {"paths", b.paths},
                      {"relation_rank", b.relation_rank},
                      {"evaluation_rank", b.evaluation_rank},
                      {"degree2_dim", b.degree2_dim},
                      {"ok", b.ok()}});
  return Json{{"ok", r.ok()}, {"blocks", std::move(blocks)}};
}

}  // namespace chebtl
