#include "ftop/io.hpp"

#include "ftop/error.hpp"

#include <fstream>
#include <sstream>

namespace ftop::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::string> string_list(const Json& value, const char* what) {
  if (!value.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) bad(std::string(what) + " must contain strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Json torsion_json(const std::vector<BigInt>& torsion) {
  Json out = Json::array();
  for (const auto& t : torsion) {
    if (t <= BigInt(std::numeric_limits<long long>::max()))
      out.push_back(static_cast<long long>(t));
    else
      out.push_back(t.str());
  }
  return out;
}

Json verdict(Verdict v) { return std::string(ftop::to_string(v)); }

}  // namespace

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

Poset poset_from_json(const Json& doc) {
  const auto elements = string_list(field(doc, "elements"), "elements");
  std::vector<ElementPair> relations;
  if (doc.contains("relations")) {
    const Json& rel = doc.at("relations");
    if (!rel.is_array()) bad("relations must be an array");
    for (const auto& p : rel) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        bad("each relation must be a pair of element ids");
      relations.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  return Poset::build(elements, relations);
}

Json to_json(const Poset& poset) {
  Json rel = Json::array();
  for (const auto& [a, b] : poset.hasse_pairs()) rel.push_back({a, b});
  return {{"elements", poset.elements()}, {"relations", rel}};
}

SimplicialComplex complex_from_json(const Json& doc) {
  const Json& facets = field(doc, "facets");
  if (!facets.is_array()) bad("facets must be an array");
  std::vector<Simplex> simplices;
  for (const auto& f : facets) simplices.push_back(make_simplex(string_list(f, "facet")));
  return SimplicialComplex::from_simplices(std::move(simplices));
}

Json to_json(const SimplicialComplex& complex) { return {{"facets", complex.facets()}}; }

bool looks_like_complex(const Json& doc) { return doc.is_object() && doc.contains("facets"); }

Relation relation_from_json(const Json& doc, const std::map<std::string, Poset>& spaces) {
  auto space = [&](const char* key) -> const Poset& {
    const Json& name = field(doc, key);
    if (!name.is_string()) bad(std::string(key) + " must name a space");
    auto it = spaces.find(name.get<std::string>());
    if (it == spaces.end()) bad("unknown space '" + name.get<std::string>() + "'");
    return it->second;
  };
  const Direction dir =
      doc.contains("direction") ? direction_from_string(doc.at("direction").get<std::string>()) : Direction::Right;
  std::vector<ElementPair> pairs;
  for (const auto& p : field(doc, "pairs")) {
    if (!p.is_array() || p.size() != 2) bad("each relation pair must have two entries");
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return Relation(space("source"), space("target"), pairs, dir);
}

Json to_json(const Relation& relation, const std::string& source, const std::string& target) {
  Json pairs = Json::array();
  for (const auto& [a, b] : relation.named_pairs()) pairs.push_back({a, b});
  return {{"source", source},
          {"target", target},
          {"direction", std::string(to_string(relation.direction()))},
          {"pairs", pairs}};
}

namespace {

Json resolve(const Json& value, const std::filesystem::path& base) {
  if (value.is_string()) return read_file(base / value.get<std::string>());
  if (value.is_object() && value.contains("file")) return read_file(base / value.at("file").get<std::string>());
  return value;
}

}  // namespace

CylinderSpec cylinder_spec_from_json(const Json& doc, const std::filesystem::path& base) {
  CylinderSpec spec;
  std::map<std::string, Poset> by_name;
  std::vector<std::string> order;
  for (const auto& s : field(doc, "spaces")) {
    const std::string name = field(s, "name").get<std::string>();
    if (by_name.count(name)) bad("duplicate space name '" + name + "'");
    by_name.emplace(name, poset_from_json(resolve(s, base)));
    order.push_back(name);
  }
  for (const auto& name : order) spec.spaces.push_back(by_name.at(name));
  for (const auto& r : field(doc, "relations")) spec.relations.push_back(relation_from_json(resolve(r, base), by_name));
  return spec;
}

Cover cover_from_json(const Json& doc, const std::filesystem::path& base) {
  const Json parent = resolve(field(doc, "parent"), base);
  const Json& members = field(doc, "members");
  if (!members.is_array()) bad("members must be an array");
  if (looks_like_complex(parent)) {
    std::vector<std::pair<std::string, SimplicialComplex>> list;
    for (const auto& m : members) list.emplace_back(field(m, "name").get<std::string>(), complex_from_json(m));
    return Cover::of_complex(complex_from_json(parent), std::move(list));
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> list;
  for (const auto& m : members)
    list.emplace_back(field(m, "name").get<std::string>(), string_list(field(m, "elements"), "elements"));
  return Cover::of_poset(poset_from_json(parent), list);
}

Json to_json(const Cover& cover) {
  Json members = Json::array();
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (cover.is_complex())
      members.push_back({{"name", cover.names()[i]}, {"facets", cover.member_complex(i).facets()}});
    else
      members.push_back({{"name", cover.names()[i]}, {"elements", cover.parent_poset().names(cover.member_set(i))}});
  }
  return {{"parent", cover.is_complex() ? to_json(cover.parent_complex()) : to_json(cover.parent_poset())},
          {"members", members}};
}

// ---------------------------------------------------------------------------

CollapseCertificate certificate_from_json(const Json& doc) {
  CollapseCertificate out;
  const Json& steps = field(doc, "steps");
  if (!steps.is_array()) bad("steps must be an array");
  for (const auto& s : steps) {
    const std::string kind = field(s, "kind").get<std::string>();
    if (kind == "free-pair")
      out.steps.push_back(FreeFacePair{make_simplex(string_list(field(s, "face"), "face")),
                                       make_simplex(string_list(field(s, "coface"), "coface"))});
    else
      out.steps.push_back(PointRemoval{field(s, "element").get<std::string>(), point_kind_from_string(kind)});
  }
  return out;
}

Json to_json(const CollapseCertificate& certificate) {
  Json steps = Json::array();
  for (const auto& step : certificate.steps) {
    if (const auto* p = std::get_if<PointRemoval>(&step))
      steps.push_back({{"kind", std::string(to_string(p->kind))}, {"element", p->element}});
    else {
      const auto& f = std::get<FreeFacePair>(step);
      steps.push_back({{"kind", "free-pair"}, {"face", f.face}, {"coface", f.coface}});
    }
  }
  return {{"steps", steps}};
}

Json to_json(const HomologyResult& result) {
  Json out = Json::array();
  if (result.empty) return out;
  for (std::size_t k = 0; k < result.degrees.size(); ++k)
    out.push_back({{"degree", k}, {"betti", result.degrees[k].betti}, {"torsion", torsion_json(result.degrees[k].torsion)}});
  return out;
}

Json homology_report(const SimplicialComplex& complex) {
  return {{"reduced", to_json(reduced_homology(complex))},
          {"unreduced", to_json(homology(complex))},
          {"euler_characteristic", complex.euler_characteristic()},
          {"dimension", complex.dimension()}};
}

Json to_json(const Bar& bar) {
  Json out = {{"degree", bar.degree}, {"birth", bar.birth}};
  out["death"] = bar.death ? Json(*bar.death) : Json(nullptr);
  return out;
}

std::string persistence_lines(const PersistenceDiagram& diagram) {
  std::string out;
  for (const auto& b : diagram.bars) out += to_json(b).dump() + "\n";
  return out;
}

Json to_json(const TriStateResult& result) {
  Json out = {{"verdict", verdict(result.verdict)}};
  if (result.certificate) out["certificate_steps"] = result.certificate->steps.size();
  if (result.witness) out["witness"] = to_json(*result.witness);
  if (!result.note.empty()) out["note"] = result.note;
  return out;
}

Json to_json(const CollapseReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"element", c.element},
                      {"set", c.set},
                      {"triviality", to_json(c.triviality)},
                      {"collapsibility", to_json(c.collapsibility)}});
  Json out = {{"claim", report.claim},
              {"checks", checks},
              {"triviality", verdict(report.triviality)},
              {"collapsibility", verdict(report.collapsibility)},
              {"certified", verdict(report.certified)},
              {"cylinder_height", report.cylinder.poset.height()}};
  if (report.certificate) out["certificate"] = to_json(*report.certificate);
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

Json to_json(const IntermediateReport& report) {
  return {{"side", report.side == Side::Left ? "left" : "right"},
          {"single", to_json(report.single)},
          {"composite", to_json(report.composite)},
          {"verdict", verdict(report.verdict)},
          {"bound", report.bound},
          {"note", report.note}};
}

Json to_json(const ChainReport& report) {
  return {{"left", to_json(report.left)},
          {"right", to_json(report.right)},
          {"verdict", verdict(report.verdict)},
          {"bound", report.bound},
          {"note", report.note}};
}

Json to_json(const CoverClassification& c) {
  Json records = Json::array();
  for (const auto& r : c.records) {
    Json rec = {{"index_set", r.index_set}, {"empty", r.object.empty}};
    if (!r.object.empty) {
      rec["triviality"] = to_json(r.triviality);
      rec["collapsibility"] = to_json(r.collapsibility);
      rec["acyclic"] = r.acyclic;
    }
    records.push_back(rec);
  }
  Json out = {{"records", records},
              {"exhaustive", c.exhaustive},
              {"good", verdict(c.good)},
              {"contractible_shadow", verdict(c.good_shadow)},
              {"strong_good", verdict(c.strong_good)},
              {"unknown_triviality", c.unknown_triviality},
              {"unknown_collapsibility", c.unknown_collapsibility}};
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json to_json(const NerveReport& report) {
  Json hyps = Json::array();
  for (const auto& h : report.hypotheses) {
    Json j = {{"subject", h.subject}, {"condition", h.condition}, {"verdict", verdict(h.verdict)}};
    if (!h.note.empty()) j["note"] = h.note;
    hyps.push_back(j);
  }
  Json out = {{"flavor", std::string(to_string(report.flavor))},
              {"nerve_object", report.nerve_object},
              {"hypotheses", hyps},
              {"hypothesis", verdict(report.hypothesis)},
              {"parent_homology", to_json(report.parent_homology)},
              {"nerve_homology", to_json(report.nerve_homology)},
              {"homology_equal", report.homology_equal},
              {"good", verdict(report.classification.good)},
              {"strong_good", verdict(report.classification.strong_good)},
              {"notes", report.notes}};
  if (report.bound) out["bound"] = *report.bound;
  return out;
}

Json to_json(const TruncationReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back({{"index_set", f.index_set}, {"homology", to_json(f.homology)}});
  return {{"strong_good", verdict(report.classification.strong_good)},
          {"good", verdict(report.classification.good)},
          {"part1", report.part1},
          {"parent_homology", to_json(report.parent_homology)},
          {"nerve_homology", to_json(report.nerve_homology)},
          {"part2", report.part2},
          {"subsets_checked", report.subsets_checked},
          {"exhaustive", report.exhaustive},
          {"seed", report.seed},
          {"failures", failures},
          {"status", report.status},
          {"notes", report.notes}};
}

Json to_json(const RelationNerveReport& report) {
  Json hyps = Json::array();
  for (const auto& h : report.hypotheses)
    hyps.push_back({{"subject", h.subject}, {"condition", h.condition}, {"verdict", verdict(h.verdict)}});
  Json spaces = Json::array();
  for (std::size_t i = 0; i < report.space_homology.size(); ++i)
    spaces.push_back({{"space", i}, {"homology", to_json(report.space_homology[i])}, {"equal", bool(report.homology_equal[i])}});
  return {{"hypotheses", hyps},
          {"hypothesis", verdict(report.hypothesis)},
          {"n_zero_homology", to_json(report.n_zero_homology)},
          {"spaces", spaces},
          {"notes", report.notes}};
}

}  // namespace ftop::io
