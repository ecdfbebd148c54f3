// ftop: command-line front end. One JSON document per invocation on stdout.
// Exit codes: 0 ok, 1 mismatch or failed replay, 2 input error.

#include "ftop/error.hpp"
#include "ftop/io.hpp"
#include "ftop/suite.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using ftop::io::Json;

namespace {

struct Options {
  std::uint64_t seed = 1;
  int restarts = 8;
  std::size_t max_subsets = 20;
  std::string mode;
  std::string in;
  std::string target;
  std::string out;
  std::string fixtures;
  std::string flavor;
  std::size_t instances = 200;
  std::vector<std::string> chain;
};

ftop::CollapseOptions collapse_options(const Options& o) {
  ftop::CollapseOptions c;
  c.seed = o.seed;
  c.restarts = o.restarts;
  return c;
}

ftop::ClassifyOptions classify_options(const Options& o) {
  ftop::ClassifyOptions c;
  c.collapse = collapse_options(o);
  c.max_subsets = o.max_subsets;
  return c;
}

Json input(const Options& o) {
  if (o.in.empty()) throw ftop::Error(ftop::ErrorKind::InvalidInput, "--in is required");
  return ftop::io::read_file(o.in);
}

fs::path base_of(const Options& o) { return fs::path(o.in).parent_path(); }

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

// Writes the certificate next to the report when --out is given.
void save_certificate(const Options& o, Json& report, const Json& object, const ftop::TriStateResult& r,
                      const std::optional<Json>& target = std::nullopt) {
  if (!r.certificate || o.out.empty()) return;
  ftop::io::write_file(o.out, ftop::to_json(ftop::CertificateFile{object, target, *r.certificate}));
  report["certificate"] = o.out;
}

Json verdict_list(const std::vector<ftop::TaggedPoint>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back({{"element", p.element}, {"kind", std::string(ftop::to_string(p.kind))}});
  return out;
}

int cmd_poset(const Options& o) {
  const Json doc = input(o);
  const ftop::Poset p = ftop::io::poset_from_json(doc);
  if (p.empty()) throw ftop::Error(ftop::ErrorKind::EmptySpace, "poset has no elements");
  const auto core = ftop::core(p);
  Json report = {{"poset", ftop::io::to_json(p)},
                 {"height", p.height()},
                 {"core", ftop::io::to_json(core.core)},
                 {"contractible", core.core.size() == 1},
                 {"beat_points", verdict_list(ftop::beat_points(p))},
                 {"weak_points", verdict_list(ftop::weak_points(p))},
                 {"reduced_homology", ftop::io::to_json(ftop::homology_of_poset(p))}};
  Json gamma = Json::array();
  for (const auto& [id, r] : ftop::gamma_points(p, collapse_options(o)))
    gamma.push_back({{"element", id}, {"result", ftop::io::to_json(r)}});
  report["gamma_points"] = gamma;

  ftop::TriStateResult r;
  std::optional<Json> target_doc;
  if (!o.target.empty()) {
    const ftop::Poset target = ftop::io::poset_from_json(ftop::io::read_file(o.target));
    r = ftop::greedy_collapse_space(p, target, collapse_options(o));
    target_doc = Json(target.elements());
  } else {
    r = ftop::greedy_collapse_space(p, collapse_options(o));
  }
  report["collapse"] = ftop::io::to_json(r);
  save_certificate(o, report, ftop::io::to_json(p), r, target_doc);
  emit(report);
  return 0;
}

int cmd_complex(const Options& o) {
  const ftop::SimplicialComplex k = ftop::io::complex_from_json(input(o));
  if (k.empty()) throw ftop::Error(ftop::ErrorKind::EmptyComplex, "complex has no facets");
  Json free = Json::array();
  for (const auto& f : ftop::free_faces(k)) free.push_back({{"face", f.face}, {"coface", f.coface}});
  Json report = {{"f_vector", k.f_vector()},
                 {"dimension", k.dimension()},
                 {"euler_characteristic", k.euler_characteristic()},
                 {"free_faces", free},
                 {"homology", ftop::io::homology_report(k)}};
  ftop::TriStateResult r;
  std::optional<Json> target_doc;
  if (!o.target.empty()) {
    target_doc = ftop::io::read_file(o.target);
    r = ftop::collapse_onto(k, ftop::io::complex_from_json(*target_doc), collapse_options(o));
  } else {
    const auto strategy = o.mode == "greedy" ? ftop::CollapseStrategy::Greedy : ftop::CollapseStrategy::Restarts;
    r = ftop::greedy_collapse_complex(k, strategy, collapse_options(o));
  }
  report["collapse"] = ftop::io::to_json(r);
  save_certificate(o, report, ftop::io::to_json(k), r, target_doc);
  emit(report);
  return 0;
}

int cmd_cylinder(const Options& o) {
  const ftop::CylinderSpec spec = ftop::io::cylinder_spec_from_json(input(o), base_of(o));
  const ftop::Cylinder cyl = ftop::multiple_cylinder(spec);
  Json cross = Json::array();
  for (const auto& [a, b] : cyl.cross_pairs()) cross.push_back({a, b});
  emit({{"poset", ftop::io::to_json(cyl.poset)}, {"cross_pairs", cross}, {"height", cyl.poset.height()}});
  return 0;
}

ftop::Cover read_cover(const Options& o) { return ftop::io::cover_from_json(input(o), base_of(o)); }

int cmd_nerve(const Options& o) {
  const ftop::Cover cover = read_cover(o);
  const auto mode = o.mode.empty() ? ftop::NerveMode::Trivial : ftop::nerve_mode_from_string(o.mode);
  const auto classification = ftop::classify_cover(cover, classify_options(o));
  Json report = {{"nerve", ftop::io::to_json(ftop::nerve(cover))},
                 {"non_hausdorff_nerve", ftop::io::to_json(ftop::non_hausdorff_nerve(cover))},
                 {"mode", std::string(ftop::to_string(mode))}};
  const auto reduced = ftop::reduced_nerve(cover);
  Json closed = Json::array();
  for (const auto& e : reduced.elements) closed.push_back({{"id", e.id}, {"index_set", cover.label(e.closed_mask)}});
  report["reduced_nerve"] = {{"poset", ftop::io::to_json(reduced.poset)}, {"elements", closed}};
  if (cover.is_complex()) {
    report["n_zero_complex"] = ftop::io::to_json(ftop::n_zero_complex(cover, classification, mode));
  } else {
    for (bool red : {false, true}) {
      const auto nz = ftop::n_zero_subspace(cover, classification, mode, red);
      report[red ? "reduced_n_zero" : "n_zero"] = {{"poset", ftop::io::to_json(nz.poset)},
                                                   {"excluded_unknown", nz.excluded_unknown},
                                                   {"excluded_no", nz.excluded_no}};
    }
  }
  emit(report);
  return 0;
}

int cmd_classify(const Options& o) {
  emit(ftop::io::to_json(ftop::classify_cover(read_cover(o), classify_options(o))));
  return 0;
}

int cmd_homology(const Options& o) {
  const Json doc = input(o);
  if (ftop::io::looks_like_complex(doc)) {
    emit(ftop::io::homology_report(ftop::io::complex_from_json(doc)));
  } else {
    const ftop::Poset p = ftop::io::poset_from_json(doc);
    emit({{"reduced", ftop::io::to_json(ftop::homology_of_poset(p))},
          {"unreduced", ftop::io::to_json(ftop::homology(ftop::order_complex(p)))}});
  }
  return 0;
}

std::vector<std::vector<std::string>> parse_chain(const std::vector<std::string>& steps) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : steps) {
    std::vector<std::string> names;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
      if (!item.empty()) names.push_back(item);
    out.push_back(std::move(names));
  }
  return out;
}

int cmd_persistence(const Options& o) {
  const ftop::Cover cover = read_cover(o);
  std::vector<std::vector<std::string>> chain = parse_chain(o.chain);
  if (chain.empty()) {
    // Default: the prefix chain of members in input order.
    for (std::size_t i = 0; i < cover.size(); ++i)
      chain.emplace_back(cover.names().begin(), cover.names().begin() + static_cast<std::ptrdiff_t>(i + 1));
  }
  std::cout << ftop::io::persistence_lines(ftop::persistence_over_chain(cover, chain));
  return 0;
}

// Relations of a spec, oriented to compose left to right.
std::vector<ftop::Relation> oriented_relations(const ftop::CylinderSpec& spec) {
  std::vector<ftop::Relation> out;
  for (const auto& r : spec.relations)
    out.push_back(r.direction() == ftop::Direction::Left ? r.inverse().with_direction(ftop::Direction::Right) : r);
  return out;
}

int cmd_verify(const Options& o) {
  const std::string& f = o.flavor;
  if (f == "certificate") {
    const auto file = ftop::certificate_file_from_json(input(o), base_of(o));
    const auto outcome = ftop::replay(file);
    emit({{"ok", outcome.ok}, {"steps_applied", outcome.steps_applied}, {"message", outcome.message}});
    return outcome.ok ? 0 : 1;
  }
  if (f == "truncation") {
    ftop::TruncationOptions t;
    t.classify = classify_options(o);
    emit(ftop::io::to_json(ftop::check_truncation_theorem(read_cover(o), t)));
    return 0;
  }
  if (f == "collapse-left" || f == "collapse-right" || f == "chain") {
    const auto spec = ftop::io::cylinder_spec_from_json(input(o), base_of(o));
    spec.validate();
    const auto relations = oriented_relations(spec);
    if (f == "chain") {
      emit(ftop::io::to_json(ftop::check_chain(relations, collapse_options(o))));
      return 0;
    }
    const auto composite = ftop::compose_chain(relations);
    emit(ftop::io::to_json(f == "collapse-left" ? ftop::check_collapse_left(composite, collapse_options(o))
                                                : ftop::check_collapse_right(composite, collapse_options(o))));
    return 0;
  }
  const auto flavor = ftop::nerve_flavor_from_string(f);
  emit(ftop::io::to_json(ftop::check_nerve_theorem(read_cover(o), flavor, classify_options(o))));
  return 0;
}

int cmd_suite(const Options& o) {
  ftop::RunConfig config;
  config.seed = o.seed;
  config.restarts = o.restarts;
  config.max_subsets = o.max_subsets;
  config.random_instances = o.instances;
  if (!o.fixtures.empty()) config.fixtures = fs::path(o.fixtures);
  const auto report = ftop::run_suite(config);
  const Json doc = ftop::to_json(report);
  if (!o.out.empty()) {
    const fs::path dir(o.out);
    fs::create_directories(dir / "certificates");
    for (const auto& [path, file] : report.certificates) ftop::io::write_file(dir / path, ftop::to_json(file));
    ftop::io::write_file(dir / "report.json", doc);
  }
  emit(doc);
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite spaces, simplicial complexes, cylinders and covers"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "input JSON file");
    sub->add_option("--out", o.out, "output path");
    sub->add_option("--seed", o.seed, "seed for randomized restarts and sampling");
    sub->add_option("--restarts", o.restarts, "random restarts after the deterministic pass");
    sub->add_option("--max-subsets", o.max_subsets, "list every index set up to this many members");
    sub->add_option("--mode", o.mode, "trivial|collapsible for nerves, greedy|restarts for complexes");
  };

  auto* poset = app.add_subcommand("poset", "cores, beat/weak/gamma points, collapse of a finite space");
  common(poset);
  poset->add_option("--target", o.target, "collapse onto this subposet");
  auto* complex = app.add_subcommand("complex", "free faces, collapse and homology of a complex");
  common(complex);
  complex->add_option("--target", o.target, "collapse onto this subcomplex");
  auto* cylinder = app.add_subcommand("cylinder", "multiple cylinder of a chain of relations");
  common(cylinder);
  auto* nerve = app.add_subcommand("nerve", "nerve, non-Hausdorff nerve, reduced nerve and N0");
  common(nerve);
  auto* cover = app.add_subcommand("cover", "cover operations");
  cover->require_subcommand(1);
  auto* classify = cover->add_subcommand("classify", "good / strong-good classification");
  common(classify);
  auto* homology = app.add_subcommand("homology", "integral homology, both H0 conventions");
  common(homology);
  auto* persistence = app.add_subcommand("persistence", "barcode of sub-unions along a chain of index sets");
  common(persistence);
  persistence->add_option("--chain", o.chain, "index set per step, comma separated (repeat the flag)");
  auto* verify = app.add_subcommand("verify", "hypothesis and conclusion checks");
  common(verify);
  verify->add_option("flavor", o.flavor,
                     "certificate | good | strong-good | space-trivial | space-collapsible | complex-contractible"
                     " | reduced-space | reduced-complex | truncation | collapse-left | collapse-right | chain")
      ->required();
  auto* suite = app.add_subcommand("suite", "golden checks plus the seeded replay suite");
  common(suite);
  suite->add_option("--fixtures", o.fixtures, "fixture directory");
  suite->add_option("--instances", o.instances, "random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*poset) return cmd_poset(o);
    if (*complex) return cmd_complex(o);
    if (*cylinder) return cmd_cylinder(o);
    if (*nerve) return cmd_nerve(o);
    if (*classify) return cmd_classify(o);
    if (*homology) return cmd_homology(o);
    if (*persistence) return cmd_persistence(o);
    if (*verify) return cmd_verify(o);
    if (*suite) return cmd_suite(o);
  } catch (const ftop::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
