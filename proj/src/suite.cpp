#include "ftop/suite.hpp"

#include "ftop/catalog.hpp"
#include "ftop/error.hpp"
#include "ftop/generators.hpp"

#include <algorithm>
#include <cstdio>

namespace ftop {

const char* const kVersion = "ftop 0.3.0";

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Certificate files

io::Json to_json(const CertificateFile& file) {
  io::Json out = io::to_json(file.certificate);
  out["object"] = file.object;
  if (file.target) out["target"] = *file.target;
  return out;
}

namespace {

io::Json resolve(const io::Json& value, const std::filesystem::path& base) {
  if (value.is_string()) return io::read_file(base / value.get<std::string>());
  return value;
}

}  // namespace

CertificateFile certificate_file_from_json(const io::Json& doc, const std::filesystem::path& base) {
  if (!doc.is_object() || !doc.contains("object"))
    throw Error(ErrorKind::InvalidInput, "certificate file needs an 'object' field");
  CertificateFile out;
  out.object = resolve(doc.at("object"), base);
  if (doc.contains("target")) out.target = resolve(doc.at("target"), base);
  out.certificate = io::certificate_from_json(doc);
  return out;
}

ReplayOutcome replay(const CertificateFile& file) {
  if (io::looks_like_complex(file.object)) {
    std::optional<SimplicialComplex> target;
    if (file.target) target = io::complex_from_json(*file.target);
    return replay(io::complex_from_json(file.object), file.certificate, target);
  }
  const Poset start = io::poset_from_json(file.object);
  std::optional<ElementSet> target;
  if (file.target) {
    std::vector<std::string> ids;
    for (const auto& v : *file.target) ids.push_back(v.get<std::string>());
    target = start.subset(ids);
  }
  return replay(start, file.certificate, target);
}

// ---------------------------------------------------------------------------

namespace {

class Runner {
 public:
  explicit Runner(const RunConfig& config) : config_(config) {
    options_.restarts = config.restarts;
    options_.seed = config.seed;
    report_.version = kVersion;
    report_.seed = config.seed;
  }

  SuiteReport finish() {
    std::sort(report_.checks.begin(), report_.checks.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    for (const auto& c : report_.checks) {
      for (const auto* family : {&c.hypotheses, &c.conclusions})
        for (const auto& [k, v] : *family) {
          if (v == Verdict::Yes) ++report_.yes;
          else if (v == Verdict::No) ++report_.no;
          else ++report_.unknown;
        }
    }
    return std::move(report_);
  }

  // Golden values -----------------------------------------------------------

  void worked_example() {
    CylinderSpec spec = has_fixture("worked_example.json")
                            ? io::cylinder_spec_from_json(fixture("worked_example.json"), *config_.fixtures)
                            : catalog::worked_example();
    CheckRecord rec = record("golden/worked-example-cylinder", spec_digest(spec));
    const Cylinder cyl = multiple_cylinder(spec);
    const std::vector<ElementPair> expected{{"0:a1", "1:b1"}, {"0:a1", "1:b2"}, {"0:a1", "1:b3"},
                                            {"0:a2", "1:b2"}, {"0:a2", "1:b3"}, {"2:c1", "1:b2"},
                                            {"2:c1", "1:b3"}, {"2:c2", "1:b3"}};
    auto got = cyl.cross_pairs();
    std::sort(got.begin(), got.end());
    auto want = expected;
    std::sort(want.begin(), want.end());
    bool internal = true;
    for (std::size_t i = 0; i < spec.spaces.size(); ++i)
      internal = internal && cyl.poset.induced(cyl.copy(i)).size() == spec.spaces[i].size() &&
                 cyl.poset.induced(cyl.copy(i)).hasse().size() == spec.spaces[i].hasse().size();
    expect(rec, got == want, "cross pairs differ from the eight expected pairs");
    expect(rec, internal, "internal orders not preserved");
    rec.conclusions["cross-pairs"] = got == want ? Verdict::Yes : Verdict::No;
    push(std::move(rec));
  }

  void triangles() {
    Cover cover = has_fixture("triangles.json") ? io::cover_from_json(fixture("triangles.json"), *config_.fixtures)
                                   : catalog::triangles_cover();
    const SimplicialComplex& k = cover.parent_complex();
    CheckRecord rec = record("golden/triangle-union", io::to_json(cover).dump());
    const auto a = cover.member_complex(0), b = cover.member_complex(1);
    rec.hypotheses["A collapsible"] = greedy_collapse_complex(a, CollapseStrategy::Restarts, options_).verdict;
    rec.hypotheses["B collapsible"] = greedy_collapse_complex(b, CollapseStrategy::Restarts, options_).verdict;
    rec.hypotheses["A∩B collapsible"] =
        greedy_collapse_complex(a.intersect(b), CollapseStrategy::Restarts, options_).verdict;
    const TriStateResult r = staged_union_collapse(a, b, options_);
    rec.conclusions["A∪B collapsible"] = r.verdict;
    expect(rec, r.verdict == Verdict::Yes, "union not certified collapsible");
    if (r.certificate) {
      expect(rec, r.certificate->steps.size() == 5, "expected 5 collapse pairs, got " +
                                                        std::to_string(r.certificate->steps.size()));
      attach(rec, CertificateFile{io::to_json(k), std::nullopt, *r.certificate});
    }
    push(std::move(rec));
  }

  void dunce_hat() {
    const SimplicialComplex k = has_fixture("dunce_hat.json") ? io::complex_from_json(fixture("dunce_hat.json"))
                                                 : catalog::dunce_hat();
    CheckRecord rec = record("golden/dunce-hat", io::to_json(k).dump());
    expect(rec, free_faces(k).empty(), "dunce hat has a free face");
    const TriStateResult g = greedy_collapse_complex(k, CollapseStrategy::Restarts, options_);
    expect(rec, g.verdict == Verdict::Unknown, "greedy verdict should be Unknown");
    expect(rec, reduced_homology(k).is_trivial(), "reduced homology not zero");
    ClassifyOptions copts;
    copts.collapse = options_;
    const auto c = classify_cover(Cover::of_complex(k, {{"K", k}}), copts);
    rec.conclusions["contractible-shadow"] = c.good_shadow;
    rec.conclusions["collapsible"] = c.strong_good;
    expect(rec, c.good_shadow == Verdict::Yes && c.strong_good == Verdict::Unknown,
           "expected contractible-shadow Yes, collapsible Unknown");
    push(std::move(rec));
  }

  void circle() {
    Cover cover = has_fixture("s1_cover.json") ? io::cover_from_json(fixture("s1_cover.json"), *config_.fixtures)
                                   : catalog::circle_cover();
    CheckRecord rec = record("golden/circle-three-arcs", io::to_json(cover).dump());
    const auto n = nerve(cover);
    expect(rec, n == SimplicialComplex::from_simplices({{"1", "2"}, {"1", "3"}, {"2", "3"}}),
           "nerve is not the boundary of a 2-simplex");
    const auto hn = reduced_homology(n), hk = reduced_homology(cover.parent_complex());
    expect(rec, hn.betti(1) == 1 && hn.degree(1).torsion.empty() && hn == hk, "H1 mismatch");
    const auto pd = persistence_over_chain(cover, {{"1"}, {"1", "2"}, {"1", "2", "3"}});
    const auto bars = pd.bars_in_degree(1);
    expect(rec, bars.size() == 1 && bars[0].birth == 3 && !bars[0].death, "degree-1 barcode mismatch");
    TruncationOptions topts;
    topts.classify.collapse = options_;
    const auto t = check_truncation_theorem(cover, topts);
    rec.hypotheses["strong-good"] = t.classification.strong_good;
    rec.conclusions["part 1"] = t.part1 ? Verdict::Yes : Verdict::No;
    rec.conclusions["part 2"] = t.part2 ? Verdict::Yes : Verdict::No;
    const bool flagged = std::any_of(t.failures.begin(), t.failures.end(), [](const TruncationFailure& f) {
      return f.index_set == Simplex{"1", "2", "3"};
    });
    expect(rec, t.part1 && !t.part2 && flagged, "part-2 failure at {1,2,3} not flagged");
    push(std::move(rec));
  }

  void projective_plane() {
    const SimplicialComplex k = has_fixture("rp2.json") ? io::complex_from_json(fixture("rp2.json"))
                                                 : catalog::projective_plane();
    CheckRecord rec = record("golden/projective-plane", io::to_json(k).dump());
    const auto h = reduced_homology(k);
    expect(rec, h.betti(0) == 0 && h.betti(1) == 0 && h.degree(1).torsion == std::vector<BigInt>{2} &&
                    h.betti(2) == 0 && h.degree(2).torsion.empty(),
           "expected torsion [2] in degree 1 and nothing else");
    push(std::move(rec));
  }

  void golden_poset() {
    if (!config_.fixtures) return;
    const auto path = *config_.fixtures / "golden_poset_seed1_size5.json";
    if (!std::filesystem::exists(path)) return;
    const Poset stored = io::poset_from_json(io::read_file(path));
    CheckRecord rec = record("golden/generated-poset-seed1", io::to_json(stored).dump());
    expect(rec, gen::generate_poset(1, 5, 3) == stored, "generator output drifted from the stored fixture");
    push(std::move(rec));
  }

  void certificate_fixtures() {
    if (!config_.fixtures) return;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(*config_.fixtures)) {
      const std::string name = entry.path().filename().string();
      if (entry.is_regular_file() && name.size() > 17 && name.ends_with(".certificate.json"))
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      const io::Json doc = io::read_file(path);
      const CertificateFile file = certificate_file_from_json(doc, path.parent_path());
      CheckRecord rec = record("fixture/" + path.filename().string(), doc.dump());
      const ReplayOutcome out = replay(file);
      rec.conclusions["replay"] = out.ok ? Verdict::Yes : Verdict::No;
      rec.certificate = path.filename().string();
      if (!out.ok) {
        ++report_.replay_failures;
        rec.passed = false;
        rec.message = out.message;
      }
      report_.checks.push_back(std::move(rec));
    }
  }

  // Randomized replay suite -------------------------------------------------

  void random_suite() {
    for (std::size_t i = 0; i < config_.random_instances; ++i) {
      const std::uint64_t seed = config_.seed * 1000003ULL + i;
      char name[64];
      switch (i % 4) {
        case 0: {
          std::snprintf(name, sizeof name, "random/%04zu-poset", i);
          Rng rng(seed);
          const Poset p = gen::generate_poset(rng, 1 + rng.below(10), 3);
          CheckRecord rec = record(name, io::to_json(p).dump());
          CollapseOptions o = options_;
          o.seed = seed;
          const auto r = greedy_collapse_space(p, o);
          rec.conclusions["collapsible"] = r.verdict;
          if (r.verdict == Verdict::Yes) attach(rec, CertificateFile{io::to_json(p), std::nullopt, *r.certificate});
          push(std::move(rec));
          break;
        }
        case 1: {
          std::snprintf(name, sizeof name, "random/%04zu-complex", i);
          Rng rng(seed);
          const SimplicialComplex k = gen::generate_complex(rng, 7, 3);
          CheckRecord rec = record(name, io::to_json(k).dump());
          CollapseOptions o = options_;
          o.seed = seed;
          const auto r = greedy_collapse_complex(k, CollapseStrategy::Restarts, o);
          rec.conclusions["collapsible"] = r.verdict;
          if (r.verdict == Verdict::Yes) {
            expect(rec, reduced_homology(k).is_trivial(), "collapsible complex with non-zero reduced homology");
            attach(rec, CertificateFile{io::to_json(k), std::nullopt, *r.certificate});
          }
          push(std::move(rec));
          break;
        }
        case 2: {
          std::snprintf(name, sizeof name, "random/%04zu-composite", i);
          const auto inst = gen::generate_composite(seed);
          const Relation comp = compose(inst.r1, inst.r2);
          CheckRecord rec = record(name, io::to_json(comp, "X", "Z").dump());
          CollapseOptions o = options_;
          o.seed = seed;
          const auto r = check_collapse_left(comp, o);
          rec.hypotheses["collapsibility"] = r.collapsibility;
          rec.conclusions["collapse onto X"] = r.certified;
          expect(rec, r.certified == Verdict::Yes, "composite collapse not certified");
          if (r.certified == Verdict::Yes)
            attach(rec, CertificateFile{io::to_json(r.cylinder.poset),
                                         io::Json(r.cylinder.poset.names(r.cylinder.copy(r.target_copy))),
                                         *r.certificate});
          push(std::move(rec));
          break;
        }
        default: {
          std::snprintf(name, sizeof name, "random/%04zu-strong-good-cover", i);
          const auto g = gen::generate_strong_good_cover(seed);
          CheckRecord rec = record(name, io::to_json(g.cover).dump());
          TruncationOptions t;
          t.classify.collapse = options_;
          t.classify.collapse.seed = seed;
          const auto tr = check_truncation_theorem(g.cover, t);
          rec.hypotheses["strong-good"] = tr.classification.strong_good;
          rec.conclusions["part 1"] = tr.part1 ? Verdict::Yes : Verdict::No;
          rec.conclusions["part 2"] = tr.part2 ? Verdict::Yes : Verdict::No;
          expect(rec, tr.part1 && tr.part2, tr.status);
          if (g.rejected) rec.message = "regenerated " + std::to_string(g.rejected) + " times";
          push(std::move(rec));
          break;
        }
      }
    }
  }

 private:
  // Missing files fall back to the built-in copy.
  bool has_fixture(const std::string& name) const {
    return config_.fixtures && std::filesystem::exists(*config_.fixtures / name);
  }
  io::Json fixture(const std::string& name) const { return io::read_file(*config_.fixtures / name); }

  static std::string spec_digest(const CylinderSpec& spec) {
    io::Json doc = io::Json::array();
    for (const auto& s : spec.spaces) doc.push_back(io::to_json(s));
    for (const auto& r : spec.relations) doc.push_back(io::to_json(r, "", ""));
    return doc.dump();
  }

  CheckRecord record(std::string name, const std::string& inputs) const {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.inputs_digest = fnv1a_hex(std::string(kVersion) + "|" + std::to_string(config_.seed) + "|" + inputs);
    return rec;
  }

  void expect(CheckRecord& rec, bool ok, const std::string& message) {
    if (ok) return;
    if (rec.passed) ++report_.mismatches;
    rec.passed = false;
    if (!rec.message.empty()) rec.message += "; ";
    rec.message += message;
  }

  void attach(CheckRecord& rec, CertificateFile file) {
    const std::string path = "certificates/" + sanitized(rec.name) + ".json";
    rec.certificate = path;
    report_.certificates.emplace(path, std::move(file));
  }

  // Every attached certificate is replayed before the record is stored.
  void push(CheckRecord rec) {
    if (rec.certificate && rec.passed) {
      const ReplayOutcome out = replay(report_.certificates.at(*rec.certificate));
      if (!out.ok) {
        ++report_.replay_failures;
        rec.passed = false;
        rec.message = "replay failed: " + out.message;
      }
    }
    report_.checks.push_back(std::move(rec));
  }

  static std::string sanitized(std::string name) {
    for (char& c : name)
      if (c == '/') c = '_';
    return name;
  }

  const RunConfig& config_;
  CollapseOptions options_;
  SuiteReport report_;
};

}  // namespace

SuiteReport run_suite(const RunConfig& config) {
  if (config.fixtures && !std::filesystem::is_directory(*config.fixtures))
    throw Error(ErrorKind::InvalidInput, "fixtures directory not found: " + config.fixtures->string());
  Runner runner(config);
  runner.worked_example();
  runner.triangles();
  runner.dunce_hat();
  runner.circle();
  runner.projective_plane();
  runner.golden_poset();
  runner.certificate_fixtures();
  runner.random_suite();
  return runner.finish();
}

io::Json to_json(const SuiteReport& report) {
  io::Json checks = io::Json::array();
  for (const auto& c : report.checks) {
    io::Json hyps = io::Json::object(), concl = io::Json::object();
    for (const auto& [k, v] : c.hypotheses) hyps[k] = std::string(to_string(v));
    for (const auto& [k, v] : c.conclusions) concl[k] = std::string(to_string(v));
    io::Json rec = {{"name", c.name},
                    {"inputs_digest", c.inputs_digest},
                    {"hypotheses", hyps},
                    {"conclusions", concl},
                    {"passed", c.passed}};
    if (c.certificate) rec["certificate"] = *c.certificate;
    if (!c.message.empty()) rec["message"] = c.message;
    checks.push_back(rec);
  }
  return {{"version", report.version},
          {"seed", report.seed},
          {"checks", checks},
          {"counts", {{"yes", report.yes}, {"no", report.no}, {"unknown", report.unknown}}},
          {"replay_failures", report.replay_failures},
          {"mismatches", report.mismatches},
          {"passed", report.passed()}};
}

}  // namespace ftop
