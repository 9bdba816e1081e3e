// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or precondition error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "burau/burau.hpp"
#include "burau/criteria.hpp"
#include "burau/fixtures.hpp"
#include "burau/garside.hpp"
#include "burau/khscat.hpp"
#include "burau/search.hpp"
#include "json.hpp"

using namespace burau;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string graph = "A2";
  std::string form = "standard";
  std::int64_t mod = 0;
  bool text = false;
};

CoefficientRing ring_of(const Common& c) {
  return c.mod ? CoefficientRing::integers_mod(c.mod) : CoefficientRing::integers();
}

PairingForm form_of(const Common& c) {
  if (c.form == "standard") return PairingForm::standard();
  if (c.form == "dual") return PairingForm::dual();
  throw UsageError("--form must be standard or dual");
}

int workers_from_env(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("BURAU_WORKERS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    throw UsageError("BURAU_WORKERS must be a positive integer");
  }
  return 1;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

// ---- verify -------------------------------------------------------------

struct Outcome {
  json report;
  bool passed = false;
};

Outcome verify_affine(const AffineFixture& f) {
  auto g = preset("tildeA3");
  Outcome out;
  CriterionResult r = criterion1(g, {f.a, f.a_vertex}, {f.b, f.b_vertex});
  out.report = {{"fixture", f.name}};
  if (!r.accepted()) {
    out.report["failed"] = r.rejection;
    return out;
  }
  out.report["certificate"] = r.certificate->to_json();
  if (!verify_kernel_word(*r.certificate)) {
    out.report["failed"] = "Burau matrix of the kernel word is not the identity";
    return out;
  }
  out.passed = true;
  return out;
}

Outcome verify_d4(const DualGarside& d, int p) {
  Outcome out;
  out.report = {{"fixture", "d4-mod " + std::to_string(p)}};
  CriterionResult r = verify_bigelow3(d, d4_word(p), 1, p);
  if (!r.accepted()) {
    out.report["failed"] = r.rejection;
    return out;
  }
  out.report["certificate"] = r.certificate->to_json();
  out.passed = r.certificate->verified;
  if (!out.passed) out.report["failed"] = "kernel word failed re-verification";
  return out;
}

int cmd_verify(const std::vector<std::string>& target, int workers, bool text) {
  if (target.empty()) throw UsageError("verify needs a target: affine-a3 | affine-a3-variant | d4-mod p | all");
  std::vector<std::function<Outcome()>> jobs;
  std::optional<DualGarside> d4;
  auto need_d4 = [&]() -> const DualGarside& {
    if (!d4) d4.emplace(preset("D4"));
    return *d4;
  };
  const std::string& name = target[0];
  if (name == "affine-a3" && target.size() == 1) {
    jobs.push_back([] { return verify_affine(affine_a3()); });
  } else if (name == "affine-a3-variant" && target.size() == 1) {
    jobs.push_back([] { return verify_affine(affine_a3_variant()); });
  } else if (name == "d4-mod" && target.size() == 2) {
    int p = 0;
    try {
      p = std::stoi(target[1]);
    } catch (const std::exception&) {
      throw UsageError("d4-mod needs an integer modulus");
    }
    const auto moduli = d4_moduli();
    if (std::find(moduli.begin(), moduli.end(), p) == moduli.end()) {
      throw UsageError("no D4 fixture for p = " + target[1] + " (available: 6..16)");
    }
    const DualGarside& d = need_d4();
    jobs.push_back([&d, p] { return verify_d4(d, p); });
  } else if (name == "all" && target.size() == 1) {
    jobs.push_back([] { return verify_affine(affine_a3()); });
    jobs.push_back([] { return verify_affine(affine_a3_variant()); });
    const DualGarside& d = need_d4();
    for (int p : d4_moduli()) jobs.push_back([&d, p] { return verify_d4(d, p); });
  } else {
    throw UsageError("unknown verify target");
  }

  // Jobs are independent; results are reported in job order either way.
  std::vector<Outcome> results(jobs.size());
  if (workers <= 1) {
    for (std::size_t k = 0; k < jobs.size(); ++k) results[k] = jobs[k]();
  } else {
    for (std::size_t start = 0; start < jobs.size(); start += workers) {
      std::vector<std::future<Outcome>> batch;
      for (std::size_t k = start; k < jobs.size() && k < start + workers; ++k) {
        batch.push_back(std::async(std::launch::async, jobs[k]));
      }
      for (std::size_t k = 0; k < batch.size(); ++k) results[start + k] = batch[k].get();
    }
  }

  bool all = true;
  json reports = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    reports.push_back(r.report);
    if (!r.passed) std::cerr << r.report["fixture"].get<std::string>() << ": " << r.report["failed"].get<std::string>() << "\n";
  }
  if (text) {
    for (const auto& r : results) {
      std::cout << r.report["fixture"].get<std::string>() << ": " << (r.passed ? "pass" : "FAIL") << "\n";
    }
  } else {
    print(reports.size() == 1 ? reports[0] : json{{"passed", all}, {"results", reports}});
  }
  return all ? kOk : kFailed;
}

// ---- module commands ----------------------------------------------------

int cmd_burau(const Common& c, const std::string& word, int start) {
  auto g = load_graph(c.graph);
  BraidWord w = parse_word(word);
  auto ring = ring_of(c);
  auto form = form_of(c);
  if (start > 0) {
    if (!g.contains(start)) throw UsageError("--start outside the graph");
    auto v = act(g, w, BurauVector::basis(ring, g.size(), start), form);
    if (c.text) {
      std::cout << v.to_string() << "\n";
    } else {
      print({{"graph", g.name()}, {"word", w}, {"start", start}, {"ring", ring.name()}, {"form", form.name()},
             {"vector", v.to_json()}});
    }
    return kOk;
  }
  auto m = word_matrix(g, w, form, ring);
  if (c.text) {
    std::cout << m.to_string();
  } else {
    print({{"graph", g.name()}, {"word", w}, {"ring", ring.name()}, {"form", form.name()},
           {"matrix", m.to_json()}, {"identity", is_identity(m)}});
  }
  return kOk;
}

struct Pair {
  std::string w1, w2;
  int i1 = 1, i2 = 1;
};

int cmd_pairing(const Common& c, const Pair& pr) {
  auto g = load_graph(c.graph);
  auto ring = ring_of(c);
  auto form = form_of(c);
  for (int i : {pr.i1, pr.i2}) {
    if (!g.contains(i)) throw UsageError("vertex outside the graph");
  }
  BraidWord w1 = parse_word(pr.w1), w2 = parse_word(pr.w2);
  auto x = act(g, w1, BurauVector::basis(ring, g.size(), pr.i1), form);
  auto y = act(g, w2, BurauVector::basis(ring, g.size(), pr.i2), form);
  LaurentPoly p = pairing(g, x, y, form);
  if (c.text) {
    std::cout << p.to_string() << "\n";
  } else {
    print({{"graph", g.name()}, {"ring", ring.name()}, {"form", form.name()}, {"pairing", p.to_string()},
           {"coefficients", poly_to_json(p)}});
  }
  return kOk;
}

int cmd_twist(const Common& c, const std::string& word, int start) {
  auto g = load_graph(c.graph);
  if (!g.contains(start)) throw UsageError("--start outside the graph");
  auto alg = make_zigzag(g);
  auto x = act_complex(parse_word(word), projective(alg, start));
  auto k0 = k0_class(x);
  bool spherical = is_spherical(x);
  if (c.text) {
    std::cout << x.dump() << "k0: " << k0.to_string() << "\nspherical: " << (spherical ? "yes" : "no") << "\n";
  } else {
    print({{"graph", g.name()}, {"complex", x.to_json()}, {"k0", k0.to_json()}, {"spherical", spherical}});
  }
  return kOk;
}

int cmd_hom(const Common& c, const Pair& pr) {
  auto g = load_graph(c.graph);
  for (int i : {pr.i1, pr.i2}) {
    if (!g.contains(i)) throw UsageError("vertex outside the graph");
  }
  auto alg = make_zigzag(g);
  auto x = act_complex(parse_word(pr.w1), projective(alg, pr.i1));
  auto y = act_complex(parse_word(pr.w2), projective(alg, pr.i2));
  HomTable t = hom_table(x, y);
  LaurentPoly euler = euler_characteristic(t);
  if (c.text) {
    std::cout << format_hom_table(t) << "Euler: " << euler.to_string() << "\n";
  } else {
    long total = 0;
    for (const auto& [cell, dim] : t) total += dim;
    print({{"graph", g.name()}, {"hom_table", hom_table_to_json(t)}, {"total", total},
           {"euler", euler.to_string()}});
  }
  return kOk;
}

// ---- search -------------------------------------------------------------

struct SearchArgs {
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  int workers = 0;
  std::string out;
  // curves
  int depth = 1 << 20;
  int criterion = 1;
  bool fixture_witnesses = false;
  bool root_mod2 = false;
  std::int64_t max_length = 0;
  // buckets
  std::int64_t p = 5;
  int vertex = 1;
  std::string target = "fix";
  int restart_spread = 12;
  std::size_t max_simples = 64;
};

int cmd_search_curves(const Common& c, const SearchArgs& a) {
  auto g = load_graph(c.graph);
  CurveOptions co;
  co.budget = a.budget;
  co.rng_seed = a.seed;
  co.max_depth = a.depth;
  co.root_mod2 = a.root_mod2;
  co.max_length_key = a.max_length;
  PairOptions po;
  po.criterion = a.criterion;
  if (a.criterion != 1 && a.criterion != 2) throw UsageError("--criterion must be 1 or 2");
  if (a.fixture_witnesses) {
    if (g != preset("tildeA3")) throw UsageError("--fixture-witnesses needs the tildeA3 graph");
    auto f = affine_a3();
    co.extra = {{f.a, f.a_vertex}, {f.b, f.b_vertex}};
    auto ring = CoefficientRing::integers();
    auto x = act(g, f.a, BurauVector::basis(ring, 4, f.a_vertex), PairingForm::standard());
    auto y = act(g, f.b, BurauVector::basis(ring, 4, f.b_vertex), PairingForm::standard());
    po.root_filter = std::make_pair(root_key(x, a.root_mod2), root_key(y, a.root_mod2));
  }
  CurveStore store = enumerate_curves(g, co);
  auto candidates = find_pairs(store, po);
  json certs = json::array();
  std::size_t rejected = 0;
  for (std::size_t k = 0; k < candidates.size() && k < 64; ++k) {
    CriterionResult r = confirm_pair(store, candidates[k], po.criterion);
    if (r.accepted() && verify_kernel_word(*r.certificate)) {
      certs.push_back(r.certificate->to_json());
    } else {
      ++rejected;
    }
  }
  json manifest = curve_manifest(g, co, po);
  json result = {{"manifest", manifest},
                 {"records", store.size()},
                 {"candidates", candidates.size()},
                 {"rejected", rejected},
                 {"certificates", certs}};
  if (!a.out.empty()) {
    std::filesystem::create_directories(a.out);
    write_file(std::filesystem::path(a.out) / "manifest.json", manifest);
    write_file(std::filesystem::path(a.out) / "certificates.json", certs);
    store.save((std::filesystem::path(a.out) / "store.json").string());
  }
  if (c.text) {
    std::cout << "records: " << store.size() << "\ncandidates: " << candidates.size()
              << "\ncertificates: " << certs.size() << "\n";
  } else {
    print(result);
  }
  return kOk;
}

int cmd_search_buckets(const Common& c, const SearchArgs& a) {
  auto g = load_graph(c.graph);
  std::optional<DualGarside> d;
  try {
    d.emplace(g);
  } catch (const NotFiniteType& e) {
    throw UsageError(std::string("bucket search needs a finite-type graph: ") + e.what());
  }
  BucketOptions o;
  o.p = a.p;
  o.budget = a.budget;
  o.seed = a.seed;
  o.vertex = a.vertex;
  o.restart_spread = a.restart_spread;
  o.max_simples = a.max_simples;
  o.workers = workers_from_env(a.workers);
  if (a.target == "fix") {
    o.target = BucketTarget::FixVector;
  } else if (a.target == "spread0") {
    o.target = BucketTarget::SpreadZero;
  } else {
    throw UsageError("--target must be fix or spread0");
  }
  if (!g.contains(o.vertex)) throw UsageError("--vertex outside the graph");
  if (o.p < 2) throw UsageError("--p must be at least 2");
  BucketSearchResult r = bucket_search(*d, o);
  json manifest = bucket_manifest(*d, o);
  json result = r.to_json(*d);
  if (!a.out.empty()) {
    std::filesystem::create_directories(a.out);
    write_file(std::filesystem::path(a.out) / "manifest.json", manifest);
    write_file(std::filesystem::path(a.out) / "candidates.json", result);
  }
  if (c.text) {
    std::cout << "steps: " << r.steps << "\nrestarts: " << r.restarts << "\ncandidates: " << r.candidates.size()
              << "\n";
    for (const auto& cand : r.candidates) {
      std::cout << format_word(cand.word) << "  " << format_nf(*d, cand.nf) << "\n";
    }
  } else {
    print({{"manifest", manifest}, {"result", result}});
  }
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool with_form) {
  sub->add_option("--graph", c.graph, "preset name or graph file")->required();
  if (with_form) {
    sub->add_option("--form", c.form, "standard or dual");
    sub->add_option("--mod", c.mod, "reduce coefficients mod p");
  }
  sub->add_flag("--text", c.text, "plain text instead of JSON");
}

void add_pair(CLI::App* sub, Pair& p) {
  sub->add_option("--w1", p.w1, "first word");
  sub->add_option("--i1", p.i1, "first vertex")->required();
  sub->add_option("--w2", p.w2, "second word");
  sub->add_option("--i2", p.i2, "second vertex")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burau representation toolkit"};
  app.require_subcommand(1);

  Common common;
  std::string word;
  int start = 0;
  Pair pair;
  SearchArgs sa;
  std::vector<std::string> target;
  int verify_workers = 0;
  bool verify_text = false;

  auto* verify = app.add_subcommand("verify", "verify a built-in kernel fixture");
  verify->add_option("target", target, "affine-a3 | affine-a3-variant | d4-mod p | all")->required();
  verify->add_option("--workers", verify_workers, "parallel fixtures (default BURAU_WORKERS or 1)");
  verify->add_flag("--text", verify_text, "one pass/fail line per fixture");

  auto* burau = app.add_subcommand("burau", "Burau matrix of a word, or its action on alpha_start");
  add_common(burau, common, true);
  burau->add_option("--word", word, "signed generator indices")->required();
  burau->add_option("--start", start, "apply to alpha_start instead of printing the matrix");

  auto* pairing_cmd = app.add_subcommand("pairing", "<w1 alpha_i1, w2 alpha_i2>");
  add_common(pairing_cmd, common, true);
  add_pair(pairing_cmd, pair);

  auto* twist = app.add_subcommand("twist", "minimized complex of word applied to P_start");
  add_common(twist, common, false);
  twist->add_option("--word", word, "signed generator indices")->required();
  twist->add_option("--start", start, "projective P_start")->required();

  auto* hom = app.add_subcommand("hom", "HomTable between two twisted projectives");
  add_common(hom, common, false);
  add_pair(hom, pair);

  auto* search = app.add_subcommand("search", "run a search");
  search->require_subcommand(1);
  auto add_search_common = [&](CLI::App* sub) {
    add_common(sub, common, false);
    sub->add_option("--budget", sa.budget, "records (curves) or steps per worker (buckets)");
    sub->add_option("--seed", sa.seed, "RNG seed");
    sub->add_option("--workers", sa.workers, "worker threads (default BURAU_WORKERS or 1)");
    sub->add_option("--out", sa.out, "directory for manifest and results");
  };
  auto* curves = search->add_subcommand("curves", "curve enumeration and pair criteria");
  add_search_common(curves);
  curves->add_option("--depth", sa.depth, "maximum word length");
  curves->add_option("--criterion", sa.criterion, "1 (commutator) or 2 (braid relator)");
  curves->add_flag("--fixture-witnesses", sa.fixture_witnesses, "seed with the affine A3 witnesses");
  curves->add_flag("--root-mod2", sa.root_mod2, "reduce root keys mod 2");
  curves->add_option("--max-length", sa.max_length, "drop vectors above this length key");
  auto* buckets = search->add_subcommand("buckets", "dual Garside bucket random walk");
  add_search_common(buckets);
  buckets->add_option("--p", sa.p, "modulus");
  buckets->add_option("--vertex", sa.vertex, "vertex to fix");
  buckets->add_option("--target", sa.target, "fix or spread0");
  buckets->add_option("--restart-spread", sa.restart_spread, "restart above this spread");
  buckets->add_option("--max-simples", sa.max_simples, "restart above this many simples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(target, workers_from_env(verify_workers), verify_text);
    if (*burau) return cmd_burau(common, word, start);
    if (*pairing_cmd) return cmd_pairing(common, pair);
    if (*twist) return cmd_twist(common, word, start);
    if (*hom) return cmd_hom(common, pair);
    if (*curves) return cmd_search_curves(common, sa);
    if (*buckets) return cmd_search_buckets(common, sa);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {  // includes ValidationError, NotFiniteType
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
