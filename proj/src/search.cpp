#include "burau/search.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <thread>

namespace burau {

std::vector<std::int64_t> root_key(const BurauVector& v, bool mod2) {
  std::vector<std::int64_t> out;
  for (const auto& c : v.coords()) {
    std::int64_t at_one = 0;
    for (const auto& [e, coeff] : c.terms()) at_one += coeff.num();
    if (mod2) at_one = ((at_one % 2) + 2) % 2;
    out.push_back(at_one);
  }
  return out;
}

std::int64_t length_key(const BurauVector& v) {
  std::int64_t total = 0;
  for (const auto& c : v.coords()) {
    for (const auto& [e, coeff] : c.terms()) total += coeff.num() < 0 ? -coeff.num() : coeff.num();
  }
  return total;
}

CurveStore::CurveStore(const CurveStore& other)
    : graph_(other.graph_), root_mod2_(other.root_mod2_) {
  std::lock_guard<std::mutex> lock(other.mutex_);
  records_ = other.records_;
  keys_ = other.keys_;
}

int CurveStore::insert(const BurauVector& v, BraidWord witness, int seed, int parent, bool dedup) {
  std::string key = v.to_string();
  std::lock_guard<std::mutex> lock(mutex_);
  if (!keys_.insert(key).second && dedup) return -1;
  CurveRecord rec{v, std::move(witness), seed, parent, root_key(v, root_mod2_), length_key(v)};
  records_.push_back(std::move(rec));
  return static_cast<int>(records_.size()) - 1;
}

bool CurveStore::contains(const BurauVector& v) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return keys_.count(v.to_string()) > 0;
}

nlohmann::json CurveStore::to_json() const {
  std::lock_guard<std::mutex> lock(mutex_);
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records_) {
    recs.push_back({{"witness", r.witness},
                    {"seed", r.seed},
                    {"parent", r.parent},
                    {"vector", r.vector.to_json()},
                    {"root_key", r.root_key},
                    {"length_key", r.length_key}});
  }
  return {{"graph", graph_.to_text()}, {"root_mod2", root_mod2_}, {"records", recs}};
}

CurveStore CurveStore::from_json(const nlohmann::json& j) {
  CurveStore store(CoxeterGraph::parse(j.at("graph").get<std::string>()),
                   j.at("root_mod2").get<bool>());
  const auto ring = CoefficientRing::integers();
  const auto form = PairingForm::standard();
  for (const auto& r : j.at("records")) {
    BraidWord w = r.at("witness").get<BraidWord>();
    int seed = r.at("seed").get<int>();
    // Vectors are recomputed from the witnesses so a reloaded store is
    // consistent by construction.
    BurauVector v = act(store.graph_, w, BurauVector::basis(ring, store.graph_.size(), seed), form);
    store.insert(v, w, seed, r.at("parent").get<int>(), false);
  }
  return store;
}

void CurveStore::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json().dump() << "\n";
}

CurveStore CurveStore::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return from_json(nlohmann::json::parse(in));
}

CurveStore enumerate_curves(const CoxeterGraph& g, const CurveOptions& options) {
  if (options.budget == 0) throw std::invalid_argument("curve budget must be positive");
  const auto ring = CoefficientRing::integers();
  const auto form = PairingForm::standard();
  CurveStore store(g, options.root_mod2);
  std::vector<int> seeds = options.seeds;
  if (seeds.empty()) {
    for (int i = 1; i <= g.size(); ++i) seeds.push_back(i);
  }
  std::vector<int> frontier;
  for (int s : seeds) {
    if (!g.contains(s)) throw std::out_of_range("seed vertex outside the graph");
    if (store.size() >= options.budget) break;
    int idx = store.insert(BurauVector::basis(ring, g.size(), s), {}, s, -1, options.dedup);
    if (idx >= 0) frontier.push_back(idx);
  }
  for (const auto& w : options.extra) {
    if (store.size() >= options.budget) break;
    BurauVector v = act(g, w.word, BurauVector::basis(ring, g.size(), w.vertex), form);
    store.insert(v, w.word, w.vertex, -1, options.dedup);
  }

  std::vector<int> letters;
  for (int i = 1; i <= g.size(); ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  std::mt19937_64 rng(options.rng_seed);
  for (int depth = 1; depth <= options.max_depth && !frontier.empty(); ++depth) {
    if (options.rng_seed != 0) std::shuffle(letters.begin(), letters.end(), rng);
    std::vector<int> next;
    for (int idx : frontier) {
      CurveRecord parent = store.records()[idx];
      for (int letter : letters) {
        if (store.size() >= options.budget) return store;
        BurauVector v = parent.vector;
        apply_letter(g, letter, v, form);
        if (options.max_length_key > 0 && length_key(v) > options.max_length_key) continue;
        BraidWord w{letter};
        w.insert(w.end(), parent.witness.begin(), parent.witness.end());
        int child = store.insert(v, std::move(w), parent.seed, idx, options.dedup);
        if (child >= 0) next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  return store;
}

namespace {

std::int64_t gram_at(const CoxeterGraph& g, int i, int j, int q0) {
  if (i == j) return 2;
  switch (g.label(i, j)) {
    case Label::Two:
      return 0;
    case Label::Three:
      return q0;
    case Label::Infinity:
      return 2 * q0;
  }
  return 0;
}

std::vector<std::int64_t> evaluate_int(const BurauVector& v, int q0) {
  std::vector<std::int64_t> out;
  for (const auto& c : v.coords()) {
    std::int64_t total = 0;
    for (const auto& [e, coeff] : c.terms()) {
      total += (q0 == -1 && (e % 2 != 0)) ? -coeff.num() : coeff.num();
    }
    out.push_back(total);
  }
  return out;
}

}  // namespace

std::vector<CandidatePair> find_pairs(const CurveStore& store, const PairOptions& options) {
  if (options.criterion != 1 && options.criterion != 2) {
    throw std::invalid_argument("criterion must be 1 or 2");
  }
  const CoxeterGraph& g = store.graph();
  const int n = g.size();
  const auto& recs = store.records();
  const std::size_t m = recs.size();

  // Pairings at q = 1 and q = -1 are integer bilinear forms in the values
  // at q = +-1, so a dot product rejects almost every pair cheaply.
  std::vector<std::vector<std::int64_t>> at_one(m), at_minus(m), gram_one(m), gram_minus(m);
  for (std::size_t k = 0; k < m; ++k) {
    at_one[k] = evaluate_int(recs[k].vector, 1);
    at_minus[k] = evaluate_int(recs[k].vector, -1);
    gram_one[k].assign(n, 0);
    gram_minus[k].assign(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        gram_one[k][i] += gram_at(g, i + 1, j + 1, 1) * at_one[k][j];
        gram_minus[k][i] += gram_at(g, i + 1, j + 1, -1) * at_minus[k][j];
      }
    }
  }
  auto dot = [n](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  };
  auto admissible = [&](std::int64_t value) {
    return options.criterion == 1 ? value == 0 : (value == 1 || value == -1);
  };
  auto filtered = [&](std::size_t k, const std::vector<std::int64_t>& key) {
    return recs[k].root_key == key;
  };

  std::vector<CandidatePair> out;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (options.root_filter) {
        const auto& [k1, k2] = *options.root_filter;
        if (!((filtered(a, k1) && filtered(b, k2)) || (filtered(a, k2) && filtered(b, k1)))) continue;
      }
      if (options.skip_common_prefix && !recs[a].witness.empty() && !recs[b].witness.empty() &&
          recs[a].witness.front() == recs[b].witness.front() && recs[a].parent >= 0 &&
          recs[b].parent >= 0) {
        continue;  // a translate of the pair of parents
      }
      if (!admissible(dot(at_one[a], gram_one[b]))) continue;
      if (!admissible(dot(at_minus[a], gram_minus[b]))) continue;
      LaurentPoly p = pairing(g, recs[a].vector, recs[b].vector, PairingForm::standard());
      bool keep = false;
      if (options.criterion == 1) {
        keep = p.is_zero();
      } else if (auto mono = p.as_monomial()) {
        keep = mono->first == Rational(1) || mono->first == Rational(-1);
      }
      if (keep) out.push_back({static_cast<int>(a), static_cast<int>(b), p});
    }
  }
  return out;
}

CriterionResult confirm_pair(const CurveStore& store, const CandidatePair& pair, int criterion) {
  const auto& r1 = store.records().at(pair.first);
  const auto& r2 = store.records().at(pair.second);
  Witness w1{r1.witness, r1.seed};
  Witness w2{r2.witness, r2.seed};
  if (criterion == 1) return criterion1(store.graph(), w1, w2);
  if (criterion == 2) return criterion2(store.graph(), w1, w2);
  throw std::invalid_argument("criterion must be 1 or 2");
}

CurveSearchResult curve_search(const CoxeterGraph& g, const CurveOptions& curves,
                               const PairOptions& pairs, std::size_t max_confirm) {
  CurveStore store = enumerate_curves(g, curves);
  auto candidates = find_pairs(store, pairs);
  CurveSearchResult result;
  result.records = store.size();
  result.candidates = candidates.size();
  for (std::size_t k = 0; k < candidates.size() && k < max_confirm; ++k) {
    CriterionResult r = confirm_pair(store, candidates[k], pairs.criterion);
    if (r.accepted() && verify_kernel_word(*r.certificate)) {
      result.certificates.push_back(std::move(*r.certificate));
    } else {
      result.rejections.push_back(r.rejection);
    }
  }
  return result;
}

namespace {

// c with column `vertex` equal to c q^l alpha_vertex, c = +-1 in Z/pZ.
std::optional<std::pair<int, int>> fixed_monomial(const BurauVector& image, int vertex) {
  for (int j = 1; j <= image.size(); ++j) {
    if (j != vertex && !image[j].is_zero()) return std::nullopt;
  }
  auto mono = image[vertex].as_monomial();
  if (!mono) return std::nullopt;
  const auto& ring = image.ring();
  if (mono->first == ring.reduce(1)) return std::make_pair(1, mono->second);
  if (mono->first == ring.reduce(-1)) return std::make_pair(-1, mono->second);
  return std::nullopt;
}

}  // namespace

CriterionResult verify_bigelow3(const DualGarside& d, const BraidWord& beta, int i, std::int64_t p) {
  const CoxeterGraph& g = d.graph();
  validate_word(g, beta);
  if (!g.contains(i)) throw std::out_of_range("vertex outside the graph");
  const auto ring = CoefficientRing::integers_mod(p);
  const auto form = PairingForm::dual(d.order());
  BurauVector image = act(g, beta, BurauVector::basis(ring, g.size(), i), form);
  auto fixed = fixed_monomial(image, i);
  if (!fixed) {
    return CriterionResult::reject("beta alpha_" + std::to_string(i) + " = " + image.to_string() +
                                   " is not +-q^l alpha_" + std::to_string(i));
  }
  BraidWord c = concat(conjugate(beta, i), {-i});
  if (!is_identity(word_matrix(g, c, form, ring))) {
    return CriterionResult::reject("[beta, sigma_i] does not act as the identity mod " +
                                   std::to_string(p));
  }
  GarsideNF c_nf = word_to_nf(d, c);
  if (c_nf.k == 0 && c_nf.simples.empty()) {
    return CriterionResult::reject("[beta, sigma_i] is trivial in the braid group");
  }
  KernelCertificate cert;
  cert.graph = g;
  cert.criterion = Criterion::TwistQuotient;
  cert.witnesses = {Witness{beta, i}};
  cert.kernel_word = c;
  cert.ring = ring;
  cert.form = form;
  cert.fixed_sign = fixed->first;
  cert.fixed_exponent = fixed->second;
  GarsideNF beta_nf = word_to_nf(d, beta);
  cert.diagnostics["beta_gamma_power"] = beta_nf.k;
  cert.diagnostics["beta_simples"] = beta_nf.simples.size();
  cert.diagnostics["commutator_gamma_power"] = c_nf.k;
  cert.diagnostics["commutator_simples"] = c_nf.simples.size();
  cert.diagnostics["standard_form_identity"] =
      is_identity(word_matrix(g, c, PairingForm::standard(), ring));
  cert.diagnostics["samecurve"] = samecurve_check(d, beta, i).to_json(d);
  cert.diagnostics["samecurve"].erase("beta_nf");
  cert.diagnostics["samecurve"].erase("extended_nf");
  cert.verified = verify_kernel_word(cert);
  if (!cert.verified) return CriterionResult::reject("kernel word failed re-verification");
  return {std::move(cert), {}};
}

namespace {

struct WalkState {
  GarsideNF nf;
  BurauMatrix matrix;
};

struct WorkerOutput {
  std::vector<BucketCandidate> candidates;
  std::size_t steps = 0;
  std::size_t restarts = 0;
  std::size_t buckets = 0;
};

WorkerOutput run_worker(const DualGarside& d, const BucketOptions& opt, int worker) {
  WorkerOutput out;
  const CoxeterGraph& g = d.graph();
  const auto ring = CoefficientRing::integers_mod(opt.p);
  const auto form = PairingForm::dual(d.order());
  std::seed_seq seq{static_cast<std::uint64_t>(opt.seed), static_cast<std::uint64_t>(worker)};
  std::mt19937_64 rng(seq);

  const auto& atoms = d.reflection_simples();
  std::vector<BurauMatrix> atom_matrix;
  for (int s : atoms) atom_matrix.push_back(word_matrix(g, d.simple_lift(s), form, ring));
  std::uniform_int_distribution<std::size_t> pick_atom(0, atoms.size() - 1);

  using Key = std::pair<std::size_t, int>;  // (canonical length, spread)
  std::map<Key, std::deque<WalkState>> buckets;
  std::set<std::pair<int, std::vector<int>>> seen;
  WalkState cur{GarsideNF{}, BurauMatrix::identity(ring, g.size())};

  for (std::size_t step = 0; step < opt.budget; ++step) {
    std::size_t a = pick_atom(rng);
    append_simple(d, cur.nf, atoms[a]);
    cur.matrix = cur.matrix * atom_matrix[a];
    int sp = spread(cur.matrix);
    auto& bucket = buckets[{cur.nf.simples.size(), sp}];
    bucket.push_back(cur);
    if (bucket.size() > opt.capacity) bucket.pop_front();
    ++out.steps;

    bool hit = false;
    if (!cur.nf.simples.empty()) {
      if (opt.target == BucketTarget::SpreadZero) {
        hit = sp == 0;
      } else {
        hit = fixed_monomial(cur.matrix.column(opt.vertex), opt.vertex).has_value();
      }
    }
    if (hit && seen.insert({cur.nf.k, cur.nf.simples}).second) {
      BucketCandidate cand;
      cand.worker = worker;
      cand.step = step;
      cand.nf = cur.nf;
      cand.word = nf_to_word(d, cur.nf);
      cand.spread = sp;
      std::vector<int> vertices;
      if (opt.target == BucketTarget::FixVector) {
        vertices.push_back(opt.vertex);
      } else {
        for (int i = 1; i <= g.size(); ++i) vertices.push_back(i);
      }
      for (int i : vertices) {
        CriterionResult r = verify_bigelow3(d, cand.word, i, opt.p);
        if (r.accepted()) {
          cand.certificate = std::move(r.certificate);
          break;
        }
      }
      out.candidates.push_back(std::move(cand));
    }

    if (sp > opt.restart_spread || cur.nf.simples.size() > opt.max_simples) {
      // Resume from a random member of the lowest-spread non-trivial bucket.
      int best = -1;
      std::vector<const std::deque<WalkState>*> choices;
      for (const auto& [key, states] : buckets) {
        if (key.first == 0 || states.empty() || key.first >= opt.max_simples) continue;
        if (best < 0 || key.second < best) {
          best = key.second;
          choices.clear();
        }
        if (key.second == best) choices.push_back(&states);
      }
      if (choices.empty()) {
        cur = WalkState{GarsideNF{}, BurauMatrix::identity(ring, g.size())};
      } else {
        std::uniform_int_distribution<std::size_t> pick_bucket(0, choices.size() - 1);
        const auto& states = *choices[pick_bucket(rng)];
        std::uniform_int_distribution<std::size_t> pick_state(0, states.size() - 1);
        cur = states[pick_state(rng)];
      }
      ++out.restarts;
    }
  }
  out.buckets = buckets.size();
  return out;
}

}  // namespace

BucketSearchResult bucket_search(const DualGarside& d, const BucketOptions& options) {
  BucketSearchResult result;
  if (options.budget == 0) return result;
  if (options.p < 2) throw std::invalid_argument("modulus must be at least 2");
  if (!d.graph().contains(options.vertex)) throw std::out_of_range("target vertex outside the graph");
  const int workers = std::max(1, options.workers);
  std::vector<WorkerOutput> outputs(workers);
  if (workers == 1) {
    outputs[0] = run_worker(d, options, 0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] { outputs[w] = run_worker(d, options, w); });
    }
    for (auto& t : threads) t.join();
  }
  for (auto& o : outputs) {
    result.steps += o.steps;
    result.restarts += o.restarts;
    result.buckets += o.buckets;
    for (auto& c : o.candidates) {
      // Re-verified here, single-threaded, before anything is reported.
      if (c.certificate && !verify_kernel_word(*c.certificate)) c.certificate.reset();
      result.candidates.push_back(std::move(c));
    }
  }
  return result;
}

nlohmann::json BucketSearchResult::to_json(const DualGarside& d) const {
  nlohmann::json cands = nlohmann::json::array();
  std::size_t certified = 0;
  for (const auto& c : candidates) {
    nlohmann::json j = {{"worker", c.worker},
                        {"step", c.step},
                        {"word", c.word},
                        {"normal_form", format_nf(d, c.nf)},
                        {"spread", c.spread}};
    if (c.certificate) {
      j["certificate"] = c.certificate->to_json();
      ++certified;
    }
    cands.push_back(j);
  }
  return {{"steps", steps},
          {"restarts", restarts},
          {"buckets", buckets},
          {"candidates", cands},
          {"certificates", certified}};
}

nlohmann::json bucket_manifest(const DualGarside& d, const BucketOptions& o) {
  return {{"kind", "buckets"},
          {"graph", d.graph().name().empty() ? d.graph().to_text() : d.graph().name()},
          {"coxeter_order", d.order()},
          {"p", o.p},
          {"budget", o.budget},
          {"rng_seed", o.seed},
          {"workers", o.workers},
          {"target", o.target == BucketTarget::FixVector ? "fix_vector" : "spread_zero"},
          {"vertex", o.vertex},
          {"bucket_capacity", o.capacity},
          {"restart_spread", o.restart_spread},
          {"max_simples", o.max_simples}};
}

nlohmann::json curve_manifest(const CoxeterGraph& g, const CurveOptions& c, const PairOptions& p) {
  nlohmann::json extra = nlohmann::json::array();
  for (const auto& w : c.extra) extra.push_back({{"word", w.word}, {"vertex", w.vertex}});
  return {{"kind", "curves"},
          {"graph", g.name().empty() ? g.to_text() : g.name()},
          {"seeds", c.seeds},
          {"budget", c.budget},
          {"max_depth", c.max_depth},
          {"dedup", c.dedup},
          {"root_mod2", c.root_mod2},
          {"max_length_key", c.max_length_key},
          {"rng_seed", c.rng_seed},
          {"extra_witnesses", extra},
          {"criterion", p.criterion},
          {"workers", 1}};
}

}  // namespace burau
