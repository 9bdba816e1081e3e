#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "burau/burau.hpp"
#include "burau/criteria.hpp"
#include "burau/garside.hpp"
#include "json.hpp"

namespace burau {

/// One curve-like vector act(witness, alpha_seed) together with its keys.
struct CurveRecord {
  BurauVector vector;
  BraidWord witness;
  int seed = 1;
  int parent = -1;                     // record the witness extends, -1 for seeds
  std::vector<std::int64_t> root_key;  // coordinates at q = 1, maybe mod 2
  std::int64_t length_key = 0;         // sum of |coefficients|
};

struct CurveOptions {
  std::vector<int> seeds;             // empty: every vertex
  std::size_t budget = 10000;         // maximum number of records
  int max_depth = 1 << 20;
  bool dedup = true;
  bool root_mod2 = false;
  std::int64_t max_length_key = 0;    // 0: no cutoff
  std::uint64_t rng_seed = 0;         // shuffles the generator order per level
  std::vector<Witness> extra;         // witnesses inserted after the seeds
};

/// Insertion-ordered set of curve records with exact-vector deduplication.
/// Insertion is guarded by a mutex; duplicates keep the first record.
class CurveStore {
 public:
  explicit CurveStore(CoxeterGraph g, bool root_mod2 = false)
      : graph_(std::move(g)), root_mod2_(root_mod2) {}
  CurveStore(const CurveStore& other);

  const CoxeterGraph& graph() const { return graph_; }
  const std::vector<CurveRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool root_mod2() const { return root_mod2_; }

  /// Returns the new index, or -1 when dedup is on and the vector is known.
  int insert(const BurauVector& v, BraidWord witness, int seed, int parent, bool dedup = true);
  bool contains(const BurauVector& v) const;

  nlohmann::json to_json() const;
  static CurveStore from_json(const nlohmann::json& j);
  void save(const std::string& path) const;
  static CurveStore load(const std::string& path);

 private:
  CoxeterGraph graph_;
  bool root_mod2_ = false;
  std::vector<CurveRecord> records_;
  std::unordered_set<std::string> keys_;
  mutable std::mutex mutex_;
};

std::vector<std::int64_t> root_key(const BurauVector& v, bool mod2);
std::int64_t length_key(const BurauVector& v);

/// Breadth-first images of the seed roots under all sigma_j^{+-1}.
CurveStore enumerate_curves(const CoxeterGraph& g, const CurveOptions& options);

struct CandidatePair {
  int first;
  int second;
  LaurentPoly pairing;
};

struct PairOptions {
  int criterion = 1;
  std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> root_filter;
  bool skip_common_prefix = true;
};

/// Pairs (i < j) whose pairing is 0 (criterion 1) or +-q^r (criterion 2).
std::vector<CandidatePair> find_pairs(const CurveStore& store, const PairOptions& options);
CriterionResult confirm_pair(const CurveStore& store, const CandidatePair& pair, int criterion);

struct CurveSearchResult {
  std::size_t records = 0;
  std::size_t candidates = 0;
  std::vector<KernelCertificate> certificates;
  std::vector<std::string> rejections;
};

/// enumerate_curves + find_pairs + confirm_pair, keeping only verified
/// certificates. At most `max_confirm` candidates go to the hom check.
CurveSearchResult curve_search(const CoxeterGraph& g, const CurveOptions& curves,
                               const PairOptions& pairs, std::size_t max_confirm = 64);

/// Twist-quotient check over Z/pZ: beta alpha_i = +-q^l alpha_i with the
/// dual form, [beta, sigma_i] acting as the identity, and [beta, sigma_i]
/// non-trivial in the braid group. The sign is recorded on the certificate.
CriterionResult verify_bigelow3(const DualGarside& d, const BraidWord& beta, int i, std::int64_t p);

enum class BucketTarget { FixVector, SpreadZero };

struct BucketOptions {
  std::int64_t p = 5;
  std::size_t budget = 10000;  // random-walk steps per worker
  std::uint64_t seed = 0;
  BucketTarget target = BucketTarget::FixVector;
  int vertex = 1;              // for FixVector
  std::size_t capacity = 64;   // per bucket, oldest evicted
  int restart_spread = 12;     // resample from the buckets once spread exceeds this
  std::size_t max_simples = 64;
  int workers = 1;
};

struct BucketCandidate {
  int worker = 0;
  std::size_t step = 0;
  BraidWord word;
  GarsideNF nf;
  int spread = 0;
  std::optional<KernelCertificate> certificate;
};

struct BucketSearchResult {
  std::vector<BucketCandidate> candidates;
  std::size_t steps = 0;
  std::size_t restarts = 0;
  std::size_t buckets = 0;
  nlohmann::json to_json(const DualGarside& d) const;
};

BucketSearchResult bucket_search(const DualGarside& d, const BucketOptions& options);

nlohmann::json bucket_manifest(const DualGarside& d, const BucketOptions& options);
nlohmann::json curve_manifest(const CoxeterGraph& g, const CurveOptions& curves,
                              const PairOptions& pairs);

}  // namespace burau
