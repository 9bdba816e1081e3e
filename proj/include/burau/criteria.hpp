#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burau/burau.hpp"
#include "burau/coxeter.hpp"
#include "burau/khscat.hpp"
#include "burau/ring.hpp"
#include "json.hpp"

namespace burau {

enum class Criterion { Commutator, BraidRelator, TwistQuotient };
std::string criterion_name(Criterion c);

struct Witness {
  BraidWord word;
  int vertex = 1;
};

/// A braid word claimed to act trivially under the Burau representation,
/// together with the evidence that produced it.
struct KernelCertificate {
  CoxeterGraph graph;
  Criterion criterion = Criterion::Commutator;
  std::vector<Witness> witnesses;
  BraidWord kernel_word;
  CoefficientRing ring = CoefficientRing::integers();
  PairingForm form;

  std::optional<LaurentPoly> pairing;  // Commutator, BraidRelator
  std::optional<HomTable> hom;         // Commutator, BraidRelator
  int pairing_sign = 1;                // BraidRelator: pairing = sign * q^shift
  int pairing_shift = 0;
  std::optional<int> fixed_exponent;   // TwistQuotient: beta alpha_i = sign * q^l alpha_i
  int fixed_sign = 1;
  nlohmann::json diagnostics = nlohmann::json::object();
  bool verified = false;

  nlohmann::json to_json() const;
};

/// Either a certificate or the reason the candidate was rejected.
struct CriterionResult {
  std::optional<KernelCertificate> certificate;
  std::string rejection;
  bool accepted() const { return certificate.has_value(); }
  static CriterionResult reject(std::string why) { return {std::nullopt, std::move(why)}; }
};

/// Recomputes the Burau matrix of the kernel word over the certificate's ring
/// and form; true iff it is exactly the identity. Empty words are refused.
bool verify_kernel_word(const KernelCertificate& cert);

/// Pairing 0 and non-zero Hom between the twisted projectives: the commutator
/// of t1 = w1 [i1] w1^{-1} and t2 = w2 [i2] w2^{-1} is in the kernel.
CriterionResult criterion1(const CoxeterGraph& g, const Witness& first, const Witness& second);
/// Pairing +-q^r and Hom of total dimension > 1: t1 t2 t1 t2^{-1} t1^{-1} t2^{-1}.
CriterionResult criterion2(const CoxeterGraph& g, const Witness& first, const Witness& second);

}  // namespace burau
