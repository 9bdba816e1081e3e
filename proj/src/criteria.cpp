#include "burau/criteria.hpp"

namespace burau {

std::string criterion_name(Criterion c) {
  switch (c) {
    case Criterion::Commutator:
      return "commutator";
    case Criterion::BraidRelator:
      return "braid-relator";
    case Criterion::TwistQuotient:
      return "twist-quotient";
  }
  return "?";
}

nlohmann::json KernelCertificate::to_json() const {
  nlohmann::json out;
  out["graph"] = graph.name().empty() ? graph.to_text() : graph.name();
  out["criterion"] = criterion_name(criterion);
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : witnesses) ws.push_back({{"word", w.word}, {"vertex", w.vertex}});
  out["witnesses"] = ws;
  out["kernel_word"] = kernel_word;
  out["kernel_word_length"] = kernel_word.size();
  out["ring"] = ring.name();
  out["form"] = form.name();
  if (pairing) out["pairing"] = pairing->to_string();
  if (hom) {
    out["hom_table"] = hom_table_to_json(*hom);
    long total = 0;
    for (const auto& [cell, dim] : *hom) total += dim;
    out["hom_total"] = total;
  }
  if (criterion == Criterion::BraidRelator) {
    out["pairing_sign"] = pairing_sign;
    out["pairing_shift"] = pairing_shift;
  }
  if (fixed_exponent) {
    out["fixed_exponent"] = *fixed_exponent;
    out["fixed_sign"] = fixed_sign;
  }
  if (!diagnostics.empty()) out["diagnostics"] = diagnostics;
  out["verified"] = verified;
  return out;
}

bool verify_kernel_word(const KernelCertificate& cert) {
  if (cert.kernel_word.empty()) return false;
  try {
    return is_identity(word_matrix(cert.graph, cert.kernel_word, cert.form, cert.ring));
  } catch (const std::exception&) {
    return false;
  }
}

namespace {

struct Evidence {
  LaurentPoly pairing;
  BraidWord t1, t2;
};

Evidence pairing_evidence(const CoxeterGraph& g, const Witness& first, const Witness& second) {
  validate_word(g, first.word);
  validate_word(g, second.word);
  if (!g.contains(first.vertex) || !g.contains(second.vertex)) {
    throw std::out_of_range("witness vertex outside the graph");
  }
  const auto ring = CoefficientRing::integers();
  const auto form = PairingForm::standard();
  BurauVector x = act(g, first.word, BurauVector::basis(ring, g.size(), first.vertex), form);
  BurauVector y = act(g, second.word, BurauVector::basis(ring, g.size(), second.vertex), form);
  return {pairing(g, x, y, form), conjugate(first.word, first.vertex),
          conjugate(second.word, second.vertex)};
}

HomTable witness_hom(const CoxeterGraph& g, const Witness& first, const Witness& second) {
  AlgebraPtr alg = make_zigzag(g);
  ProjComplex x = act_complex(first.word, projective(alg, first.vertex));
  ProjComplex y = act_complex(second.word, projective(alg, second.vertex));
  return hom_table(x, y);
}

long total(const HomTable& t) {
  long sum = 0;
  for (const auto& [cell, dim] : t) sum += dim;
  return sum;
}

CriterionResult finish(KernelCertificate cert) {
  cert.verified = verify_kernel_word(cert);
  if (!cert.verified) {
    return CriterionResult::reject("kernel word " + format_word(cert.kernel_word) +
                                   " does not act as the identity");
  }
  return {std::move(cert), {}};
}

}  // namespace

CriterionResult criterion1(const CoxeterGraph& g, const Witness& first, const Witness& second) {
  Evidence ev = pairing_evidence(g, first, second);
  if (!ev.pairing.is_zero()) {
    return CriterionResult::reject("pairing = " + ev.pairing.to_string() + " is not 0");
  }
  HomTable hom = witness_hom(g, first, second);
  if (total(hom) == 0) return CriterionResult::reject("pairing is 0 but the hom space is 0");
  KernelCertificate cert;
  cert.graph = g;
  cert.criterion = Criterion::Commutator;
  cert.witnesses = {first, second};
  cert.kernel_word = commutator(ev.t1, ev.t2);
  cert.pairing = ev.pairing;
  cert.hom = std::move(hom);
  return finish(std::move(cert));
}

CriterionResult criterion2(const CoxeterGraph& g, const Witness& first, const Witness& second) {
  Evidence ev = pairing_evidence(g, first, second);
  auto mono = ev.pairing.as_monomial();
  if (!mono || !(mono->first == Rational(1) || mono->first == Rational(-1))) {
    return CriterionResult::reject("pairing = " + ev.pairing.to_string() + " is not +-q^r");
  }
  HomTable hom = witness_hom(g, first, second);
  long dim = total(hom);
  if (dim <= 1) {
    return CriterionResult::reject("pairing is +-q^r but the hom space has dimension " +
                                   std::to_string(dim) + ", not > 1");
  }
  KernelCertificate cert;
  cert.graph = g;
  cert.criterion = Criterion::BraidRelator;
  cert.witnesses = {first, second};
  const BraidWord& a = ev.t1;
  const BraidWord& b = ev.t2;
  cert.kernel_word = concat(concat(concat(a, b), concat(a, inverse(b))), concat(inverse(a), inverse(b)));
  cert.pairing = ev.pairing;
  cert.pairing_sign = mono->first == Rational(1) ? 1 : -1;
  cert.pairing_shift = mono->second;
  cert.hom = std::move(hom);
  return finish(std::move(cert));
}

}  // namespace burau
