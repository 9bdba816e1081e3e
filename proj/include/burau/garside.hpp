#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "burau/coxeter.hpp"
#include "json.hpp"

namespace burau {

/// n x n integer matrix, row-major, column j = image of alpha_j. Elements of
/// the Coxeter group are stored as their matrices in the q = -1
/// representation, which is faithful, so matrix equality is group equality.
using IntMatrix = std::vector<std::int64_t>;

class NotFiniteType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// s_i at q = -1: alpha_j -> alpha_j - B_ij alpha_i with B the Tits form.
IntMatrix coxeter_generator(const CoxeterGraph& g, int i);
/// Product s_{o1} s_{o2} ... s_{on}; default order 1..n.
IntMatrix coxeter_element(const CoxeterGraph& g, const std::vector<int>& order = {});
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, int n);
/// Dimension of the fixed space of w (rank of w - I over Q).
int fixed_space_dimension(const IntMatrix& w, int n);

/// The dual Garside structure of a finite-type Artin group.
///
/// Group elements are numbered 0..|W|-1 (0 is the identity). Simples, the
/// elements of [1, gamma], get their own dense numbering 0..|[1,gamma]|-1,
/// again with 0 the identity; every normal-form routine works on simple ids.
class DualGarside {
 public:
  /// Throws NotFiniteType when the Tits form is not positive definite or the
  /// group has more than `bound` elements.
  explicit DualGarside(const CoxeterGraph& g, std::vector<int> order = {},
                       std::size_t bound = 1'000'000);

  const CoxeterGraph& graph() const { return graph_; }
  int rank() const { return graph_.size(); }
  const std::vector<int>& order() const { return order_; }

  // Coxeter group.
  std::size_t group_order() const { return matrices_.size(); }
  const IntMatrix& matrix(int elt) const { return matrices_.at(elt); }
  int find(const IntMatrix& m) const;
  int multiply(int a, int b) const;
  int inverse(int a) const { return inverse_.at(a); }
  int generator(int i) const { return generators_.at(i - 1); }
  int gamma() const { return gamma_; }
  /// Group ids of T, atoms s_{o1}..s_{on} first, then discovery order.
  const std::vector<int>& reflections() const { return reflections_; }
  int reflection_length(int elt) const { return length_.at(elt); }

  // The interval [1, gamma].
  int simple_count() const { return static_cast<int>(simple_elt_.size()); }
  int simple_element(int s) const { return simple_elt_.at(s); }
  /// -1 when the group element is not in [1, gamma].
  int simple_of(int elt) const;
  int simple_length(int s) const { return length_.at(simple_elt_.at(s)); }
  int identity_simple() const { return 0; }
  int gamma_simple() const { return gamma_simple_; }
  int atom(int i) const { return atom_.at(i - 1); }
  std::vector<int> atoms() const { return atom_; }
  /// Every reflection below gamma, as simple ids.
  const std::vector<int>& reflection_simples() const { return reflection_simple_; }

  /// a <= b: l(a) + l(a^{-1} b) = l(b).
  bool divides(int a, int b) const { return left_divides_[a * simple_count() + b]; }
  /// a <=_R b: l(b a^{-1}) + l(a) = l(b).
  bool divides_right(int a, int b) const { return right_divides_[a * simple_count() + b]; }
  /// Largest common right divisor.
  int gcd_right(int a, int b) const { return gcd_right_[a * simple_count() + b]; }
  /// a z^{-1} for z <=_R a.
  int right_quotient(int a, int z) const;
  /// z y when the product is simple, else -1.
  int product_if_simple(int z, int y) const;
  /// gamma x gamma^{-1}.
  int phi(int s) const { return phi_.at(s); }
  int phi_inverse(int s) const { return phi_inv_.at(s); }
  /// gamma s^{-1}, so that complement(s) * s = gamma.
  int left_complement(int s) const { return left_complement_.at(s); }

  /// Braid word of the Hurwitz lift of a reflection (by group id).
  const BraidWord& reflection_lift(int reflection_elt) const;
  /// Lift of a simple: product of reflection lifts along a reduced
  /// decomposition. Independent of the decomposition as a braid.
  const BraidWord& simple_lift(int s) const { return simple_lift_.at(s); }
  BraidWord gamma_word() const { return order_; }
  /// 1-based positions in reflections() of the atoms dividing s.
  std::vector<int> atoms_below(int s) const;

 private:
  void enumerate_group(std::size_t bound);
  void compute_lengths();
  void build_interval();
  void build_lifts();

  CoxeterGraph graph_;
  std::vector<int> order_;

  struct Hash {
    std::size_t operator()(const IntMatrix& m) const;
  };
  std::vector<IntMatrix> matrices_;
  std::unordered_map<IntMatrix, int, Hash> index_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<int> reflections_;
  std::vector<int> length_;
  int gamma_ = 0;

  std::vector<int> simple_elt_;
  std::unordered_map<int, int> simple_index_;
  int gamma_simple_ = 0;
  std::vector<int> atom_;
  std::vector<int> reflection_simple_;
  std::vector<char> left_divides_, right_divides_;
  std::vector<int> gcd_right_, quotient_, product_;
  std::vector<int> phi_, phi_inv_, left_complement_;
  std::unordered_map<int, BraidWord> reflection_lift_;
  std::vector<BraidWord> simple_lift_;
};

/// gamma^k times simples[0] simples[1] ... (left to right), right-greedy,
/// without identity or gamma factors.
struct GarsideNF {
  int k = 0;
  std::vector<int> simples;
  friend bool operator==(const GarsideNF&, const GarsideNF&) = default;
};

/// Multiplies on the right by a simple and restores the normal form.
void append_simple(const DualGarside& d, GarsideNF& nf, int s);
/// Multiplies on the right by sigma_i^{+-1}.
void append_letter(const DualGarside& d, GarsideNF& nf, int letter);
GarsideNF word_to_nf(const DualGarside& d, const BraidWord& w);
/// A braid word representing the normal form (gamma powers then lifts).
BraidWord nf_to_word(const DualGarside& d, const GarsideNF& nf);
bool is_trivial_braid(const DualGarside& d, const BraidWord& w);
/// True when consecutive simples satisfy the right-greedy condition.
bool is_right_greedy(const DualGarside& d, const std::vector<int>& simples);

/// "γ^k · [{atoms}:lift | ...]"
std::string format_simple(const DualGarside& d, int s);
std::string format_nf(const DualGarside& d, const GarsideNF& nf);
nlohmann::json nf_to_json(const DualGarside& d, const GarsideNF& nf);

struct SamecurveReport {
  bool zero_power = false;        // beta has gamma-power 0
  bool append_greedy = false;     // NF(beta sigma_i) is NF(beta) followed by s_i
  bool atom_not_dividing = false; // s_i does not divide the last simple of beta
  GarsideNF beta;
  GarsideNF extended;
  bool all() const { return zero_power && append_greedy && atom_not_dividing; }
  nlohmann::json to_json(const DualGarside& d) const;
};

SamecurveReport samecurve_check(const DualGarside& d, const BraidWord& beta, int i);

}  // namespace burau
