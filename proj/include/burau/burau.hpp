#pragma once

#include <string>
#include <vector>

#include "burau/coxeter.hpp"
#include "burau/ring.hpp"
#include "json.hpp"

namespace burau {

enum class FormVariant { Standard, Dual };

/// Which pairing (and hence which Burau action) to use.
///
/// The dual form depends on a total order of the vertices; `order` lists the
/// vertices from first to last (default 1 < 2 < ... < n, matching
/// gamma = s1 s2 ... sn).
struct PairingForm {
  FormVariant variant = FormVariant::Standard;
  std::vector<int> order;

  static PairingForm standard() { return {}; }
  static PairingForm dual(std::vector<int> order = {}) {
    return {FormVariant::Dual, std::move(order)};
  }
  std::string name() const { return variant == FormVariant::Standard ? "standard" : "dual"; }
};

/// Element of V_q: coordinate i-1 is the coefficient of alpha_i.
class BurauVector {
 public:
  BurauVector(CoefficientRing ring, int n);
  static BurauVector basis(CoefficientRing ring, int n, int i);

  const CoefficientRing& ring() const { return ring_; }
  int size() const { return static_cast<int>(coords_.size()); }
  const LaurentPoly& operator[](int i) const { return coords_.at(i - 1); }
  LaurentPoly& operator[](int i) { return coords_.at(i - 1); }
  const std::vector<LaurentPoly>& coords() const { return coords_; }

  BurauVector& operator+=(const BurauVector& other);
  BurauVector& operator-=(const BurauVector& other);
  friend BurauVector operator+(BurauVector a, const BurauVector& b) { return a += b; }
  friend BurauVector operator-(BurauVector a, const BurauVector& b) { return a -= b; }
  BurauVector scaled(const LaurentPoly& c) const;
  friend bool operator==(const BurauVector&, const BurauVector&) = default;

  bool is_zero() const;
  BurauVector reduce_mod(std::int64_t p) const;
  /// Coordinatewise evaluation at q = q0.
  std::vector<Rational> evaluate(const Rational& q0) const;
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  CoefficientRing ring_;
  std::vector<LaurentPoly> coords_;
};

/// n x n matrix over the Laurent ring; column j is the image of alpha_j.
class BurauMatrix {
 public:
  BurauMatrix(CoefficientRing ring, int n);
  static BurauMatrix identity(CoefficientRing ring, int n);

  const CoefficientRing& ring() const { return ring_; }
  int size() const { return n_; }
  /// 1-based (row, column).
  const LaurentPoly& at(int r, int c) const { return entries_.at((r - 1) * n_ + (c - 1)); }
  LaurentPoly& at(int r, int c) { return entries_.at((r - 1) * n_ + (c - 1)); }
  BurauVector column(int c) const;

  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b);
  friend BurauVector operator*(const BurauMatrix& a, const BurauVector& v);
  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;

  bool is_zero() const;
  BurauMatrix reduce_mod(std::int64_t p) const;
  /// Row-major grid of polynomial strings.
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  CoefficientRing ring_;
  int n_;
  std::vector<LaurentPoly> entries_;
};

/// Table value <alpha_i, alpha_j> for the chosen form.
LaurentPoly basis_pairing(const CoxeterGraph& g, int i, int j, const PairingForm& form,
                          const CoefficientRing& ring);

/// Sesquilinear pairing: antilinear (q -> q^{-1}) in x, linear in y.
LaurentPoly pairing(const CoxeterGraph& g, const BurauVector& x, const BurauVector& y,
                    const PairingForm& form);

/// Matrix of sigma_i^{sign}.
BurauMatrix generator_matrix(const CoxeterGraph& g, int i, int sign, const PairingForm& form,
                             const CoefficientRing& ring);

/// Left action of the word: act(w1 ... wk, x) = M(w1) ... M(wk) x.
BurauVector act(const CoxeterGraph& g, const BraidWord& w, BurauVector x,
                const PairingForm& form);
BurauMatrix act(const CoxeterGraph& g, const BraidWord& w, BurauMatrix x,
                const PairingForm& form);
/// Matrix of the word itself.
BurauMatrix word_matrix(const CoxeterGraph& g, const BraidWord& w, const PairingForm& form,
                        const CoefficientRing& ring);

/// Applies one letter in place (left multiplication by its matrix).
void apply_letter(const CoxeterGraph& g, int letter, BurauVector& x, const PairingForm& form);
void apply_letter(const CoxeterGraph& g, int letter, BurauMatrix& x, const PairingForm& form);

/// Top q-degree minus bottom q-degree over all entries. Throws on the zero matrix.
int spread(const BurauMatrix& m);
bool is_identity(const BurauMatrix& m);

nlohmann::json poly_to_json(const LaurentPoly& p);

}  // namespace burau
