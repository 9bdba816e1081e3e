#include "burau/burau.hpp"

#include <algorithm>
#include <sstream>

namespace burau {

BurauVector::BurauVector(CoefficientRing ring, int n)
    : ring_(ring), coords_(static_cast<std::size_t>(n), LaurentPoly(ring)) {}

BurauVector BurauVector::basis(CoefficientRing ring, int n, int i) {
  BurauVector v(ring, n);
  v[i] = LaurentPoly::constant(ring, 1);
  return v;
}

BurauVector& BurauVector::operator+=(const BurauVector& other) {
  if (other.size() != size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

BurauVector& BurauVector::operator-=(const BurauVector& other) {
  if (other.size() != size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

BurauVector BurauVector::scaled(const LaurentPoly& c) const {
  BurauVector out = *this;
  for (auto& x : out.coords_) x = c * x;
  return out;
}

bool BurauVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

BurauVector BurauVector::reduce_mod(std::int64_t p) const {
  BurauVector out(CoefficientRing::integers_mod(p), size());
  for (std::size_t k = 0; k < coords_.size(); ++k) out.coords_[k] = coords_[k].reduce_mod(p);
  return out;
}

std::vector<Rational> BurauVector::evaluate(const Rational& q0) const {
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.evaluate(q0));
  return out;
}

std::string BurauVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) out += ", ";
    out += coords_[k].to_string();
  }
  return out + ")";
}

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    if (c.is_integer()) {
      terms.push_back({e, c.num()});
    } else {
      terms.push_back({e, c.to_string()});
    }
  }
  return terms;
}

nlohmann::json BurauVector::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : coords_) out.push_back(poly_to_json(c));
  return out;
}

BurauMatrix::BurauMatrix(CoefficientRing ring, int n)
    : ring_(ring), n_(n), entries_(static_cast<std::size_t>(n) * n, LaurentPoly(ring)) {}

BurauMatrix BurauMatrix::identity(CoefficientRing ring, int n) {
  BurauMatrix m(ring, n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = LaurentPoly::constant(ring, 1);
  return m;
}

BurauVector BurauMatrix::column(int c) const {
  BurauVector v(ring_, n_);
  for (int r = 1; r <= n_; ++r) v[r] = at(r, c);
  return v;
}

BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  BurauMatrix out(a.ring_, a.n_);
  for (int r = 1; r <= a.n_; ++r) {
    for (int c = 1; c <= a.n_; ++c) {
      LaurentPoly sum(a.ring_);
      for (int k = 1; k <= a.n_; ++k) sum += a.at(r, k) * b.at(k, c);
      out.at(r, c) = std::move(sum);
    }
  }
  return out;
}

BurauVector operator*(const BurauMatrix& a, const BurauVector& v) {
  if (a.n_ != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
  BurauVector out(a.ring_, a.n_);
  for (int r = 1; r <= a.n_; ++r) {
    LaurentPoly sum(a.ring_);
    for (int k = 1; k <= a.n_; ++k) sum += a.at(r, k) * v[k];
    out[r] = std::move(sum);
  }
  return out;
}

bool BurauMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

BurauMatrix BurauMatrix::reduce_mod(std::int64_t p) const {
  BurauMatrix out(CoefficientRing::integers_mod(p), n_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].reduce_mod(p);
  return out;
}

std::string BurauMatrix::to_string() const {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& e : entries_) {
    cells.push_back(e.to_string());
    width = std::max(width, cells.back().size());
  }
  std::ostringstream out;
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      const std::string& s = cells[r * n_ + c];
      if (c) out << "  ";
      out << std::string(width - s.size(), ' ') << s;
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json BurauMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 1; r <= n_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 1; c <= n_; ++c) row.push_back(poly_to_json(at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

namespace {

int order_rank(const PairingForm& form, int n, int vertex) {
  if (form.order.empty()) return vertex;
  if (static_cast<int>(form.order.size()) != n) {
    throw std::invalid_argument("dual vertex order must list all " + std::to_string(n) + " vertices");
  }
  auto it = std::find(form.order.begin(), form.order.end(), vertex);
  if (it == form.order.end()) {
    throw std::invalid_argument("vertex " + std::to_string(vertex) + " missing from dual order");
  }
  return static_cast<int>(it - form.order.begin());
}

void check_vertex(const CoxeterGraph& g, int i) {
  if (!g.contains(i)) {
    throw std::out_of_range("vertex " + std::to_string(i) + " outside 1.." + std::to_string(g.size()));
  }
}

// Row of the matrix (M - I) for sigma_i^{sign}: the image of alpha_j gains
// coefficient row[j] on alpha_i and nothing else changes.
std::vector<LaurentPoly> letter_row(const CoxeterGraph& g, int letter, const PairingForm& form,
                                    const CoefficientRing& ring) {
  int i = letter < 0 ? -letter : letter;
  check_vertex(g, i);
  int shift = 0;
  if (letter < 0) shift = form.variant == FormVariant::Standard ? -2 : -1;
  std::vector<LaurentPoly> row;
  row.reserve(g.size());
  for (int j = 1; j <= g.size(); ++j) {
    row.push_back(-basis_pairing(g, i, j, form, ring).shifted(shift));
  }
  return row;
}

}  // namespace

LaurentPoly basis_pairing(const CoxeterGraph& g, int i, int j, const PairingForm& form,
                          const CoefficientRing& ring) {
  check_vertex(g, i);
  check_vertex(g, j);
  auto mono = [&](int c, int e) { return LaurentPoly::monomial(ring, c, e); };
  if (form.variant == FormVariant::Standard) {
    if (i == j) return mono(1, 0) + mono(1, 2);
    switch (g.label(i, j)) {
      case Label::Two:
        return LaurentPoly(ring);
      case Label::Three:
        return mono(1, 1);
      case Label::Infinity:
        return mono(2, 1);
    }
  }
  if (g.has_infinite_label()) throw std::invalid_argument("dual form needs labels in {2,3}");
  if (i == j) return mono(1, 0) + mono(1, 1);
  if (!g.adjacent(i, j)) return LaurentPoly(ring);
  return order_rank(form, g.size(), i) < order_rank(form, g.size(), j) ? mono(1, 0) : mono(1, 1);
}

LaurentPoly pairing(const CoxeterGraph& g, const BurauVector& x, const BurauVector& y,
                    const PairingForm& form) {
  if (x.size() != g.size() || y.size() != g.size()) {
    throw std::invalid_argument("vector size does not match the graph");
  }
  if (!(x.ring() == y.ring())) throw RingMismatch("pairing across different rings");
  LaurentPoly total(x.ring());
  for (int i = 1; i <= g.size(); ++i) {
    if (x[i].is_zero()) continue;
    LaurentPoly xi = x[i].bar();
    for (int j = 1; j <= g.size(); ++j) {
      if (y[j].is_zero()) continue;
      LaurentPoly t = basis_pairing(g, i, j, form, x.ring());
      if (t.is_zero()) continue;
      total += xi * t * y[j];
    }
  }
  return total;
}

void apply_letter(const CoxeterGraph& g, int letter, BurauVector& x, const PairingForm& form) {
  auto row = letter_row(g, letter, form, x.ring());
  int i = letter < 0 ? -letter : letter;
  LaurentPoly delta(x.ring());
  for (int j = 1; j <= g.size(); ++j) {
    if (!row[j - 1].is_zero() && !x[j].is_zero()) delta += row[j - 1] * x[j];
  }
  x[i] += delta;
}

void apply_letter(const CoxeterGraph& g, int letter, BurauMatrix& x, const PairingForm& form) {
  auto row = letter_row(g, letter, form, x.ring());
  int i = letter < 0 ? -letter : letter;
  const int n = g.size();
  std::vector<LaurentPoly> delta(n, LaurentPoly(x.ring()));
  for (int j = 1; j <= n; ++j) {
    if (row[j - 1].is_zero()) continue;
    for (int c = 1; c <= n; ++c) {
      if (!x.at(j, c).is_zero()) delta[c - 1] += row[j - 1] * x.at(j, c);
    }
  }
  for (int c = 1; c <= n; ++c) x.at(i, c) += delta[c - 1];
}

BurauMatrix generator_matrix(const CoxeterGraph& g, int i, int sign, const PairingForm& form,
                             const CoefficientRing& ring) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  BurauMatrix m = BurauMatrix::identity(ring, g.size());
  apply_letter(g, sign * i, m, form);
  return m;
}

BurauVector act(const CoxeterGraph& g, const BraidWord& w, BurauVector x, const PairingForm& form) {
  validate_word(g, w);
  for (auto it = w.rbegin(); it != w.rend(); ++it) apply_letter(g, *it, x, form);
  return x;
}

BurauMatrix act(const CoxeterGraph& g, const BraidWord& w, BurauMatrix x, const PairingForm& form) {
  validate_word(g, w);
  for (auto it = w.rbegin(); it != w.rend(); ++it) apply_letter(g, *it, x, form);
  return x;
}

BurauMatrix word_matrix(const CoxeterGraph& g, const BraidWord& w, const PairingForm& form,
                        const CoefficientRing& ring) {
  return act(g, w, BurauMatrix::identity(ring, g.size()), form);
}

int spread(const BurauMatrix& m) {
  std::optional<int> lo, hi;
  for (int r = 1; r <= m.size(); ++r) {
    for (int c = 1; c <= m.size(); ++c) {
      auto span = m.at(r, c).degree_span();
      if (!span) continue;
      lo = lo ? std::min(*lo, span->first) : span->first;
      hi = hi ? std::max(*hi, span->second) : span->second;
    }
  }
  if (!lo) throw std::domain_error("spread of the zero matrix is undefined");
  return *hi - *lo;
}

bool is_identity(const BurauMatrix& m) {
  return m == BurauMatrix::identity(m.ring(), m.size());
}

}  // namespace burau
