#include "burau/garside.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "burau/rational.hpp"

namespace burau {
namespace {

std::int64_t tits_form(const CoxeterGraph& g, int i, int j) {
  if (i == j) return 2;
  switch (g.label(i, j)) {
    case Label::Two:
      return 0;
    case Label::Three:
      return -1;
    case Label::Infinity:
      return -2;
  }
  return 0;
}

int rational_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Sylvester's criterion on the Tits form; finite type iff positive definite.
bool positive_definite(const CoxeterGraph& g) {
  const int n = g.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = tits_form(g, i + 1, j + 1);
  }
  // Leading minors are the products of the pivots of unpivoted elimination.
  for (int c = 0; c < n; ++c) {
    if (m[c][c].num() <= 0) return false;
    for (int r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return true;
}

std::vector<int> resolve_order(const CoxeterGraph& g, std::vector<int> order) {
  if (order.empty()) {
    for (int i = 1; i <= g.size(); ++i) order.push_back(i);
  }
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < g.size(); ++i) {
    if (static_cast<int>(sorted.size()) != g.size() || sorted[i] != i + 1) {
      throw std::invalid_argument("Coxeter element order must be a permutation of 1..n");
    }
  }
  return order;
}

}  // namespace

IntMatrix coxeter_generator(const CoxeterGraph& g, int i) {
  const int n = g.size();
  if (!g.contains(i)) throw std::out_of_range("generator index out of range");
  IntMatrix m(static_cast<std::size_t>(n) * n, 0);
  for (int k = 0; k < n; ++k) m[k * n + k] = 1;
  for (int j = 1; j <= n; ++j) m[(i - 1) * n + (j - 1)] -= tits_form(g, i, j);
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, int n) {
  IntMatrix out(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      std::int64_t x = a[r * n + k];
      if (x == 0) continue;
      for (int c = 0; c < n; ++c) out[r * n + c] += x * b[k * n + c];
    }
  }
  return out;
}

IntMatrix coxeter_element(const CoxeterGraph& g, const std::vector<int>& order) {
  const int n = g.size();
  IntMatrix m(static_cast<std::size_t>(n) * n, 0);
  for (int k = 0; k < n; ++k) m[k * n + k] = 1;
  for (int i : resolve_order(g, order)) m = multiply(m, coxeter_generator(g, i), n);
  return m;
}

int fixed_space_dimension(const IntMatrix& w, int n) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = w[r * n + c] - (r == c ? 1 : 0);
  }
  return n - rational_rank(std::move(m));
}

std::size_t DualGarside::Hash::operator()(const IntMatrix& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : m) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

DualGarside::DualGarside(const CoxeterGraph& g, std::vector<int> order, std::size_t bound)
    : graph_(g), order_(resolve_order(g, std::move(order))) {
  if (g.has_infinite_label() || !positive_definite(g)) {
    throw NotFiniteType("graph " + (g.name().empty() ? std::string("<file>") : g.name()) +
                        " is not of finite type");
  }
  enumerate_group(bound);
  compute_lengths();
  build_interval();
  build_lifts();
}

void DualGarside::enumerate_group(std::size_t bound) {
  const int n = rank();
  IntMatrix id(static_cast<std::size_t>(n) * n, 0);
  for (int k = 0; k < n; ++k) id[k * n + k] = 1;
  std::vector<IntMatrix> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(coxeter_generator(graph_, i));

  std::vector<IntMatrix> inverse_matrix;
  matrices_.push_back(id);
  inverse_matrix.push_back(id);
  index_.emplace(id, 0);
  for (std::size_t head = 0; head < matrices_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      IntMatrix next = burau::multiply(matrices_[head], gens[i], n);
      if (index_.count(next)) continue;
      if (matrices_.size() >= bound) {
        throw NotFiniteType("Coxeter group enumeration exceeded " + std::to_string(bound) +
                            " elements");
      }
      index_.emplace(next, static_cast<int>(matrices_.size()));
      matrices_.push_back(std::move(next));
      // (w s)^{-1} = s w^{-1}
      inverse_matrix.push_back(burau::multiply(gens[i], inverse_matrix[head], n));
    }
  }
  inverse_.resize(matrices_.size());
  for (std::size_t k = 0; k < matrices_.size(); ++k) inverse_[k] = find(inverse_matrix[k]);
  for (const auto& m : gens) generators_.push_back(find(m));
  gamma_ = find(coxeter_element(graph_, order_));

  // Conjugation closure of the generators.
  std::vector<char> seen(matrices_.size(), 0);
  for (int s : generators_) {
    reflections_.push_back(s);
    seen[s] = 1;
  }
  for (std::size_t head = 0; head < reflections_.size(); ++head) {
    for (int s : generators_) {
      int t = multiply(multiply(s, reflections_[head]), s);
      if (!seen[t]) {
        seen[t] = 1;
        reflections_.push_back(t);
      }
    }
  }
}

int DualGarside::find(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::logic_error("matrix is not a group element");
  return it->second;
}

int DualGarside::multiply(int a, int b) const {
  return find(burau::multiply(matrices_.at(a), matrices_.at(b), rank()));
}

void DualGarside::compute_lengths() {
  length_.assign(matrices_.size(), -1);
  length_[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int t : reflections_) {
      int next = multiply(w, t);
      if (length_[next] < 0) {
        length_[next] = length_[w] + 1;
        queue.push_back(next);
      }
    }
  }
}

int DualGarside::simple_of(int elt) const {
  auto it = simple_index_.find(elt);
  return it == simple_index_.end() ? -1 : it->second;
}

int DualGarside::right_quotient(int a, int z) const {
  int q = quotient_[a * simple_count() + z];
  if (q < 0) throw std::logic_error("right_quotient: divisor does not right-divide");
  return q;
}

int DualGarside::product_if_simple(int z, int y) const {
  return product_[z * simple_count() + y];
}

void DualGarside::build_interval() {
  const int n = rank();
  std::vector<int> members;
  for (int w = 0; w < static_cast<int>(matrices_.size()); ++w) {
    if (length_[w] + length_[multiply(inverse_[w], gamma_)] == n) members.push_back(w);
  }
  std::stable_sort(members.begin(), members.end(),
                   [&](int a, int b) { return length_[a] < length_[b]; });
  simple_elt_ = members;
  for (int s = 0; s < simple_count(); ++s) simple_index_.emplace(simple_elt_[s], s);
  gamma_simple_ = simple_of(gamma_);
  for (int i = 1; i <= n; ++i) atom_.push_back(simple_of(generator(i)));
  for (int t : reflections_) {
    if (int s = simple_of(t); s >= 0) reflection_simple_.push_back(s);
  }

  const int count = simple_count();
  const std::size_t cells = static_cast<std::size_t>(count) * count;
  left_divides_.assign(cells, 0);
  right_divides_.assign(cells, 0);
  quotient_.assign(cells, -1);
  product_.assign(cells, -1);
  gcd_right_.assign(cells, 0);
  for (int a = 0; a < count; ++a) {
    int ea = simple_elt_[a];
    for (int b = 0; b < count; ++b) {
      int eb = simple_elt_[b];
      left_divides_[a * count + b] = length_[ea] + length_[multiply(inverse_[ea], eb)] == length_[eb];
      int rq = multiply(eb, inverse_[ea]);
      if (length_[rq] + length_[ea] == length_[eb]) {
        right_divides_[a * count + b] = 1;
        quotient_[b * count + a] = simple_of(rq);
      }
      int prod = multiply(ea, eb);
      if (length_[prod] == length_[ea] + length_[eb]) product_[a * count + b] = simple_of(prod);
    }
  }
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      int best = 0;
      int ties = 0;
      for (int z = 0; z < count; ++z) {
        if (!divides_right(z, a) || !divides_right(z, b)) continue;
        if (simple_length(z) > simple_length(best)) {
          best = z;
          ties = 0;
        } else if (z != best && simple_length(z) == simple_length(best)) {
          ++ties;
        }
      }
      // Ties at the top would mean [1, gamma] is not a lattice.
      if (ties > 0 && best != 0) throw std::logic_error("right gcd is not unique");
      gcd_right_[a * count + b] = best;
    }
  }
  int gamma_inv = inverse_[gamma_];
  for (int s = 0; s < count; ++s) {
    int e = simple_elt_[s];
    int p = simple_of(multiply(multiply(gamma_, e), gamma_inv));
    int pinv = simple_of(multiply(multiply(gamma_inv, e), gamma_));
    int comp = simple_of(multiply(gamma_, inverse_[e]));
    if (p < 0 || pinv < 0 || comp < 0) throw std::logic_error("interval not closed under gamma");
    phi_.push_back(p);
    phi_inv_.push_back(pinv);
    left_complement_.push_back(comp);
  }
}

void DualGarside::build_lifts() {
  const int n = rank();
  // Hurwitz orbit of the reduced decomposition (s_{o1}, ..., s_{on}) of
  // gamma, carrying braid lifts along; every reflection below gamma shows up.
  struct State {
    std::vector<int> refl;
    std::vector<BraidWord> lift;
  };
  State start;
  for (int i : order_) {
    start.refl.push_back(generator(i));
    start.lift.push_back({i});
  }
  std::map<std::vector<int>, bool> visited;
  std::deque<State> queue;
  auto record = [&](const State& s) {
    for (int k = 0; k < n; ++k) {
      auto it = reflection_lift_.find(s.refl[k]);
      if (it == reflection_lift_.end() || s.lift[k].size() < it->second.size()) {
        reflection_lift_[s.refl[k]] = s.lift[k];
      }
    }
  };
  visited[start.refl] = true;
  record(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    State cur = std::move(queue.front());
    queue.pop_front();
    for (int k = 0; k + 1 < n; ++k) {
      for (int dir : {1, -1}) {
        State next = cur;
        int a = cur.refl[k], b = cur.refl[k + 1];
        const BraidWord& la = cur.lift[k];
        const BraidWord& lb = cur.lift[k + 1];
        if (dir == 1) {
          next.refl[k] = multiply(multiply(a, b), a);  // a b a^{-1}, a an involution
          next.refl[k + 1] = a;
          next.lift[k] = free_reduce(concat(concat(la, lb), burau::inverse(la)));
          next.lift[k + 1] = la;
        } else {
          next.refl[k] = b;
          next.refl[k + 1] = multiply(multiply(b, a), b);
          next.lift[k] = lb;
          next.lift[k + 1] = free_reduce(concat(concat(burau::inverse(lb), la), lb));
        }
        if (visited.count(next.refl)) continue;
        visited[next.refl] = true;
        record(next);
        queue.push_back(std::move(next));
      }
    }
  }
  for (int s : reflection_simple_) {
    if (!reflection_lift_.count(simple_elt_[s])) {
      throw std::logic_error("reflection below gamma missing from the Hurwitz orbit");
    }
  }
  simple_lift_.resize(simple_count());
  for (int s = 0; s < simple_count(); ++s) {
    int w = simple_elt_[s];
    BraidWord word;
    while (length_[w] > 0) {
      bool peeled = false;
      for (int t : reflections_) {
        int rest = multiply(t, w);  // t^{-1} w
        if (length_[rest] == length_[w] - 1) {
          const BraidWord& lt = reflection_lift_.at(t);
          word.insert(word.end(), lt.begin(), lt.end());
          w = rest;
          peeled = true;
          break;
        }
      }
      if (!peeled) throw std::logic_error("no reflection peels off a simple");
    }
    simple_lift_[s] = word;
  }
}

const BraidWord& DualGarside::reflection_lift(int reflection_elt) const {
  auto it = reflection_lift_.find(reflection_elt);
  if (it == reflection_lift_.end()) throw std::out_of_range("not a reflection below gamma");
  return it->second;
}

std::vector<int> DualGarside::atoms_below(int s) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < reflections_.size(); ++k) {
    int t = simple_of(reflections_[k]);
    if (t >= 0 && divides(t, s)) out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

namespace {

void normalize(const DualGarside& d, GarsideNF& nf) {
  const int id = d.identity_simple();
  bool changed = true;
  while (changed) {
    changed = false;
    auto& s = nf.simples;
    for (std::size_t j = s.size(); j-- > 1;) {
      int x = s[j - 1], y = s[j];
      int z = d.gcd_right(x, d.left_complement(y));
      if (z == id) continue;
      s[j - 1] = d.right_quotient(x, z);
      s[j] = d.product_if_simple(z, y);
      if (s[j] < 0) throw std::logic_error("normal form step left the interval");
      changed = true;
    }
    std::size_t before = s.size();
    s.erase(std::remove(s.begin(), s.end(), id), s.end());
    changed = changed || s.size() != before;
    while (!s.empty() && s.back() == d.gamma_simple()) {
      s.pop_back();
      ++nf.k;
      for (int& x : s) x = d.phi_inverse(x);
      changed = true;
    }
  }
}

}  // namespace

void append_simple(const DualGarside& d, GarsideNF& nf, int s) {
  if (s < 0 || s >= d.simple_count()) throw std::out_of_range("simple id out of range");
  if (s == d.identity_simple()) return;
  nf.simples.push_back(s);
  normalize(d, nf);
}

void append_letter(const DualGarside& d, GarsideNF& nf, int letter) {
  int i = letter < 0 ? -letter : letter;
  if (letter == 0 || !d.graph().contains(i)) {
    throw std::out_of_range("letter " + std::to_string(letter) + " outside the graph");
  }
  if (letter > 0) {
    append_simple(d, nf, d.atom(i));
    return;
  }
  // X s_i^{-1} = gamma^{-1} phi(X) (gamma s_i^{-1})
  for (int& x : nf.simples) x = d.phi(x);
  --nf.k;
  append_simple(d, nf, d.left_complement(d.atom(i)));
}

GarsideNF word_to_nf(const DualGarside& d, const BraidWord& w) {
  validate_word(d.graph(), w);
  GarsideNF nf;
  for (int letter : w) append_letter(d, nf, letter);
  return nf;
}

BraidWord nf_to_word(const DualGarside& d, const GarsideNF& nf) {
  BraidWord out;
  BraidWord g = d.gamma_word();
  BraidWord block = nf.k >= 0 ? g : inverse(g);
  for (int r = 0; r < (nf.k >= 0 ? nf.k : -nf.k); ++r) out = concat(out, block);
  for (int s : nf.simples) out = concat(out, d.simple_lift(s));
  return out;
}

bool is_trivial_braid(const DualGarside& d, const BraidWord& w) {
  GarsideNF nf = word_to_nf(d, w);
  return nf.k == 0 && nf.simples.empty();
}

bool is_right_greedy(const DualGarside& d, const std::vector<int>& simples) {
  for (std::size_t j = 1; j < simples.size(); ++j) {
    if (d.gcd_right(simples[j - 1], d.left_complement(simples[j])) != d.identity_simple()) {
      return false;
    }
  }
  return true;
}

std::string format_simple(const DualGarside& d, int s) {
  std::string out = "{";
  auto atoms = d.atoms_below(s);
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(atoms[k]);
  }
  return out + "}" + format_word(d.simple_lift(s));
}

std::string format_nf(const DualGarside& d, const GarsideNF& nf) {
  std::string out = "γ^" + std::to_string(nf.k) + " · [";
  for (std::size_t j = 0; j < nf.simples.size(); ++j) {
    if (j) out += " | ";
    out += format_simple(d, nf.simples[j]);
  }
  return out + "]";
}

nlohmann::json nf_to_json(const DualGarside& d, const GarsideNF& nf) {
  nlohmann::json simples = nlohmann::json::array();
  for (int s : nf.simples) {
    simples.push_back({{"atoms", d.atoms_below(s)}, {"lift", d.simple_lift(s)}});
  }
  return {{"gamma_power", nf.k}, {"simples", simples}, {"text", format_nf(d, nf)}};
}

nlohmann::json SamecurveReport::to_json(const DualGarside& d) const {
  return {{"zero_gamma_power", zero_power},
          {"append_stays_greedy", append_greedy},
          {"atom_does_not_divide_last", atom_not_dividing},
          {"all", all()},
          {"beta_nf", nf_to_json(d, beta)},
          {"extended_nf", nf_to_json(d, extended)}};
}

SamecurveReport samecurve_check(const DualGarside& d, const BraidWord& beta, int i) {
  if (!d.graph().contains(i)) throw std::out_of_range("vertex outside the graph");
  SamecurveReport report;
  report.beta = word_to_nf(d, beta);
  report.extended = report.beta;
  append_letter(d, report.extended, i);
  report.zero_power = report.beta.k == 0;
  GarsideNF naive = report.beta;
  naive.simples.push_back(d.atom(i));
  report.append_greedy = report.extended == naive;
  report.atom_not_dividing =
      !report.beta.simples.empty() && !d.divides(d.atom(i), report.beta.simples.back());
  return report;
}

}  // namespace burau
