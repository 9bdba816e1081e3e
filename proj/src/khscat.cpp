#include "burau/khscat.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace burau {

ZigzagAlgebra::ZigzagAlgebra(CoxeterGraph g) : graph_(std::move(g)) {
  if (graph_.size() < 2) throw std::invalid_argument("zigzag algebra needs at least two vertices");
  if (graph_.has_infinite_label()) {
    throw std::invalid_argument("zigzag algebra needs a simply-laced graph (labels 2, 3)");
  }
}

std::optional<ZigzagAlgebra::Path> ZigzagAlgebra::basis_path(int from, int to, int degree) const {
  if (!graph_.contains(from) || !graph_.contains(to)) return std::nullopt;
  if (from == to) {
    if (degree == 0 || degree == 2) return Path{from, to, degree};
    return std::nullopt;
  }
  if (degree == 1 && graph_.adjacent(from, to)) return Path{from, to, 1};
  return std::nullopt;
}

std::vector<ZigzagAlgebra::Path> ZigzagAlgebra::paths(int from, int to) const {
  std::vector<Path> out;
  for (int d = 0; d <= 2; ++d) {
    if (auto p = basis_path(from, to, d)) out.push_back(*p);
  }
  return out;
}

std::optional<ZigzagAlgebra::Path> ZigzagAlgebra::compose(const Path& first,
                                                          const Path& second) const {
  if (first.to != second.from) return std::nullopt;
  if (first.degree == 0) return second;
  if (second.degree == 0) return first;
  // Two arrows there and back give the loop at the start; everything else
  // of positive degree multiplies to zero.
  if (first.degree == 1 && second.degree == 1 && first.from == second.to) {
    return Path{first.from, first.from, 2};
  }
  return std::nullopt;
}

int ZigzagAlgebra::dimension() const {
  return 2 * graph_.size() + 2 * static_cast<int>(graph_.edges().size());
}

std::string ZigzagAlgebra::render(const Path& p) const {
  if (p.degree == 0) return "e" + std::to_string(p.from);
  if (p.degree == 2) return "X" + std::to_string(p.from);
  return "(" + std::to_string(p.to) + "|" + std::to_string(p.from) + ")";
}

AlgebraPtr make_zigzag(const CoxeterGraph& g) { return std::make_shared<const ZigzagAlgebra>(g); }

ProjComplex::ProjComplex(AlgebraPtr algebra, std::vector<Summand> summands, Entries entries)
    : algebra_(std::move(algebra)), summands_(std::move(summands)), entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    it = it->second == 0 ? entries_.erase(it) : std::next(it);
  }
}

std::optional<ZigzagAlgebra::Path> ProjComplex::entry_path(int src, int dst) const {
  const Summand& s = summands_.at(src);
  const Summand& t = summands_.at(dst);
  if (t.hdeg != s.hdeg + 1) return std::nullopt;
  return algebra_->basis_path(s.vertex, t.vertex, s.shift - t.shift);
}

std::string ProjComplex::check() const {
  std::vector<std::vector<std::pair<int, mpq_class>>> out(summands_.size());
  for (const auto& [key, c] : entries_) {
    auto [src, dst] = key;
    if (src < 0 || dst < 0 || src >= size() || dst >= size()) return "entry index out of range";
    if (!entry_path(src, dst)) {
      return "entry " + std::to_string(src) + " -> " + std::to_string(dst) +
             " has no basis path of the forced degree";
    }
    out[src].emplace_back(dst, c);
  }
  for (int a = 0; a < size(); ++a) {
    std::map<int, mpq_class> square;
    for (const auto& [b, c1] : out[a]) {
      auto p1 = *entry_path(a, b);
      for (const auto& [c, c2] : out[b]) {
        if (algebra_->compose(p1, *entry_path(b, c))) square[c] += c1 * c2;
      }
    }
    for (const auto& [c, v] : square) {
      if (v != 0) return "d^2 != 0 from " + std::to_string(a) + " to " + std::to_string(c);
    }
  }
  return {};
}

std::string ProjComplex::dump() const {
  std::ostringstream out;
  for (const auto& s : summands_) {
    out << "P" << s.vertex << "{" << s.shift << "}[" << s.hdeg << "]\n";
  }
  for (const auto& [key, c] : entries_) {
    auto path = entry_path(key.first, key.second);
    std::string element = path ? algebra_->render(*path) : "?";
    out << key.first << " -> " << key.second << " : ";
    if (c != 1) out << c.get_str() << "*";
    out << element << "\n";
  }
  return out.str();
}

nlohmann::json ProjComplex::to_json() const {
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& s : summands_) {
    summands.push_back({{"vertex", s.vertex}, {"shift", s.shift}, {"hdeg", s.hdeg}});
  }
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, c] : entries_) {
    auto path = entry_path(key.first, key.second);
    entries.push_back({{"src", key.first},
                       {"dst", key.second},
                       {"scalar", c.get_str()},
                       {"element", path ? algebra_->render(*path) : "?"}});
  }
  return {{"summands", summands}, {"differential", entries}};
}

ProjComplex projective(const AlgebraPtr& algebra, int i, int shift, int hdeg) {
  if (!algebra->graph().contains(i)) {
    throw std::out_of_range("vertex " + std::to_string(i) + " outside the graph");
  }
  return ProjComplex(algebra, {Summand{i, shift, hdeg}}, {});
}

ProjComplex direct_sum(const ProjComplex& a, const ProjComplex& b) {
  if (a.algebra() != b.algebra() && !(a.algebra()->graph() == b.algebra()->graph())) {
    throw std::invalid_argument("direct sum over different algebras");
  }
  std::vector<Summand> summands = a.summands();
  summands.insert(summands.end(), b.summands().begin(), b.summands().end());
  ProjComplex::Entries entries = a.entries();
  for (const auto& [key, c] : b.entries()) {
    entries.emplace(std::make_pair(key.first + a.size(), key.second + a.size()), c);
  }
  return ProjComplex(a.algebra(), std::move(summands), std::move(entries));
}

namespace {

void require_same_algebra(const ProjComplex& x, const ProjComplex& y) {
  if (x.algebra() != y.algebra() && !(x.algebra()->graph() == y.algebra()->graph())) {
    throw std::invalid_argument("complexes over different algebras");
  }
}

// Adjacency view used while building cones.
std::vector<std::vector<std::pair<int, mpq_class>>> out_lists(const ProjComplex& x) {
  std::vector<std::vector<std::pair<int, mpq_class>>> out(x.size());
  for (const auto& [key, c] : x.entries()) out[key.first].emplace_back(key.second, c);
  return out;
}

// Cone(P_i (x) Hom(P_i, Y) -> Y): for every summand y and every path
// f : i -> v(y) a new summand P_i{deg f + shift y} one step left of y.
ProjComplex positive_twist(const ProjComplex& y, int i) {
  const ZigzagAlgebra& alg = *y.algebra();
  std::vector<Summand> summands = y.summands();
  ProjComplex::Entries entries = y.entries();
  // extra[y] lists (path, new summand index)
  std::vector<std::vector<std::pair<ZigzagAlgebra::Path, int>>> extra(y.size());
  for (int k = 0; k < y.size(); ++k) {
    const Summand& s = y.summands()[k];
    for (const auto& f : alg.paths(i, s.vertex)) {
      int idx = static_cast<int>(summands.size());
      summands.push_back(Summand{i, f.degree + s.shift, s.hdeg - 1});
      extra[k].emplace_back(f, idx);
      entries[{idx, k}] = 1;
    }
  }
  auto out = out_lists(y);
  for (int k = 0; k < y.size(); ++k) {
    for (const auto& [k2, c] : out[k]) {
      auto pi = *y.entry_path(k, k2);
      for (const auto& [f, idx] : extra[k]) {
        auto composite = alg.compose(f, pi);
        if (!composite) continue;
        for (const auto& [f2, idx2] : extra[k2]) {
          if (f2 == *composite) entries[{idx, idx2}] -= c;
        }
      }
    }
  }
  return ProjComplex(y.algebra(), std::move(summands), std::move(entries));
}

// Cone(Y -> P_i (x) Hom(Y, P_i)^*)[-1]: for every summand y and every path
// f : v(y) -> i a new summand P_i{shift y - deg f} one step right of y.
ProjComplex negative_twist(const ProjComplex& y, int i) {
  const ZigzagAlgebra& alg = *y.algebra();
  std::vector<Summand> summands = y.summands();
  ProjComplex::Entries entries = y.entries();
  std::vector<std::vector<std::pair<ZigzagAlgebra::Path, int>>> extra(y.size());
  for (int k = 0; k < y.size(); ++k) {
    const Summand& s = y.summands()[k];
    for (const auto& f : alg.paths(s.vertex, i)) {
      int idx = static_cast<int>(summands.size());
      summands.push_back(Summand{i, s.shift - f.degree, s.hdeg + 1});
      extra[k].emplace_back(f, idx);
      entries[{k, idx}] = 1;
    }
  }
  auto out = out_lists(y);
  for (int k = 0; k < y.size(); ++k) {
    for (const auto& [k2, c] : out[k]) {
      auto pi = *y.entry_path(k, k2);
      for (const auto& [f2, idx2] : extra[k2]) {
        auto composite = alg.compose(pi, f2);
        if (!composite) continue;
        for (const auto& [f, idx] : extra[k]) {
          if (f == *composite) entries[{idx, idx2}] -= c;
        }
      }
    }
  }
  return ProjComplex(y.algebra(), std::move(summands), std::move(entries));
}

}  // namespace

ProjComplex apply_twist(const ProjComplex& x, int i, int sign) {
  if (!x.algebra()->graph().contains(i)) {
    throw std::out_of_range("twist vertex " + std::to_string(i) + " outside the graph");
  }
  if (sign == 1) return minimize(positive_twist(x, i));
  if (sign == -1) return minimize(negative_twist(x, i));
  throw std::invalid_argument("twist sign must be +1 or -1");
}

ProjComplex act_complex(const BraidWord& w, const ProjComplex& x) {
  validate_word(x.algebra()->graph(), w);
  ProjComplex current = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    current = apply_twist(current, *it < 0 ? -*it : *it, *it < 0 ? -1 : 1);
  }
  return current;
}

ProjComplex minimize(const ProjComplex& x) {
  const ZigzagAlgebra& alg = *x.algebra();
  const auto& s = x.summands();
  const int n = x.size();
  std::vector<std::map<int, mpq_class>> out(n), in(n);
  for (const auto& [key, c] : x.entries()) {
    out[key.first][key.second] = c;
    in[key.second][key.first] = c;
  }
  std::vector<bool> alive(n, true);

  auto find_pivot = [&](int& b1, int& b2) {
    for (int a = 0; a < n; ++a) {
      if (!alive[a]) continue;
      for (const auto& [b, c] : out[a]) {
        if (s[a].vertex == s[b].vertex && s[a].shift == s[b].shift) {
          b1 = a;
          b2 = b;
          return true;
        }
      }
    }
    return false;
  };

  int b1 = 0, b2 = 0;
  while (find_pivot(b1, b2)) {
    mpq_class pivot = out[b1][b2];
    std::vector<std::pair<int, mpq_class>> xs, ys;
    for (const auto& [src, c] : in[b2]) {
      if (src != b1) xs.emplace_back(src, c);
    }
    for (const auto& [dst, c] : out[b1]) {
      if (dst != b2) ys.emplace_back(dst, c);
    }
    for (const auto& [src, delta] : xs) {
      auto p_delta = alg.basis_path(s[src].vertex, s[b2].vertex, s[src].shift - s[b2].shift);
      for (const auto& [dst, gamma] : ys) {
        auto p_gamma = alg.basis_path(s[b1].vertex, s[dst].vertex, s[b1].shift - s[dst].shift);
        if (!alg.compose(*p_delta, *p_gamma)) continue;
        mpq_class value = out[src][dst] - gamma * delta / pivot;
        if (value == 0) {
          out[src].erase(dst);
          in[dst].erase(src);
        } else {
          out[src][dst] = value;
          in[dst][src] = value;
        }
      }
    }
    for (int b : {b1, b2}) {
      for (const auto& [dst, c] : out[b]) in[dst].erase(b);
      for (const auto& [src, c] : in[b]) out[src].erase(b);
      out[b].clear();
      in[b].clear();
      alive[b] = false;
    }
  }

  std::vector<int> index(n, -1);
  std::vector<Summand> summands;
  for (int a = 0; a < n; ++a) {
    if (alive[a]) {
      index[a] = static_cast<int>(summands.size());
      summands.push_back(s[a]);
    }
  }
  ProjComplex::Entries entries;
  for (int a = 0; a < n; ++a) {
    if (!alive[a]) continue;
    for (const auto& [b, c] : out[a]) entries[{index[a], index[b]}] = c;
  }
  return ProjComplex(x.algebra(), std::move(summands), std::move(entries));
}

std::size_t rational_rank(std::vector<std::map<int, mpq_class>> rows) {
  std::map<int, std::map<int, mpq_class>> pivots;  // leading column -> monic row
  for (auto& row : rows) {
    while (!row.empty()) {
      auto [col, lead] = *row.begin();
      auto it = pivots.find(col);
      if (it == pivots.end()) {
        mpq_class inv = 1 / lead;
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(col, std::move(row));
        break;
      }
      mpq_class factor = lead;
      for (const auto& [c, v] : it->second) {
        mpq_class updated = row[c] - factor * v;
        if (updated == 0) {
          row.erase(c);
        } else {
          row[c] = updated;
        }
      }
    }
  }
  return pivots.size();
}

HomTable hom_table(const ProjComplex& x, const ProjComplex& y) {
  require_same_algebra(x, y);
  const ZigzagAlgebra& alg = *x.algebra();
  const auto& xs = x.summands();
  const auto& ys = y.summands();

  struct Basis {
    int a;  // summand of x
    int b;  // summand of y
    ZigzagAlgebra::Path path;
  };
  std::vector<Basis> basis;
  std::map<std::pair<int, int>, std::vector<int>> cells;  // (g, h) -> basis indices
  std::map<std::tuple<int, int, int>, int> lookup;        // (a, b, degree) -> index
  for (int a = 0; a < x.size(); ++a) {
    for (int b = 0; b < y.size(); ++b) {
      for (const auto& p : alg.paths(xs[a].vertex, ys[b].vertex)) {
        int g = p.degree + ys[b].shift - xs[a].shift;
        int h = ys[b].hdeg - xs[a].hdeg;
        int idx = static_cast<int>(basis.size());
        basis.push_back({a, b, p});
        cells[{g, h}].push_back(idx);
        lookup[{a, b, p.degree}] = idx;
      }
    }
  }
  if (basis.empty()) return {};

  std::vector<std::vector<std::pair<int, mpq_class>>> x_in(x.size()), y_out(y.size());
  for (const auto& [key, c] : x.entries()) x_in[key.second].emplace_back(key.first, c);
  for (const auto& [key, c] : y.entries()) y_out[key.first].emplace_back(key.second, c);

  // D(f) = d_Y o f - (-1)^h f o d_X, as a sparse row over basis indices.
  auto differential = [&](int idx, int h) {
    std::map<int, mpq_class> row;
    const Basis& f = basis[idx];
    for (const auto& [b2, c] : y_out[f.b]) {
      auto composite = alg.compose(f.path, *y.entry_path(f.b, b2));
      if (!composite) continue;
      row[lookup.at({f.a, b2, composite->degree})] += c;
    }
    int sign = (h % 2 == 0) ? -1 : 1;
    for (const auto& [a0, c] : x_in[f.a]) {
      auto composite = alg.compose(*x.entry_path(a0, f.a), f.path);
      if (!composite) continue;
      row[lookup.at({a0, f.b, composite->degree})] += sign * c;
    }
    for (auto it = row.begin(); it != row.end();) {
      it = it->second == 0 ? row.erase(it) : std::next(it);
    }
    return row;
  };

  std::map<std::pair<int, int>, std::size_t> rank;  // rank of D leaving (g, h)
  for (const auto& [cell, members] : cells) {
    std::vector<std::map<int, mpq_class>> rows;
    rows.reserve(members.size());
    for (int idx : members) {
      auto row = differential(idx, cell.second);
      if (!row.empty()) rows.push_back(std::move(row));
    }
    rank[cell] = rows.empty() ? 0 : rational_rank(std::move(rows));
  }

  HomTable table;
  for (const auto& [cell, members] : cells) {
    auto [g, h] = cell;
    long dim = static_cast<long>(members.size()) - static_cast<long>(rank[cell]);
    auto incoming = rank.find({g, h - 1});
    if (incoming != rank.end()) dim -= static_cast<long>(incoming->second);
    if (dim != 0) table[cell] = dim;
  }
  return table;
}

long total_hom_dim(const ProjComplex& x, const ProjComplex& y) {
  long total = 0;
  for (const auto& [cell, dim] : hom_table(x, y)) total += dim;
  return total;
}

LaurentPoly euler_characteristic(const HomTable& table) {
  const auto ring = CoefficientRing::integers();
  LaurentPoly out(ring);
  for (const auto& [cell, dim] : table) {
    out += LaurentPoly::monomial(ring, cell.second % 2 == 0 ? dim : -dim, cell.first);
  }
  return out;
}

LaurentPoly euler_pairing(const ProjComplex& x, const ProjComplex& y) {
  return euler_characteristic(hom_table(x, y));
}

BurauVector k0_class(const ProjComplex& x) {
  const auto ring = CoefficientRing::integers();
  BurauVector v(ring, x.algebra()->size());
  for (const auto& s : x.summands()) {
    v[s.vertex] += LaurentPoly::monomial(ring, s.hdeg % 2 == 0 ? 1 : -1, s.shift);
  }
  return v;
}

bool is_spherical(const ProjComplex& x) {
  return hom_table(x, x) == HomTable{{{0, 0}, 1}, {{2, 0}, 1}};
}

std::string format_hom_table(const HomTable& table) {
  std::ostringstream out;
  for (const auto& [cell, dim] : table) {
    out << "(" << cell.first << "," << cell.second << "): " << dim << "\n";
  }
  return out.str();
}

nlohmann::json hom_table_to_json(const HomTable& table) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [cell, dim] : table) {
    out.push_back({{"g", cell.first}, {"h", cell.second}, {"dim", dim}});
  }
  return out;
}

}  // namespace burau
