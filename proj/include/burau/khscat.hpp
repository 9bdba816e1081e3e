#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burau/burau.hpp"
#include "burau/coxeter.hpp"
#include "json.hpp"

namespace burau {

/// The zigzag algebra of a simply-laced graph, over Q.
///
/// Every non-zero graded piece e_b A e_a is one-dimensional, so a basis path
/// is pinned down by its endpoints and degree: e_i (degree 0), X_i (degree
/// 2) and one arrow a -> b per ordered adjacent pair (degree 1). Paths are
/// written in the usual right-to-left notation, (b|a) being the arrow from a
/// to b, so (j|i)(i|j) = X_j. Every structure constant is 0 or 1.
class ZigzagAlgebra {
 public:
  struct Path {
    int from;
    int to;
    int degree;
    friend bool operator==(const Path&, const Path&) = default;
  };

  /// Throws std::invalid_argument on an inf label or a single vertex.
  explicit ZigzagAlgebra(CoxeterGraph g);

  const CoxeterGraph& graph() const { return graph_; }
  int size() const { return graph_.size(); }

  /// The basis path from `from` to `to` in the given degree, if any.
  std::optional<Path> basis_path(int from, int to, int degree) const;
  /// Basis of e_to A e_from, ascending degree.
  std::vector<Path> paths(int from, int to) const;
  /// "first, then second"; empty when the product vanishes.
  std::optional<Path> compose(const Path& first, const Path& second) const;
  /// Total dimension 2n + 2|E|.
  int dimension() const;
  std::string render(const Path& p) const;

 private:
  CoxeterGraph graph_;
};

using AlgebraPtr = std::shared_ptr<const ZigzagAlgebra>;
AlgebraPtr make_zigzag(const CoxeterGraph& g);

/// One summand P_vertex{shift} sitting in homological position `hdeg`.
struct Summand {
  int vertex;
  int shift;
  int hdeg;
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Bounded complex of shifted indecomposable projectives.
///
/// The differential raises hdeg by one. An entry from summand s to summand t
/// is a rational multiple of the unique basis path from s.vertex to t.vertex
/// of degree s.shift - t.shift, so only the scalar is stored.
class ProjComplex {
 public:
  using Entries = std::map<std::pair<int, int>, mpq_class>;

  explicit ProjComplex(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  ProjComplex(AlgebraPtr algebra, std::vector<Summand> summands, Entries entries);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Summand>& summands() const { return summands_; }
  const Entries& entries() const { return entries_; }
  int size() const { return static_cast<int>(summands_.size()); }

  /// The basis path carried by the entry src -> dst, if the types allow one.
  std::optional<ZigzagAlgebra::Path> entry_path(int src, int dst) const;

  /// Empty string when the complex is well formed (entry types, degrees and
  /// d^2 = 0); otherwise a description of the first problem found.
  std::string check() const;

  /// Summand lines "P<i>{g}[h]" then "src -> dst : <element>" lines.
  std::string dump() const;
  nlohmann::json to_json() const;

  friend bool operator==(const ProjComplex& a, const ProjComplex& b) {
    return a.summands_ == b.summands_ && a.entries_ == b.entries_;
  }

 private:
  AlgebraPtr algebra_;
  std::vector<Summand> summands_;
  Entries entries_;
};

/// (g, h) -> dimension of Hom^{g,h}; zero entries are omitted.
using HomTable = std::map<std::pair<int, int>, long>;

ProjComplex projective(const AlgebraPtr& algebra, int i, int shift = 0, int hdeg = 0);
ProjComplex direct_sum(const ProjComplex& a, const ProjComplex& b);

/// Spherical twist along P_i (sign +1) or its inverse (sign -1), minimized.
ProjComplex apply_twist(const ProjComplex& x, int i, int sign);
/// Same word order as the Burau action: the last letter acts first.
ProjComplex act_complex(const BraidWord& w, const ProjComplex& x);
/// Gaussian elimination until no isomorphism entry remains.
ProjComplex minimize(const ProjComplex& x);

HomTable hom_table(const ProjComplex& x, const ProjComplex& y);
long total_hom_dim(const ProjComplex& x, const ProjComplex& y);
/// sum_g q^g sum_h (-1)^h dim Hom^{g,h}, over Z.
LaurentPoly euler_pairing(const ProjComplex& x, const ProjComplex& y);
LaurentPoly euler_characteristic(const HomTable& table);
/// sum over summands of (-1)^h q^g alpha_i, over Z.
BurauVector k0_class(const ProjComplex& x);
bool is_spherical(const ProjComplex& x);

std::string format_hom_table(const HomTable& table);
nlohmann::json hom_table_to_json(const HomTable& table);

/// Rank over Q of a sparse matrix given as rows (column -> value).
std::size_t rational_rank(std::vector<std::map<int, mpq_class>> rows);

}  // namespace burau
