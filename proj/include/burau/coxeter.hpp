#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace burau {

/// Edge label m_ij. Pairs that are not stored are Two (commuting generators).
enum class Label { Two, Three, Infinity };

/// A Coxeter graph on vertices 1..n with labels in {2, 3, inf}.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  explicit CoxeterGraph(int n, std::string name = {});

  /// Sets m_ij (= m_ji). Rejects loops and out-of-range vertices.
  void set_label(int i, int j, Label m);

  int size() const { return n_; }
  const std::string& name() const { return name_; }
  Label label(int i, int j) const;
  bool adjacent(int i, int j) const { return label(i, j) != Label::Two; }
  std::vector<int> neighbors(int i) const;
  /// Stored edges as (i, j, m) with i < j, sorted.
  std::vector<std::tuple<int, int, Label>> edges() const;
  bool has_infinite_label() const;
  bool contains(int vertex) const { return vertex >= 1 && vertex <= n_; }

  /// The plain-text graph format: "n=<count>" then "<i>-<j>:<3|inf>" lines.
  std::string to_text() const;
  static CoxeterGraph parse(std::string_view text);

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }

 private:
  int n_ = 0;
  std::string name_;
  std::map<std::pair<int, int>, Label> labels_;  // keyed by (min, max)
};

std::vector<std::string> preset_names();
/// Throws std::out_of_range for an unknown name.
CoxeterGraph preset(std::string_view name);
/// A preset name, or otherwise a path to a graph file.
CoxeterGraph load_graph(std::string_view preset_or_path);

enum class ObstructionKind { A4, TildeA3 };

struct Obstruction {
  std::vector<int> vertices;  // sorted
  ObstructionKind kind;
};

/// First 4-vertex subset (in lexicographic order) inducing an A4 path or a
/// 4-cycle with every edge labelled 3.
std::optional<Obstruction> full_subgraph_obstruction(const CoxeterGraph& g);

/// Letters are signed generator indices: +i is sigma_i, -i its inverse.
using BraidWord = std::vector<int>;

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Throws ValidationError for a zero letter or |letter| > n.
void validate_word(const CoxeterGraph& g, const BraidWord& w);

BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
/// w [i] w^{-1}
BraidWord conjugate(const BraidWord& w, int i);
/// a b a^{-1} b^{-1}
BraidWord commutator(const BraidWord& a, const BraidWord& b);
/// Free reduction: cancels adjacent x, -x pairs.
BraidWord free_reduce(const BraidWord& w);

/// Accepts whitespace and/or comma separated integers, optionally bracketed.
BraidWord parse_word(std::string_view text);
std::string format_word(const BraidWord& w);

}  // namespace burau
