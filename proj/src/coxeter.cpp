#include "burau/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

namespace burau {

CoxeterGraph::CoxeterGraph(int n, std::string name) : n_(n), name_(std::move(name)) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
}

void CoxeterGraph::set_label(int i, int j, Label m) {
  if (!contains(i) || !contains(j)) {
    throw std::out_of_range("edge " + std::to_string(i) + "-" + std::to_string(j) +
                            " outside 1.." + std::to_string(n_));
  }
  if (i == j) throw std::invalid_argument("loop at vertex " + std::to_string(i));
  auto key = std::minmax(i, j);
  if (m == Label::Two) {
    labels_.erase(key);
  } else {
    labels_[key] = m;
  }
}

Label CoxeterGraph::label(int i, int j) const {
  if (i == j) throw std::invalid_argument("no label on the diagonal");
  auto it = labels_.find(std::minmax(i, j));
  return it == labels_.end() ? Label::Two : it->second;
}

std::vector<int> CoxeterGraph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j) {
    if (j != i && adjacent(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<std::tuple<int, int, Label>> CoxeterGraph::edges() const {
  std::vector<std::tuple<int, int, Label>> out;
  for (const auto& [key, m] : labels_) out.emplace_back(key.first, key.second, m);
  return out;
}

bool CoxeterGraph::has_infinite_label() const {
  return std::any_of(labels_.begin(), labels_.end(),
                     [](const auto& kv) { return kv.second == Label::Infinity; });
}

std::string CoxeterGraph::to_text() const {
  std::ostringstream out;
  out << "n=" << n_ << "\n";
  for (const auto& [key, m] : labels_) {
    out << key.first << "-" << key.second << ":" << (m == Label::Three ? "3" : "inf") << "\n";
  }
  return out.str();
}

namespace {

int parse_int(std::string_view s, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "' in " + context);
  }
  return value;
}

std::string strip(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

CoxeterGraph CoxeterGraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<CoxeterGraph> g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    std::string where = "line " + std::to_string(lineno);
    if (!g) {
      if (s.rfind("n=", 0) != 0) throw std::invalid_argument("expected n=<count> on " + where);
      g.emplace(parse_int(std::string_view(s).substr(2), where));
      continue;
    }
    auto dash = s.find('-');
    auto colon = s.find(':');
    if (dash == std::string::npos || colon == std::string::npos || colon < dash) {
      throw std::invalid_argument("expected <i>-<j>:<m> on " + where);
    }
    int i = parse_int(std::string_view(s).substr(0, dash), where);
    int j = parse_int(std::string_view(s).substr(dash + 1, colon - dash - 1), where);
    std::string m = s.substr(colon + 1);
    Label label;
    if (m == "3") {
      label = Label::Three;
    } else if (m == "inf") {
      label = Label::Infinity;
    } else if (m == "2") {
      label = Label::Two;
    } else {
      throw std::invalid_argument("unsupported label '" + m + "' on " + where +
                                  " (only 2, 3, inf)");
    }
    g->set_label(i, j, label);
  }
  if (!g) throw std::invalid_argument("empty graph description");
  return *g;
}

namespace {

CoxeterGraph simply_laced(std::string name, int n, std::initializer_list<std::pair<int, int>> es) {
  CoxeterGraph g(n, std::move(name));
  for (auto [i, j] : es) g.set_label(i, j, Label::Three);
  return g;
}

CoxeterGraph complete(std::string name, int n) {
  CoxeterGraph g(n, std::move(name));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) g.set_label(i, j, Label::Three);
  }
  return g;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"A2", "A3", "A4", "D4", "tildeA2", "tildeA3", "tildeD4", "AE4", "box", "K4", "K5", "K6"};
}

CoxeterGraph preset(std::string_view name) {
  if (name == "A2") return simply_laced("A2", 2, {{1, 2}});
  if (name == "A3") return simply_laced("A3", 3, {{1, 2}, {2, 3}});
  if (name == "A4") return simply_laced("A4", 4, {{1, 2}, {2, 3}, {3, 4}});
  if (name == "D4") return simply_laced("D4", 4, {{1, 2}, {2, 3}, {2, 4}});
  if (name == "tildeA2") return simply_laced("tildeA2", 3, {{1, 2}, {2, 3}, {1, 3}});
  if (name == "tildeA3") return simply_laced("tildeA3", 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  if (name == "tildeD4") return simply_laced("tildeD4", 5, {{1, 3}, {2, 3}, {3, 4}, {3, 5}});
  // Triangle 1-2-3 with a tail at 3.
  if (name == "AE4") return simply_laced("AE4", 4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
  // The checked box: a square 1-2-3-4 with the diagonal 1-3.
  if (name == "box") return simply_laced("box", 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  if (name == "K4") return complete("K4", 4);
  if (name == "K5") return complete("K5", 5);
  if (name == "K6") return complete("K6", 6);
  throw std::out_of_range("unknown preset '" + std::string(name) + "'");
}

CoxeterGraph load_graph(std::string_view preset_or_path) {
  auto names = preset_names();
  if (std::find(names.begin(), names.end(), preset_or_path) != names.end()) {
    return preset(preset_or_path);
  }
  std::ifstream in{std::string(preset_or_path)};
  if (!in) {
    throw std::invalid_argument("'" + std::string(preset_or_path) +
                                "' is neither a preset nor a readable graph file");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return CoxeterGraph::parse(buf.str());
}

std::optional<Obstruction> full_subgraph_obstruction(const CoxeterGraph& g) {
  const int n = g.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          const int vs[4] = {a, b, c, d};
          int edge_count = 0;
          bool all_three = true;
          int degree[4] = {0, 0, 0, 0};
          for (int x = 0; x < 4; ++x) {
            for (int y = x + 1; y < 4; ++y) {
              Label m = g.label(vs[x], vs[y]);
              if (m == Label::Two) continue;
              all_three = all_three && m == Label::Three;
              ++edge_count;
              ++degree[x];
              ++degree[y];
            }
          }
          if (!all_three) continue;
          bool max_two = std::all_of(degree, degree + 4, [](int k) { return k <= 2; });
          bool no_isolated = std::all_of(degree, degree + 4, [](int k) { return k >= 1; });
          // With max degree 2 and no isolated vertex, 3 edges is a path and
          // 4 edges is a 4-cycle (two disjoint edges would have only 2 edges).
          if (max_two && no_isolated && edge_count == 3) {
            return Obstruction{{a, b, c, d}, ObstructionKind::A4};
          }
          if (max_two && edge_count == 4) {
            return Obstruction{{a, b, c, d}, ObstructionKind::TildeA3};
          }
        }
      }
    }
  }
  return std::nullopt;
}

void validate_word(const CoxeterGraph& g, const BraidWord& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    int letter = w[k];
    if (letter == 0 || !g.contains(letter < 0 ? -letter : letter)) {
      throw ValidationError(k, "letter " + std::to_string(letter) + " at position " +
                                   std::to_string(k) + " is outside 1.." +
                                   std::to_string(g.size()));
    }
  }
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

BraidWord conjugate(const BraidWord& w, int i) { return concat(concat(w, {i}), inverse(w)); }

BraidWord commutator(const BraidWord& a, const BraidWord& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

BraidWord parse_word(std::string_view text) {
  BraidWord out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    out.push_back(parse_int(token, "braid word"));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '[' ||
        ch == ']') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return out;
}

std::string format_word(const BraidWord& w) {
  std::string out = "[";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(w[k]);
  }
  return out + "]";
}

}  // namespace burau
