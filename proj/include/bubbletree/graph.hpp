#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bubbletree/rational.hpp"

namespace bubbletree {

using Color = std::string;
using Edge = std::pair<int, int>;  // unordered, stored with first < second

// Finite multigraph with colored vertices and no self-loops, held in a
// canonical labeling so that equality of representations is isomorphism of
// colored multigraphs. Construct through `canonical`.
class ColoredMultigraph {
 public:
  ColoredMultigraph() : aut_order_(1) {}  // the empty graph (unit)

  static ColoredMultigraph canonical(std::vector<Color> colors, std::vector<Edge> edges) {
    int n = static_cast<int>(colors.size());
    for (auto& e : edges) {
      if (e.first == e.second) throw std::invalid_argument("graph: self-loops are not allowed");
      if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
        throw std::invalid_argument("graph: edge endpoint out of range");
      if (e.first > e.second) std::swap(e.first, e.second);
    }
    ColoredMultigraph g;
    if (n == 0) {
      if (!edges.empty()) throw std::invalid_argument("graph: edges without vertices");
      return g;
    }
    canonicalize_into(std::move(colors), std::move(edges), g);
    return g;
  }

  int vertex_count() const { return static_cast<int>(colors_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Color>& colors() const { return colors_; }
  const std::vector<Edge>& edges() const { return edges_; }
  long aut_order() const { return aut_order_; }
  bool is_empty() const { return colors_.empty(); }

  int valence(int v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.first == v) + (e.second == v);
    return d;
  }

  int color_valence(const Color& c) const {
    int total = 0;
    for (int v = 0; v < vertex_count(); ++v)
      if (colors_[static_cast<size_t>(v)] == c) total += valence(v);
    return total;
  }

  bool has_color(const Color& c) const {
    return std::find(colors_.begin(), colors_.end(), c) != colors_.end();
  }

  int component_count() const {
    int n = vertex_count();
    if (n == 0) return 0;
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      return v;
    };
    for (const auto& e : edges_) parent[static_cast<size_t>(find(e.first))] = find(e.second);
    int c = 0;
    for (int v = 0; v < n; ++v) c += (find(v) == v);
    return c;
  }

  bool is_connected() const { return vertex_count() > 0 && component_count() == 1; }

  bool has_multi_edge() const {
    for (size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i] == edges_[i - 1]) return true;
    return false;
  }

  // Connected, simple and acyclic; single vertices count as trees.
  bool is_tree() const {
    return is_connected() && !has_multi_edge() && edge_count() == vertex_count() - 1;
  }

  std::string key() const {
    std::string s;
    for (const auto& c : colors_) {
      s += c;
      s += ',';
    }
    s += '|';
    for (const auto& e : edges_) {
      s += std::to_string(e.first) + "-" + std::to_string(e.second) + ",";
    }
    return s;
  }

  friend bool operator==(const ColoredMultigraph& a, const ColoredMultigraph& b) {
    return a.colors_ == b.colors_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const ColoredMultigraph& a, const ColoredMultigraph& b) { return !(a == b); }
  friend bool operator<(const ColoredMultigraph& a, const ColoredMultigraph& b) {
    if (a.colors_.size() != b.colors_.size()) return a.colors_.size() < b.colors_.size();
    if (a.edges_.size() != b.edges_.size()) return a.edges_.size() < b.edges_.size();
    if (a.colors_ != b.colors_) return a.colors_ < b.colors_;
    return a.edges_ < b.edges_;
  }

 private:
  // Canonical form: vertices are grouped by iterated color/degree refinement
  // classes; within that constraint the labeling minimizing the edge list is
  // chosen. |Aut| equals the number of minimizing labelings.
  static void canonicalize_into(std::vector<Color> colors, std::vector<Edge> edges,
                                ColoredMultigraph& out) {
    int n = static_cast<int>(colors.size());
    std::vector<std::vector<int>> mult(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (const auto& e : edges) {
      ++mult[static_cast<size_t>(e.first)][static_cast<size_t>(e.second)];
      ++mult[static_cast<size_t>(e.second)][static_cast<size_t>(e.first)];
    }

    // Refinement classes, canonically numbered by their signature data so
    // that isomorphic graphs refine identically.
    std::vector<int> cls(static_cast<size_t>(n));
    {
      std::vector<Color> palette(colors.begin(), colors.end());
      std::sort(palette.begin(), palette.end());
      palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
      for (int v = 0; v < n; ++v)
        cls[static_cast<size_t>(v)] = static_cast<int>(
            std::lower_bound(palette.begin(), palette.end(), colors[static_cast<size_t>(v)]) - palette.begin());
    }
    while (true) {
      // signature: own class plus the sorted multiset of (neighbor class, multiplicity)
      std::vector<std::vector<int>> sig(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, int>> nb;
        for (int u = 0; u < n; ++u)
          if (mult[static_cast<size_t>(v)][static_cast<size_t>(u)] > 0)
            nb.emplace_back(cls[static_cast<size_t>(u)], mult[static_cast<size_t>(v)][static_cast<size_t>(u)]);
        std::sort(nb.begin(), nb.end());
        auto& s = sig[static_cast<size_t>(v)];
        s.push_back(cls[static_cast<size_t>(v)]);
        for (auto& pr : nb) {
          s.push_back(pr.first);
          s.push_back(pr.second);
        }
      }
      std::vector<std::vector<int>> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      std::vector<int> next(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v)
        next[static_cast<size_t>(v)] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<size_t>(v)]) - distinct.begin());
      if (next == cls) break;
      cls = std::move(next);
    }

    std::vector<std::vector<int>> blocks;
    {
      int nc = *std::max_element(cls.begin(), cls.end()) + 1;
      blocks.assign(static_cast<size_t>(nc), {});
      for (int v = 0; v < n; ++v) blocks[static_cast<size_t>(cls[static_cast<size_t>(v)])].push_back(v);
    }

    // Enumerate labelings: position blocks in class order, any order inside
    // a block. Track the minimal edge encoding and how many labelings hit it.
    std::vector<int> pos(static_cast<size_t>(n));
    std::vector<Edge> best;
    long best_count = 0;
    bool have_best = false;

    std::vector<std::vector<int>> perms = blocks;  // current permutation per block
    auto encode = [&]() {
      std::vector<Edge> enc;
      enc.reserve(edges.size());
      for (const auto& e : edges) {
        int a = pos[static_cast<size_t>(e.first)], b = pos[static_cast<size_t>(e.second)];
        enc.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(enc.begin(), enc.end());
      return enc;
    };

    int base = 0;
    std::vector<int> block_base(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) {
      block_base[b] = base;
      base += static_cast<int>(blocks[b].size());
    }

    auto assign_block = [&](size_t b) {
      for (size_t i = 0; i < perms[b].size(); ++i)
        pos[static_cast<size_t>(perms[b][i])] = block_base[b] + static_cast<int>(i);
    };

    // std::next_permutation over each block, odometer style.
    for (size_t b = 0; b < blocks.size(); ++b) {
      std::sort(perms[b].begin(), perms[b].end());
      assign_block(b);
    }
    while (true) {
      std::vector<Edge> enc = encode();
      if (!have_best || enc < best) {
        best = enc;
        best_count = 1;
        have_best = true;
      } else if (enc == best) {
        ++best_count;
      }
      // advance odometer
      size_t b = 0;
      for (; b < blocks.size(); ++b) {
        if (std::next_permutation(perms[b].begin(), perms[b].end())) {
          assign_block(b);
          break;
        }
        std::sort(perms[b].begin(), perms[b].end());
        assign_block(b);
      }
      if (b == blocks.size()) break;
    }

    // Vertices of a block share a color (classes refine color classes).
    out.colors_.assign(static_cast<size_t>(n), Color());
    for (size_t b = 0; b < blocks.size(); ++b)
      for (size_t i = 0; i < blocks[b].size(); ++i)
        out.colors_[static_cast<size_t>(block_base[b] + static_cast<int>(i))] =
            colors[static_cast<size_t>(blocks[b][0])];
    out.edges_ = std::move(best);
    out.aut_order_ = best_count;
  }

  std::vector<Color> colors_;
  std::vector<Edge> edges_;
  long aut_order_;
};

// Convenience builders.
inline ColoredMultigraph single_vertex_graph(const Color& c) {
  return ColoredMultigraph::canonical({c}, {});
}
inline ColoredMultigraph two_vertex_graph(const Color& c0, const Color& c1, int edge_multiplicity) {
  std::vector<Edge> es(static_cast<size_t>(edge_multiplicity), Edge{0, 1});
  return ColoredMultigraph::canonical({c0, c1}, std::move(es));
}
// Path u - mid - w (mid in the middle).
inline ColoredMultigraph path3_graph(const Color& end0, const Color& mid, const Color& end1) {
  return ColoredMultigraph::canonical({end0, mid, end1}, {{0, 1}, {1, 2}});
}

}  // namespace bubbletree
