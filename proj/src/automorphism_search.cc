// Copyright 2026 The oasym Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oasym/automorphism_search.h"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

namespace oasym {

ColoredGraph::ColoredGraph(size_t n, std::vector<int64_t> colors) : n_(n) {
  if (colors.size() != n * n) {
    throw DomainError("color matrix must be n x n");
  }
  std::map<int64_t, int> dense;
  for (int64_t c : colors) dense.emplace(c, 0);
  for (auto& [value, id] : dense) id = num_colors_++;
  ids_.resize(colors.size());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (colors[i * n + j] != colors[j * n + i]) {
        throw DomainError("color matrix must be symmetric");
      }
      ids_[i * n + j] = dense[colors[i * n + j]];
    }
  }
}

bool ColoredGraph::IsAutomorphism(const Permutation& p) const {
  if (p.degree() != n_) return false;
  for (uint32_t i = 0; i < n_; ++i) {
    for (uint32_t j = i; j < n_; ++j) {
      if (color(p(i), p(j)) != color(i, j)) return false;
    }
  }
  return true;
}

namespace {

using Cell = std::vector<uint32_t>;
using Partition = std::vector<Cell>;

class BudgetExhausted {};

class Searcher {
 public:
  Searcher(const ColoredGraph& graph, uint64_t budget)
      : graph_(graph), budget_(budget) {}

  AutomorphismSearchOutcome Run() {
    AutomorphismSearchOutcome outcome;
    try {
      BuildLeftPath();
      for (ptrdiff_t i = static_cast<ptrdiff_t>(base_.size()) - 1; i >= 0; --i) {
        SearchLevel(static_cast<size_t>(i), &outcome.generators);
      }
    } catch (const BudgetExhausted&) {
      outcome.budget_exhausted = true;
    }
    outcome.stats.nodes = nodes_;
    outcome.stats.base = base_;
    return outcome;
  }

 private:
  void Tick() {
    if (++nodes_ > budget_) throw BudgetExhausted();
  }

  // Splits cells until every cell is uniform with respect to the color
  // histograms toward every cell (an equitable partition).
  Partition Refine(Partition cells) const {
    const size_t n = graph_.size();
    const int nc = graph_.num_colors();
    std::vector<uint32_t> cell_of(n);
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t c = 0; c < cells.size(); ++c) {
        for (uint32_t v : cells[c]) cell_of[v] = static_cast<uint32_t>(c);
      }
      const size_t width = cells.size() * nc;
      Partition next;
      next.reserve(cells.size());
      for (const Cell& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<uint32_t>, uint32_t>> keyed;
        keyed.reserve(cell.size());
        for (uint32_t v : cell) {
          std::vector<uint32_t> histogram(width, 0);
          for (uint32_t u = 0; u < n; ++u) {
            ++histogram[cell_of[u] * nc + graph_.color(v, u)];
          }
          keyed.emplace_back(std::move(histogram), v);
        }
        std::sort(keyed.begin(), keyed.end());
        size_t start = 0;
        for (size_t pos = 1; pos <= keyed.size(); ++pos) {
          if (pos == keyed.size() || keyed[pos].first != keyed[start].first) {
            Cell part;
            for (size_t q = start; q < pos; ++q) part.push_back(keyed[q].second);
            next.push_back(std::move(part));
            start = pos;
          }
        }
        if (next.size() > 0 && next.back().size() != cell.size()) changed = true;
      }
      cells = std::move(next);
    }
    return cells;
  }

  static Partition Individualize(const Partition& cells, size_t target,
                                 uint32_t v) {
    Partition out;
    out.reserve(cells.size() + 1);
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c != target) {
        out.push_back(cells[c]);
        continue;
      }
      out.push_back({v});
      Cell rest;
      for (uint32_t u : cells[c]) {
        if (u != v) rest.push_back(u);
      }
      out.push_back(std::move(rest));
    }
    return out;
  }

  static std::optional<size_t> TargetCell(const Partition& cells) {
    std::optional<size_t> best;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 &&
          (!best || cells[c].size() < cells[*best].size())) {
        best = c;
      }
    }
    return best;
  }

  static std::vector<size_t> Shape(const Partition& cells) {
    std::vector<size_t> shape;
    shape.reserve(cells.size());
    for (const Cell& c : cells) shape.push_back(c.size());
    return shape;
  }

  void BuildLeftPath() {
    Partition current = Refine({InitialCell()});
    Tick();
    while (true) {
      left_.push_back(current);
      left_shape_.push_back(Shape(current));
      const std::optional<size_t> target = TargetCell(current);
      if (!target) break;
      target_.push_back(*target);
      const uint32_t b = *std::min_element(current[*target].begin(),
                                           current[*target].end());
      base_.push_back(b);
      current = Refine(Individualize(current, *target, b));
      Tick();
    }
  }

  Cell InitialCell() const {
    Cell all(graph_.size());
    for (uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }

  // Depth-first search below `level` for a leaf matching the left leaf.
  std::optional<Permutation> Descend(const Partition& right, size_t level) {
    Tick();
    if (Shape(right) != left_shape_[level]) return std::nullopt;
    if (level == base_.size()) {
      const Partition& leaf = left_.back();
      std::vector<uint32_t> image(graph_.size());
      for (size_t c = 0; c < leaf.size(); ++c) image[leaf[c][0]] = right[c][0];
      Permutation p = Permutation::FromImageUnchecked(std::move(image));
      if (graph_.IsAutomorphism(p)) return p;
      return std::nullopt;
    }
    Cell candidates = right[target_[level]];
    std::sort(candidates.begin(), candidates.end());
    for (uint32_t u : candidates) {
      auto found = Descend(Refine(Individualize(right, target_[level], u)),
                           level + 1);
      if (found) return found;
    }
    return std::nullopt;
  }

  std::vector<bool> OrbitMask(uint32_t point,
                              const std::vector<Permutation>& gens) const {
    std::vector<bool> seen(graph_.size(), false);
    std::vector<uint32_t> queue{point};
    seen[point] = true;
    for (size_t pos = 0; pos < queue.size(); ++pos) {
      for (const Permutation& g : gens) {
        const uint32_t y = g(queue[pos]);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return seen;
  }

  void SearchLevel(size_t level, std::vector<Permutation>* gens) {
    const uint32_t b = base_[level];
    std::vector<bool> orbit = OrbitMask(b, *gens);
    Cell candidates = left_[level][target_[level]];
    std::sort(candidates.begin(), candidates.end());
    for (uint32_t w : candidates) {
      if (orbit[w]) continue;
      auto found = Descend(
          Refine(Individualize(left_[level], target_[level], w)), level + 1);
      if (found) {
        gens->push_back(std::move(*found));
        orbit = OrbitMask(b, *gens);
      }
    }
  }

  const ColoredGraph& graph_;
  uint64_t budget_;
  uint64_t nodes_ = 0;
  // left_[i] is the partition before individualizing base_[i];
  // left_.back() is discrete.
  std::vector<Partition> left_;
  std::vector<std::vector<size_t>> left_shape_;
  std::vector<size_t> target_;
  std::vector<uint32_t> base_;
};

}  // namespace

AutomorphismSearchOutcome FindAutomorphisms(const ColoredGraph& graph,
                                            uint64_t node_budget) {
  if (graph.size() == 0) return {};
  return Searcher(graph, node_budget).Run();
}

}  // namespace oasym
