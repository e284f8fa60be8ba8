// Copyright 2026 The dehn Authors
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

#ifndef DEHN_SRC_UNION_FIND_HPP_
#define DEHN_SRC_UNION_FIND_HPP_

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace dehn::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  // Dense class ids 0..count-1 in order of first appearance.
  std::vector<int> labels(int* count) {
    std::vector<int> root_label(parent_.size(), -1);
    std::vector<int> out(parent_.size());
    int next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      std::size_t r = find(i);
      if (root_label[r] < 0) root_label[r] = next++;
      out[i] = root_label[r];
    }
    if (count) *count = next;
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Union-find over elements carrying a Z/2 label relative to their root.
// unite(a, b, p) records label(a) XOR label(b) == p and reports a
// contradiction with an existing relation. Undo restores the state before
// the matching number of successful unite calls (no path compression).
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, int> find(std::size_t x) const {
    int p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return {x, p};
  }

  enum class Result { kMerged, kConsistent, kContradiction };

  Result unite(std::size_t a, std::size_t b, int parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      return ((pa ^ pb) == parity) ? Result::kConsistent : Result::kContradiction;
    }
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    bool bumped = rank_[ra] == rank_[rb];
    parent_[rb] = ra;
    parity_[rb] = static_cast<unsigned char>(pa ^ pb ^ parity);
    if (bumped) ++rank_[ra];
    history_.push_back({rb, bumped});
    return Result::kMerged;
  }

  std::size_t checkpoint() const { return history_.size(); }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      auto [child, bumped] = history_.back();
      history_.pop_back();
      std::size_t root = parent_[child];
      if (bumped) --rank_[root];
      parent_[child] = child;
      parity_[child] = 0;
    }
  }

 private:
  struct Entry {
    std::size_t child;
    bool bumped;
  };
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> parity_;
  std::vector<int> rank_;
  std::vector<Entry> history_;
};

}  // namespace dehn::detail

#endif  // DEHN_SRC_UNION_FIND_HPP_
