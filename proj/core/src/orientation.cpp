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

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "dehn/conversions.hpp"

namespace dehn {

namespace {

// Bit i of the vector sits at mask position k-1-i, so that comparing masks
// compares bit vectors lexicographically.
OrientationBits bits_of(std::uint64_t mask, int k) {
  OrientationBits b(k);
  for (int i = 0; i < k; ++i) b[i] = (mask >> (k - 1 - i)) & 1;
  return b;
}

struct Best {
  int value = -1;
  std::uint64_t mask = 0;

  void offer(int v, std::uint64_t m) {
    if (value < 0 || v < value || (v == value && m < mask)) {
      value = v;
      mask = m;
    }
  }
};

// Gray-code sweep over the low `free` positions with the high positions
// fixed to `prefix`.
Best sweep(const MismatchModel& m, std::uint64_t prefix, int free) {
  int k = m.cubes;
  std::uint64_t mask = prefix << free;
  OrientationBits bits = bits_of(mask, k);
  int value = m.mismatches(bits);
  Best best;
  best.offer(value, mask);
  std::uint64_t total = std::uint64_t{1} << free;
  for (std::uint64_t step = 1; step < total; ++step) {
    int pos = __builtin_ctzll(step);
    int cube = k - 1 - pos;
    for (int idx : m.incident[cube]) {
      const auto& p = m.pairs[idx];
      value += (bits[p.a] ^ bits[p.b] ^ p.flip) ? -1 : 1;
    }
    bits[cube] ^= 1;
    mask ^= std::uint64_t{1} << pos;
    best.offer(value, mask);
  }
  return best;
}

int flip_gain(const MismatchModel& m, const OrientationBits& bits, int cube) {
  int gain = 0;
  for (int idx : m.incident[cube]) {
    const auto& p = m.pairs[idx];
    gain += (bits[p.a] ^ bits[p.b] ^ p.flip) ? 1 : -1;
  }
  return gain;
}

void descend(const MismatchModel& m, OrientationBits& bits) {
  for (bool improved = true; improved;) {
    improved = false;
    for (int i = 0; i < m.cubes; ++i)
      if (flip_gain(m, bits, i) > 0) {
        bits[i] ^= 1;
        improved = true;
      }
  }
}

// Cubes in breadth-first order; each takes the bit that agrees with most
// already placed neighbours, 0 on ties.
OrientationBits greedy(const MismatchModel& m) {
  OrientationBits bits(m.cubes, 0);
  std::vector<char> queued(m.cubes, 0);
  std::vector<char> assigned(m.cubes, 0);
  for (int root = 0; root < m.cubes; ++root) {
    if (queued[root]) continue;
    std::vector<int> queue{root};
    queued[root] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int a = queue[h];
      int votes[2] = {0, 0};
      for (int idx : m.incident[a]) {
        const auto& p = m.pairs[idx];
        int other = p.a == a ? p.b : p.a;
        if (assigned[other]) ++votes[bits[other] ^ p.flip];
        if (!queued[other]) {
          queued[other] = 1;
          queue.push_back(other);
        }
      }
      bits[a] = votes[1] > votes[0];
      assigned[a] = 1;
    }
  }
  return bits;
}

}  // namespace

OrientationChoice exhaustive_orientations(const MismatchModel& m, int threads) {
  int k = m.cubes;
  if (k > 40) throw std::invalid_argument("exhaustive search limited to 40 cubes");
  if (k == 0) return {{}, m.constant, true};
  int split = 0;
  while ((1 << (split + 1)) <= threads && split + 1 < k) ++split;
  int parts = 1 << split;
  std::vector<Best> results(parts);
  auto work = [&](int part) { results[part] = sweep(m, part, k - split); };
  if (parts == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int p = 0; p < parts; ++p) pool.emplace_back(work, p);
    for (auto& th : pool) th.join();
  }
  Best best;
  for (const auto& r : results) best.offer(r.value, r.mask);
  return {bits_of(best.mask, k), best.value, true};
}

OrientationChoice local_search_orientations(const MismatchModel& m, std::uint64_t seed, int restarts) {
  OrientationBits best = greedy(m);
  descend(m, best);
  int best_value = m.mismatches(best);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int r = 0; r < restarts; ++r) {
    OrientationBits bits(m.cubes);
    for (auto& b : bits) b = coin(rng);
    descend(m, bits);
    int v = m.mismatches(bits);
    if (v < best_value || (v == best_value && bits < best)) {
      best = bits;
      best_value = v;
    }
  }
  return {best, best_value, false};
}

OrientationChoice optimize_orientations(const IdealCubulation& c, const OptimizeOptions& opts) {
  auto m = mismatch_model(c);
  if (m.cubes <= opts.exhaustive_max) return exhaustive_orientations(m, opts.threads);
  auto choice = local_search_orientations(m, opts.seed, opts.restarts);
  // Never worse than leaving every bit at zero.
  OrientationBits zeros(m.cubes, 0);
  int z = m.mismatches(zeros);
  if (z < choice.mismatches) choice = {zeros, z, false};
  return choice;
}

}  // namespace dehn
