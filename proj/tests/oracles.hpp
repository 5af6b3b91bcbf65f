#pragma once

// Independent brute-force oracles for the test suites.  These deliberately
// reimplement the group arithmetic with their own plain-integer loops so they
// share no code path with the library engines they check.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kmlat/gcm.hpp"
#include "kmlat/gf.hpp"

namespace oracle {

using Key = std::vector<std::int64_t>;

// Matrix of a word acting on the root lattice: rows are images of the simple
// roots under direct application of s.a_t = a_t - A_st a_s.
inline Key word_key(const kmlat::GeneralizedCartanMatrix& a,
                    const std::vector<int>& word) {
  const int n = a.rank();
  std::vector<std::vector<std::int64_t>> img(n, std::vector<std::int64_t>(n, 0));
  for (int s = 0; s < n; ++s) img[s][s] = 1;
  for (int j : word) {
    // img <- img * s_j, i.e. row_t -= A[j][t] * row_j with the old row_j.
    std::vector<std::int64_t> old = img[j];
    for (int t = 0; t < n; ++t) {
      for (int u = 0; u < n; ++u) img[t][u] -= a.at(j, t) * old[u];
    }
  }
  Key k;
  for (const auto& row : img) k.insert(k.end(), row.begin(), row.end());
  return k;
}

// Word-enumeration BFS: every word of length <= radius, deduplicated by the
// matrix key; the first length at which an element appears is its length.
inline std::map<Key, int> brute_force_lengths(
    const kmlat::GeneralizedCartanMatrix& a, int radius,
    std::size_t cap = 5'000'000) {
  const int n = a.rank();
  std::map<Key, int> lengths;
  std::vector<std::pair<Key, std::vector<int>>> frontier;
  frontier.push_back({word_key(a, {}), {}});
  lengths[frontier[0].first] = 0;
  for (int len = 1; len <= radius; ++len) {
    std::vector<std::pair<Key, std::vector<int>>> next;
    for (const auto& [key, word] : frontier) {
      for (int s = 0; s < n; ++s) {
        std::vector<int> w = word;
        w.push_back(s);
        Key k = word_key(a, w);
        if (lengths.emplace(k, len).second) {
          next.push_back({std::move(k), std::move(w)});
          if (lengths.size() > cap) throw std::runtime_error("oracle cap");
        }
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return lengths;
}

inline std::vector<std::int64_t> brute_force_growth(
    const kmlat::GeneralizedCartanMatrix& a, int radius) {
  auto lengths = brute_force_lengths(a, radius);
  std::vector<std::int64_t> counts(radius + 1, 0);
  for (const auto& [key, len] : lengths) ++counts[len];
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

// Brute-force center order: enumerate Hom(Z^rank, F_q^x) = (F_q^x)^rank via a
// multiplicative generator and count the tuples killed by every character row.
inline std::uint64_t brute_force_center_order(
    const std::vector<std::vector<kmlat::Int>>& rows, int rank, int p, int k) {
  const kmlat::GF& f = kmlat::GF::get(p, k);
  const std::uint64_t m = f.q() - 1;
  kmlat::GF::Elem g = f.generator();
  std::vector<std::uint64_t> exps(rank, 0);
  std::uint64_t count = 0;
  while (true) {
    bool killed = true;
    for (const auto& row : rows) {
      kmlat::GF::Elem val = f.one();
      for (int i = 0; i < rank; ++i) {
        std::int64_t e = static_cast<std::int64_t>(row[i]);
        std::uint64_t em = ((e % static_cast<std::int64_t>(m)) + m) % m;
        val = f.mul(val, f.pow(f.pow(g, exps[i]), em));
      }
      if (val != f.one()) { killed = false; break; }
    }
    if (killed) ++count;
    int pos = 0;
    while (pos < rank && ++exps[pos] == m) exps[pos++] = 0;
    if (pos == rank) break;
  }
  return count;
}

}  // namespace oracle
