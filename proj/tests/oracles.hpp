#pragma once

// Reference implementations for tests. Deliberately naive: adjacency
// matrices, explicit square roots, brute-force permutations. Nothing here
// calls into the library.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct Matrix {
  int n = 0;
  std::vector<std::vector<bool>> a;

  explicit Matrix(int order) : n(order), a(order, std::vector<bool>(order, false)) {}

  static Matrix from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Matrix m(order);
    for (const auto& [u, v] : edges) m.a[u][v] = m.a[v][u] = true;
    return m;
  }

  int degree(int v) const { return static_cast<int>(std::count(a[v].begin(), a[v].end(), true)); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (a[i][j]) out.emplace_back(i, j);
    return out;
  }
};

inline double so(int x, int y) { return std::sqrt(double(x * x + y * y)); }
inline double hso(int x, int y) { return so(x, y) / (x < y ? x : y); }
inline double cdso(int x, int y) { return so(x, y) / (x > y ? x : y); }
inline double dso(int x, int y) { return so(x, y) / (x + y); }
inline double m1(int x, int y) { return double(x + y); }

template <class H>
double edge_sum(const Matrix& m, H h) {
  double total = 0.0;
  for (const auto& [u, v] : m.edges()) total += h(m.degree(u), m.degree(v));
  return total;
}

inline bool connected(const Matrix& m) {
  if (m.n == 0) return false;
  std::vector<bool> seen(m.n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < m.n; ++v) {
      if (m.a[u][v] && !seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == m.n;
}

// graph6 writer following the format description bit by bit: N(n) then the
// upper triangle column by column, six bits per byte, big-endian, +63.
inline std::string graph6(const Matrix& m) {
  std::string out(1, char(63 + m.n));
  std::vector<int> bits;
  for (int j = 1; j < m.n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(m.a[i][j] ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + bits[k + b];
    out.push_back(char(63 + v));
  }
  return out;
}

// Smallest upper-triangle bit string over all n! relabellings.
inline std::vector<bool> brute_canonical(const Matrix& m) {
  std::vector<int> perm(m.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  bool first = true;
  do {
    std::vector<bool> code;
    for (int j = 1; j < m.n; ++j)
      for (int i = 0; i < j; ++i) code.push_back(m.a[perm[i]][perm[j]]);
    if (first || code < best) {
      best = code;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// All labeled graphs on n vertices as matrices, in upper-triangle mask order.
template <class Fn>
void for_each_labeled(int n, Fn fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const unsigned long long total = 1ULL << pairs.size();
  for (unsigned long long mask = 0; mask < total; ++mask) {
    Matrix m(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1ULL) m.a[pairs[k].first][pairs[k].second] = m.a[pairs[k].second][pairs[k].first] = true;
    fn(m);
  }
}

}  // namespace oracle
