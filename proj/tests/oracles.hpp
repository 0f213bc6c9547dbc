#pragma once

// Independent reference implementations used only by the tests. None of this
// calls into the library's combinatorics beyond plain data types.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------------------
// Signed permutations of {±1..±n}, stored as images of 1..n.

using SignedPerm = std::vector<int>;

inline std::vector<SignedPerm> all_signed_perms(int n) {
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPerm> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      SignedPerm p = base;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) p[static_cast<std::size_t>(i)] = -p[static_cast<std::size_t>(i)];
      out.push_back(p);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

inline SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {  // a after b
  SignedPerm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int v = b[i];
    const int img = a[static_cast<std::size_t>(std::abs(v) - 1)];
    out[i] = v > 0 ? img : -img;
  }
  return out;
}

// Sorted list of signed cycle lengths (negative = negative cycle).
inline std::vector<int> signed_cycle_type(const SignedPerm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> out;
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s - 1)]) continue;
    int len = 0;
    int sign = 1;
    int x = s;
    while (!seen[static_cast<std::size_t>(x - 1)]) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      const int y = p[static_cast<std::size_t>(x - 1)];
      if (y < 0) sign = -sign;
      x = std::abs(y);
      ++len;
    }
    out.push_back(sign * len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Centralizer order of each class, from the class sizes |W| / |class|.
inline std::map<std::vector<int>, long> centralizer_orders(int n) {
  const auto all = all_signed_perms(n);
  std::map<std::vector<int>, long> sizes;
  for (const auto& p : all) ++sizes[signed_cycle_type(p)];
  for (auto& [k, v] : sizes) v = static_cast<long>(all.size()) / v;
  return sizes;
}

// ---------------------------------------------------------------------------

inline mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline mpz_class hook_length_count(const std::vector<int>& p) {
  int n = 0;
  for (int v : p) n += v;
  mpz_class prod = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      int leg = 0;
      for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++leg;
      prod *= p[i] - j + leg;
    }
  }
  return factorial(n) / prod;
}

inline mpz_class bitableaux_count(const std::vector<int>& a, const std::vector<int>& b) {
  int na = 0;
  int nb = 0;
  for (int v : a) na += v;
  for (int v : b) nb += v;
  return factorial(na + nb) / (factorial(na) * factorial(nb)) * hook_length_count(a) * hook_length_count(b);
}

// ---------------------------------------------------------------------------
// Unordered symbols of rank n (reduced, as sorted row pairs) found by trying
// every pair of subsets of {0..limit}.

inline std::set<std::pair<std::vector<int>, std::vector<int>>> brute_symbols(int n, int limit, bool kind_d) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  const int width = limit + 1;
  for (int ms = 0; ms < (1 << width); ++ms) {
    for (int mt = 0; mt < (1 << width); ++mt) {
      std::vector<int> s;
      std::vector<int> t;
      for (int i = 0; i < width; ++i) {
        if (ms & (1 << i)) s.push_back(i);
        if (mt & (1 << i)) t.push_back(i);
      }
      if ((ms & 1) && (mt & 1)) continue;  // not reduced
      const int d = static_cast<int>(s.size()) - static_cast<int>(t.size());
      if (kind_d ? (d % 4 != 0) : ((d % 4 + 4) % 4 != 1)) continue;
      const int len = static_cast<int>(s.size() + t.size());
      const int sum = std::accumulate(s.begin(), s.end(), 0) + std::accumulate(t.begin(), t.end(), 0);
      if (sum - (len - 1) * (len - 1) / 4 != n) continue;
      auto key = s.size() > t.size() || (s.size() == t.size() && s < t) ? std::pair{s, t} : std::pair{t, s};
      out.insert(key);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Seminormal matrix representation of the type B Hecke algebra with
// (T_i - u)(T_i + 1) = 0 for i >= 1 and (T_0 - Q)(T_0 + 1) = 0, Q in {u, 1},
// at a fixed rational u. Basis: standard bitableaux, recorded as the box
// sequence (side, row, col). The box holding k carries the Jucys-Murphy
// eigenvalue content Q u^{j-i} (alpha) or -u^{j-i} (beta).

struct Box {
  int side;  // 0 alpha, 1 beta
  int row;
  int col;
  friend bool operator==(const Box&, const Box&) = default;
};

class SeminormalRep {
 public:
  using Vec = std::vector<mpq_class>;

  SeminormalRep(const std::vector<int>& alpha, const std::vector<int>& beta, mpq_class u, bool q_is_u)
      : u_(std::move(u)), q_(q_is_u ? u_ : mpq_class(1)) {
    shape_[0] = alpha;
    shape_[1] = beta;
    std::vector<int> cur[2] = {std::vector<int>(alpha.size(), 0), std::vector<int>(beta.size(), 0)};
    std::vector<Box> path;
    build(cur, path);
    for (std::size_t i = 0; i < paths_.size(); ++i) index_[paths_[i]] = i;
  }

  std::size_t dim() const { return paths_.size(); }
  int n() const { return paths_.empty() ? 0 : static_cast<int>(paths_[0].size()); }

  // T_0 (i = 0) or T_i (1 <= i < n) applied to a vector.
  Vec apply(int i, const Vec& v) const {
    Vec out(v.size(), mpq_class(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      const auto& p = paths_[k];
      if (i == 0) {
        out[k] += v[k] * content(p[0]);
        continue;
      }
      const mpq_class c = content(p[static_cast<std::size_t>(i - 1)]);
      const mpq_class cn = content(p[static_cast<std::size_t>(i)]);
      const mpq_class a = (u_ - 1) * cn / (cn - c);
      out[k] += a * v[k];
      auto swapped = p;
      std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
      auto it = index_.find(swapped);
      if (it == index_.end()) continue;
      const std::size_t k2 = it->second;
      const mpq_class a2 = (u_ - 1) * c / (c - cn);
      const mpq_class b = k < k2 ? mpq_class(1) : a * a2 + u_;
      out[k2] += b * v[k];
    }
    return out;
  }

  // Inverse of a generator: T^{-1} = (T - (u-1)) / u, or (T - (Q-1)) / Q for T_0.
  Vec apply_inverse(int i, const Vec& v) const {
    const mpq_class p = i == 0 ? q_ : u_;
    Vec out = apply(i, v);
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = (out[k] - (p - 1) * v[k]) / p;
    return out;
  }

  // Trace of a word; generators listed left to right, entries < 0 mean the
  // inverse of generator -1 - entry.
  mpq_class trace(const std::vector<int>& word) const {
    mpq_class tr = 0;
    for (std::size_t k = 0; k < dim(); ++k) {
      Vec v(dim(), mpq_class(0));
      v[k] = 1;
      for (auto it = word.rbegin(); it != word.rend(); ++it) v = *it >= 0 ? apply(*it, v) : apply_inverse(-1 - *it, v);
      tr += v[k];
    }
    return tr;
  }

  bool words_agree(const std::vector<int>& w1, const std::vector<int>& w2) const {
    for (std::size_t k = 0; k < dim(); ++k) {
      Vec v1(dim(), mpq_class(0));
      v1[k] = 1;
      Vec v2 = v1;
      for (auto it = w1.rbegin(); it != w1.rend(); ++it) v1 = apply(*it, v1);
      for (auto it = w2.rbegin(); it != w2.rend(); ++it) v2 = apply(*it, v2);
      if (v1 != v2) return false;
    }
    return true;
  }

 private:
  mpq_class upow(int e) const {
    mpq_class r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= u_;
    return e >= 0 ? r : mpq_class(1 / r);
  }

  mpq_class content(const Box& b) const {
    const mpq_class p = upow(b.col - b.row);
    return b.side == 0 ? mpq_class(q_ * p) : mpq_class(-p);
  }

  void build(std::vector<int> (&cur)[2], std::vector<Box>& path) {
    bool done = true;
    for (int s = 0; s < 2; ++s) {
      for (std::size_t r = 0; r < shape_[s].size(); ++r) {
        if (cur[s][r] == shape_[s][r]) continue;
        done = false;
        if (r > 0 && cur[s][r - 1] <= cur[s][r]) continue;
        ++cur[s][r];
        path.push_back({s, static_cast<int>(r) + 1, cur[s][r]});
        build(cur, path);
        path.pop_back();
        --cur[s][r];
      }
    }
    if (done) paths_.push_back(path);
  }

  struct PathLess {
    bool operator()(const std::vector<Box>& a, const std::vector<Box>& b) const {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const Box& x, const Box& y) {
        return std::tie(x.side, x.row, x.col) < std::tie(y.side, y.row, y.col);
      });
    }
  };

  mpq_class u_;
  mpq_class q_;
  std::vector<int> shape_[2];
  std::vector<std::vector<Box>> paths_;
  std::map<std::vector<Box>, std::size_t, PathLess> index_;
};

// Generator word of T_Br from signed cycle lengths. Type B: a barred segment
// starting at k is L_k T_k ... T_{l-1} with L_1 = T_0, L_k = T_{k-1} L_{k-1}
// T_{k-1}. Type D (generators inside the Q = 1 algebra): T'_0 = T_0 T_1 T_0,
// L'_1 = 1, L'_2 = T'_0 T_1, L'_k = T_{k-1} L'_{k-1} T_{k-1}.
inline std::vector<int> br_word(const std::vector<int>& signed_cycles, bool kind_d) {
  std::vector<int> word;
  int start = 1;
  for (int c : signed_cycles) {
    const int len = std::abs(c);
    const int end = start + len - 1;
    if (c < 0) {
      std::vector<int> l;
      if (!kind_d) {
        l = {0};
        for (int k = 2; k <= start; ++k) {
          std::vector<int> next = {k - 1};
          next.insert(next.end(), l.begin(), l.end());
          next.push_back(k - 1);
          l = std::move(next);
        }
      } else if (start >= 2) {
        l = {0, 1, 0, 1};
        for (int k = 3; k <= start; ++k) {
          std::vector<int> next = {k - 1};
          next.insert(next.end(), l.begin(), l.end());
          next.push_back(k - 1);
          l = std::move(next);
        }
      }
      word.insert(word.end(), l.begin(), l.end());
    }
    for (int i = start; i < end; ++i) word.push_back(i);
    start = end + 1;
  }
  return word;
}

}  // namespace oracle
