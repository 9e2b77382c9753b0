// Brute-force reference implementations used only by the tests. None of
// these call into the library's validity checks or generators.
#ifndef DIII_TESTS_ORACLES_HPP
#define DIII_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "diii/qsqrt2.hpp"

namespace oracle {

// A raw clan: 0 = '+', -1 = '-', k > 0 = pair label.
using Raw = std::vector<int>;

inline std::string text(const Raw& r) {
  std::string s;
  for (int v : r) s += v == 0 ? "+" : v == -1 ? "-" : std::to_string(v);
  return s;
}

// Relabel by first occurrence.
inline Raw canonical(const Raw& r) {
  std::map<int, int> relabel;
  Raw out;
  for (int v : r) {
    if (v > 0) {
      auto it = relabel.find(v);
      if (it == relabel.end()) it = relabel.emplace(v, static_cast<int>(relabel.size()) + 1).first;
      out.push_back(it->second);
    } else {
      out.push_back(v);
    }
  }
  return out;
}

inline int mate(const Raw& r, int pos) {  // 0-indexed
  for (int k = 0; k < static_cast<int>(r.size()); ++k) {
    if (k != pos && r[k] == r[pos]) return k;
  }
  return -1;
}

// DIII test written directly from the three defining conditions.
inline bool is_diii(const Raw& r) {
  const int m = static_cast<int>(r.size());
  const int n = m / 2;
  // skew-symmetry: reverse of the sign-negation relabels to the same clan
  Raw rev;
  for (int k = m - 1; k >= 0; --k) rev.push_back(r[k] == 0 ? -1 : r[k] == -1 ? 0 : r[k]);
  if (canonical(rev) != canonical(r)) return false;
  for (int k = 0; k < m; ++k) {
    if (r[k] > 0 && mate(r, k) == m - 1 - k) return false;
  }
  int minus = 0, inner = 0;
  for (int k = 0; k < n; ++k) {
    if (r[k] == -1) ++minus;
    if (r[k] > 0 && mate(r, k) > k && mate(r, k) < n) ++inner;
  }
  return (minus + inner) % 2 == 0;
}

// Every (n,n)-clan: a partial matching of 2n points plus signs on the rest,
// balanced, filtered by is_diii. Returns canonical texts, sorted.
inline std::vector<std::string> diii_clans(int n) {
  const int m = 2 * n;
  std::set<std::string> out;
  Raw cur(m, -2);
  std::function<void(int, int)> rec = [&](int pos, int label) {
    if (pos == m) {
      int plus = 0, minus = 0;
      for (int v : cur) plus += v == 0, minus += v == -1;
      if (plus == minus && is_diii(cur)) out.insert(text(canonical(cur)));
      return;
    }
    if (cur[pos] != -2) return rec(pos + 1, label);
    for (int s : {0, -1}) {
      cur[pos] = s;
      rec(pos + 1, label);
    }
    for (int q = pos + 1; q < m; ++q) {
      if (cur[q] != -2) continue;
      cur[pos] = cur[q] = label;
      rec(pos + 1, label + 1);
      cur[q] = -2;
    }
    cur[pos] = -2;
  };
  rec(0, 1);
  return {out.begin(), out.end()};
}

// All permutations of size m symmetric under both diagonal reflections,
// by filtering all involutions.
inline std::vector<std::vector<int>> doubly_symmetric(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(m, 0);
  std::function<void()> rec = [&] {
    int c = 0;
    while (c < m && p[c] != 0) ++c;
    if (c == m) {
      bool ok = true;
      for (int k = 0; k < m; ++k) {
        if (p[m - p[k]] != m - k) ok = false;  // antidiagonal, 1-indexed values
      }
      if (ok) out.push_back(p);
      return;
    }
    p[c] = c + 1;
    rec();
    for (int d = c + 1; d < m; ++d) {
      if (p[d] != 0) continue;
      p[c] = d + 1;
      p[d] = c + 1;
      rec();
      p[d] = 0;
    }
    p[c] = 0;
  };
  rec();
  return out;
}

// Same count by filtering every permutation; practical for m <= 9.
inline long doubly_symmetric_by_permutations(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 1);
  long count = 0;
  do {
    bool ok = true;
    for (int k = 0; k < m && ok; ++k) {
      ok = p[p[k] - 1] == k + 1 && p[m - p[k]] == m - k;
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Unordered pairs ({A, B}, p') with {A, B} a two-block partition of 1..n
// and p' a partition into blocks of size <= 2 meeting A and B at most once
// each. Encoded as strings for set comparison.
inline std::set<std::string> partition_pairs(int n) {
  std::set<std::string> out;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // 1 in A: one representative per unordered pair
    std::vector<int> a, b;
    for (int k = 1; k <= n; ++k) ((mask >> (k - 1)) & 1u ? a : b).push_back(k);
    // partial matchings between a and b
    std::function<void(std::size_t, std::vector<bool>&, std::string)> rec = [&](std::size_t i, std::vector<bool>& used,
                                                                                 std::string acc) {
      if (i == a.size()) {
        out.insert(acc);
        return;
      }
      rec(i + 1, used, acc);
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        rec(i + 1, used, acc + "(" + std::to_string(a[i]) + "," + std::to_string(b[j]) + ")");
        used[j] = false;
      }
    };
    std::string head;
    for (int k : a) head += std::to_string(k) + ".";
    std::vector<bool> used(b.size(), false);
    rec(0, used, head + "|");
  }
  return out;
}

struct Step {
  char dir;
  int label;
};

// Every (n,n) Delannoy path with D labels drawn from 2..2n.
inline std::vector<std::vector<Step>> labeled_delannoy_words(int n) {
  std::vector<std::vector<Step>> out;
  std::vector<Step> cur;
  std::function<void(int, int)> rec = [&](int x, int y) {
    if (x == n && y == n) {
      out.push_back(cur);
      return;
    }
    if (y < n) {
      cur.push_back({'N', 1});
      rec(x, y + 1);
      cur.pop_back();
    }
    if (x < n) {
      cur.push_back({'E', 1});
      rec(x + 1, y);
      cur.pop_back();
    }
    if (x < n && y < n) {
      for (int l = 2; l <= 2 * n; ++l) {
        cur.push_back({'D', l});
        rec(x + 1, y + 1);
        cur.pop_back();
      }
    }
  };
  rec(0, 0);
  return out;
}

inline std::string word_text(const std::vector<Step>& w) {
  std::string s;
  for (const auto& st : w) {
    if (!s.empty()) s += ' ';
    s += st.dir;
    if (st.dir == 'D') s += ":" + std::to_string(st.label);
  }
  return s;
}

// Leibniz expansion.
inline diii::QSqrt2 leibniz_det(const diii::QMatrix& a) {
  const int m = static_cast<int>(a.rows());
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  diii::QSqrt2 total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) inversions += p[i] > p[j];
    }
    diii::QSqrt2 term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < m && !term.is_zero(); ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace oracle

#endif  // DIII_TESTS_ORACLES_HPP
