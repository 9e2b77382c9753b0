#include "diii/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>

#include "diii/parallel.hpp"

namespace diii {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned k) { g_threads = k == 0 ? std::max(1u, std::thread::hardware_concurrency()) : k; }
unsigned thread_count() { return g_threads; }

int ClanSet::index_of(const Clan& c) const {
  auto key = c.to_string(TextFormat::Spaced);
  auto it = std::lower_bound(clans.begin(), clans.end(), key, [](const DiiiClan& a, const std::string& k) {
    return a.to_string(TextFormat::Spaced) < k;
  });
  if (it == clans.end() || it->clan() != c) return -1;
  return static_cast<int>(it - clans.begin());
}

namespace {

// All perfect matchings of the given positions (sorted ascending).
void matchings(std::vector<int>& rest, std::vector<std::pair<int, int>>& cur,
               const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  if (rest.empty()) {
    emit(cur);
    return;
  }
  int a = rest.front();
  for (std::size_t k = 1; k < rest.size(); ++k) {
    int b = rest[k];
    std::vector<int> next;
    next.reserve(rest.size() - 2);
    for (std::size_t t = 1; t < rest.size(); ++t) {
      if (t != k) next.push_back(rest[t]);
    }
    cur.emplace_back(a, b);
    matchings(next, cur, emit);
    cur.pop_back();
  }
}

// Every DIII clan whose first-half number positions are exactly `mask`.
std::vector<DiiiClan> clans_with_number_positions(int n, unsigned mask) {
  const int m = 2 * n;
  std::vector<int> numbered, signed_pos;
  for (int i = 1; i <= n; ++i) {
    if (mask & (1u << (i - 1))) {
      numbered.push_back(i);
    } else {
      signed_pos.push_back(i);
    }
  }
  std::vector<DiiiClan> out;
  std::vector<std::pair<int, int>> cur;
  matchings(numbered, cur, [&](const std::vector<std::pair<int, int>>& pairs) {
    const int r = static_cast<int>(pairs.size());
    for (unsigned types = 0; types < (1u << r); ++types) {
      std::vector<Symbol> base(m, Symbol::plus());
      int label = 0;
      int in_half = 0;
      for (int p = 0; p < r; ++p) {
        auto [a, b] = pairs[p];
        if (types & (1u << p)) {
          // In-half pair (a, b) and its mirror (m+1-b, m+1-a).
          ++in_half;
          base[a - 1] = base[b - 1] = Symbol::pair(++label);
          base[m - b] = base[m - a] = Symbol::pair(++label);
        } else {
          // Opposing straddling pairs (a, m+1-b) and (b, m+1-a).
          base[a - 1] = base[m - b] = Symbol::pair(++label);
          base[b - 1] = base[m - a] = Symbol::pair(++label);
        }
      }
      const int free = static_cast<int>(signed_pos.size());
      for (unsigned signs = 0; signs < (1u << free); ++signs) {
        if ((std::popcount(signs) + in_half) % 2 != 0) continue;
        std::vector<Symbol> s = base;
        for (int t = 0; t < free; ++t) {
          int i = signed_pos[t];
          Symbol sym = (signs & (1u << t)) ? Symbol::minus() : Symbol::plus();
          s[i - 1] = sym;
          s[m - i] = negated(sym);
        }
        out.emplace_back(Clan(std::move(s)));
      }
    }
  });
  return out;
}

}  // namespace

ClanSet enumerate_diii(int n) {
  ClanSet set;
  set.n = n;
  if (n <= 0) return set;
  if (n > 24) throw std::overflow_error("enumeration of n > 24 exceeds any practical memory bound");
  std::vector<unsigned> masks;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) % 2 == 0) masks.push_back(mask);
  }
  std::vector<std::vector<DiiiClan>> parts(masks.size());
  parallel_for(masks.size(), [&](std::size_t k) { parts[k] = clans_with_number_positions(n, masks[k]); });

  std::vector<std::pair<std::string, DiiiClan>> keyed;
  for (auto& part : parts) {
    for (auto& c : part) keyed.emplace_back(c.to_string(TextFormat::Spaced), std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  set.clans.reserve(keyed.size());
  for (auto& kv : keyed) set.clans.push_back(std::move(kv.second));
  return set;
}

Count count_by_pairs(int n, int r) {
  if (n < 1 || r < 0 || 2 * r > n) throw std::domain_error("count_by_pairs requires n >= 1 and 0 <= r <= n/2");
  // C(n, 2r) * (2r)!/r! is even when n = 2r >= 2, so the halving is exact.
  Count v = checked_mul(binomial(n, 2 * r), rising_product(r + 1, 2 * r));
  if (n == 2 * r) return v / 2;
  return checked_mul(v, checked_pow2(n - 2 * r - 1));
}

Count count_formula(int n) {
  if (n < 0) throw std::domain_error("n must be nonnegative");
  if (n == 0) return 1;
  Count total = 0;
  for (int r = 0; 2 * r <= n; ++r) total = checked_add(total, count_by_pairs(n, r));
  return total;
}

Count count_recurrence(int n) {
  if (n < 0) throw std::domain_error("n must be nonnegative");
  if (n == 0) return 1;
  if (n == 1) return 1;
  if (n == 2) return 3;
  Count prev2 = 1, prev1 = 3;
  for (int k = 3; k <= n; ++k) {
    Count next = checked_add(checked_mul(2, prev1), checked_mul(static_cast<Count>(2 * k - 2), prev2));
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

std::vector<DiiiClan> matchless_clans(int n) {
  auto all = clans_with_number_positions(n, 0);
  std::sort(all.begin(), all.end(), [](const DiiiClan& a, const DiiiClan& b) {
    return a.to_string(TextFormat::Spaced) < b.to_string(TextFormat::Spaced);
  });
  return all;
}

}  // namespace diii
