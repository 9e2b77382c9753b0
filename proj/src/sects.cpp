#include "diii/sects.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "diii/weak_order.hpp"

namespace diii {

SchubertSubset SchubertSubset::make(int n, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw ClanError("subset has a repeated element");
  }
  if (static_cast<int>(elements.size()) != n) {
    throw ClanError("subset must have exactly n = " + std::to_string(n) + " elements");
  }
  std::vector<bool> in(2 * n + 1, false);
  for (int e : elements) {
    if (e < 1 || e > 2 * n) throw ClanError("subset element " + std::to_string(e) + " outside 1.." + std::to_string(2 * n));
    in[e] = true;
  }
  int missing = 0;
  for (int i = 1; i <= n; ++i) {
    if (in[i] && in[2 * n + 1 - i]) {
      throw ClanError("subset contains both " + std::to_string(i) + " and " + std::to_string(2 * n + 1 - i));
    }
    if (!in[i]) ++missing;
  }
  if (missing % 2 != 0) throw ClanError("subset misses an odd number of points in 1..n");
  return {n, std::move(elements)};
}

DiiiClan subset_to_base_clan(const SchubertSubset& s) {
  std::vector<Symbol> sym(2 * s.n, Symbol::minus());
  for (int e : s.elements) sym[e - 1] = Symbol::plus();
  return DiiiClan(Clan(std::move(sym)));
}

SchubertSubset base_clan_to_subset(const DiiiClan& b) {
  if (!b.clan().is_matchless()) throw ClanError("base clan must be matchless: " + b.to_string());
  std::vector<int> el;
  for (int k = 1; k <= b.clan().size(); ++k) {
    if (b.clan().symbol(k).kind == Symbol::Kind::Plus) el.push_back(k);
  }
  return SchubertSubset::make(b.n(), std::move(el));
}

std::vector<int> Sect::longest() const {
  std::vector<int> out;
  int best = -1;
  for (std::size_t k = 0; k < members.size(); ++k) {
    int len = length(members[k]);
    if (len > best) {
      best = len;
      out.clear();
    }
    if (len == best) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<Sect> sects(const ClanSet& clans) {
  std::map<std::string, Sect> by_base;
  for (const auto& c : clans) {
    DiiiClan b = base_clan(c);
    auto key = b.to_string(TextFormat::Spaced);
    auto it = by_base.find(key);
    if (it == by_base.end()) it = by_base.emplace(key, Sect{b, {}}).first;
    it->second.members.push_back(c);
  }
  std::vector<Sect> out;
  out.reserve(by_base.size());
  for (auto& kv : by_base) out.push_back(std::move(kv.second));
  return out;
}

std::vector<Sect> sects(int n) { return sects(enumerate_diii(n)); }

DiiiClan dense_base_clan(int n) {
  if (n < 1) throw std::domain_error("dense_base_clan needs n >= 1");
  std::vector<Symbol> s(2 * n);
  for (int i = 1; i <= n; ++i) s[i - 1] = Symbol::minus();
  if (n % 2 == 1) s[n - 1] = Symbol::plus();
  for (int i = 1; i <= n; ++i) s[2 * n - i] = negated(s[i - 1]);
  return DiiiClan(Clan(std::move(s)));
}

bool in_big_sect(const DiiiClan& c) { return base_clan(c) == dense_base_clan(c.n()); }

Sect big_sect(int n) {
  Sect s{dense_base_clan(n), {}};
  for (const auto& c : enumerate_diii(n)) {
    if (in_big_sect(c)) s.members.push_back(c);
  }
  return s;
}

bool PartialFpfInvolution::is_valid() const {
  const int m = n();
  for (int i = 1; i <= m; ++i) {
    int j = (*this)(i);
    if (j < 0 || j > m) return false;
    if (j == 0) continue;
    if (j == i || (*this)(j) != i) return false;
  }
  return true;
}

std::string PartialFpfInvolution::to_string() const {
  std::string out;
  for (int i = 1; i <= n(); ++i) {
    int j = (*this)(i);
    if (j > i) {
      if (!out.empty()) out += ',';
      out += std::to_string(i) + ':' + std::to_string(j);
    }
  }
  return out;
}

PartialFpfInvolution PartialFpfInvolution::parse(int n, std::string_view text) {
  if (n < 1) throw ClanError("n must be positive");
  PartialFpfInvolution x{std::vector<int>(n, 0)};
  auto number = [&](std::string_view t) {
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) throw ClanError("bad number '" + std::string(t) + "' in map");
    if (v < 1 || v > n) throw ClanError("map point " + std::to_string(v) + " outside 1.." + std::to_string(n));
    return v;
  };
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      auto colon = item.find(':');
      if (colon == std::string_view::npos) throw ClanError("map entry '" + std::string(item) + "' lacks ':'");
      int i = number(item.substr(0, colon)), j = number(item.substr(colon + 1));
      if (i == j) throw ClanError("fixed point " + std::to_string(i) + " in map");
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        if (x.x[a - 1] != 0 && x.x[a - 1] != b) throw ClanError("point " + std::to_string(a) + " mapped twice");
        x.x[a - 1] = b;
      }
    }
    start = end + 1;
  }
  return x;
}

PartialFpfInvolution clan_to_pfpf(const DiiiClan& dc) {
  if (!in_big_sect(dc)) throw ClanError(dc.to_string() + " is not in the big sect");
  const Clan& c = dc.clan();
  const int n = c.n();
  PartialFpfInvolution x{std::vector<int>(n, 0)};
  for (auto [i, j] : mate_pairs(c)) {
    if (i > n) continue;
    if (j > n) {
      x.x[i - 1] = 2 * n + 1 - j;
      x.x[2 * n - j] = i;
    } else if (j == n) {
      x.x[i - 1] = n;
      x.x[n - 1] = i;
    } else {
      throw ClanError(dc.to_string() + " has a same-half pair not ending at n");
    }
  }
  return x;
}

DiiiClan pfpf_to_clan(const PartialFpfInvolution& x) {
  if (!x.is_valid()) throw ClanError("not a partial fixed-point-free involution: " + x.to_string());
  const int n = x.n();
  const int m = 2 * n;
  std::vector<Symbol> s(m, Symbol::plus());
  int label = 0;
  for (int i = 1; i <= n; ++i) {
    int j = x(i);
    if (j == 0) {
      s[i - 1] = (i == n && n % 2 == 1) ? Symbol::plus() : Symbol::minus();
      s[m - i] = negated(s[i - 1]);
    } else if (i < j) {
      if (j == n && n % 2 == 1) {
        s[i - 1] = s[n - 1] = Symbol::pair(++label);
        s[n] = s[m - i] = Symbol::pair(++label);
      } else {
        s[i - 1] = s[m - j] = Symbol::pair(++label);
        s[j - 1] = s[m - i] = Symbol::pair(++label);
      }
    }
  }
  DiiiClan out{Clan(std::move(s))};
  if (!in_big_sect(out)) throw std::logic_error("decoded clan " + out.to_string() + " left the big sect");
  return out;
}

Count epsilon_count(int n) {
  if (n < 0) throw std::domain_error("n must be nonnegative");
  Count total = 0;
  for (int r = 0; 2 * r <= n; ++r) {
    // C(n,2r) * (2r)!/r! / 2^r: the last factor is the number of perfect
    // matchings on 2r points, an integer.
    Count matchings = rising_product(r + 1, 2 * r) >> r;
    total = checked_add(total, checked_mul(binomial(n, 2 * r), matchings));
  }
  return total;
}

Count epsilon_recurrence(int n) {
  if (n < 0) throw std::domain_error("n must be nonnegative");
  Count prev2 = 1, prev1 = 1;
  if (n == 0) return 1;
  for (int k = 2; k <= n; ++k) {
    Count next = checked_add(prev1, checked_mul(static_cast<Count>(k - 1), prev2));
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

}  // namespace diii
