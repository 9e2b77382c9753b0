#include "diii/weak_order.hpp"

#include <algorithm>
#include <stdexcept>

#include "diii/parallel.hpp"

namespace diii {

LengthStats clan_length(const DiiiClan& dc) {
  const Clan& c = dc.clan();
  LengthStats out;
  auto pairs = mate_pairs(c);
  int total = 0;
  for (auto [i, j] : pairs) {
    PairStats p{i, j, j - i, 0};
    for (auto [u, t] : pairs) {
      if (u < i && i < t && t < j) ++p.weave;
    }
    total += p.spread - p.weave;
    out.pairs.push_back(p);
  }
  out.z = classify_pairs(dc).z();
  const int twice = total - out.z;
  if (twice < 0 || twice % 2 != 0) {
    throw std::logic_error("length formula produced a non-integer for " + c.to_string());
  }
  out.length = twice / 2;
  return out;
}

Count RankPolynomial::total() const {
  Count s = 0;
  for (Count c : coeffs) s = checked_add(s, c);
  return s;
}

std::string RankPolynomial::to_string() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Count c = coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 't';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace {

void trim(std::vector<Count>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

std::vector<Count> poly_add(std::vector<Count> a, const std::vector<Count>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] = checked_add(a[k], b[k]);
  trim(a);
  return a;
}

std::vector<Count> poly_mul(const std::vector<Count>& a, const std::vector<Count>& b) {
  std::vector<Count> out(a.size() + b.size() - 1, 0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) out[x + y] = checked_add(out[x + y], checked_mul(a[x], b[y]));
  }
  trim(out);
  return out;
}

DiiiClan checked_diii(const Clan& c) { return DiiiClan(c); }

}  // namespace

std::vector<ReflectionCandidate> reflection_candidates(int i, const DiiiClan& dc) {
  const Clan& c = dc.clan();
  const int n = c.n();
  const int m = c.size();
  if (i < 1 || i > n) throw std::out_of_range("reflection index must be in 1..n");
  std::vector<ReflectionCandidate> out;
  if (n < 2) return out;

  auto swapped = [&](int a, int b, int x, int y) {
    std::vector<Symbol> s = c.symbols();
    std::swap(s[a - 1], s[b - 1]);
    std::swap(s[x - 1], s[y - 1]);
    return Clan(std::move(s));
  };
  const int fresh = c.max_label();

  if (i < n) {
    out.push_back({ReflectionCandidate::Kind::Swap, swapped(i, i + 1, m - i, m + 1 - i)});
    const Symbol a = c.symbol(i), b = c.symbol(i + 1);
    if (a.is_sign() && b.is_sign() && a != b) {
      std::vector<Symbol> s = c.symbols();
      s[i - 1] = s[i] = Symbol::pair(fresh + 1);
      s[m - i - 1] = s[m - i] = Symbol::pair(fresh + 2);
      out.push_back({ReflectionCandidate::Kind::Collapse, Clan(std::move(s))});
    }
  } else {
    out.push_back({ReflectionCandidate::Kind::Swap, swapped(n - 1, n + 1, n, n + 2)});
    std::string mid;
    for (int k = n - 1; k <= n + 2; ++k) {
      const Symbol s = c.symbol(k);
      mid += s.kind == Symbol::Kind::Plus ? '+' : s.kind == Symbol::Kind::Minus ? '-' : 'n';
    }
    if (mid == "++--" || mid == "--++") {
      std::vector<Symbol> s = c.symbols();
      s[n - 2] = s[n] = Symbol::pair(fresh + 1);
      s[n - 1] = s[n + 1] = Symbol::pair(fresh + 2);
      out.push_back({ReflectionCandidate::Kind::Collapse, Clan(std::move(s))});
    }
  }
  return out;
}

DiiiClan apply_reflection(int i, const DiiiClan& c) {
  const int target = length(c) + 1;
  const DiiiClan* accepted = nullptr;
  std::vector<DiiiClan> valid;
  auto candidates = reflection_candidates(i, c);
  valid.reserve(candidates.size());
  for (auto& cand : candidates) {
    if (!is_diii(cand.clan)) continue;
    valid.push_back(checked_diii(cand.clan));
    if (length(valid.back()) != target) continue;
    if (accepted != nullptr && !(*accepted == valid.back())) {
      throw std::logic_error("two ascent candidates for s_" + std::to_string(i) + " on " + c.to_string());
    }
    accepted = &valid.back();
  }
  return accepted ? *accepted : c;
}

int coxeter_order(int n, int i, int j) {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  const bool chain = j == i + 1 && j <= n - 1;
  const bool fork = i == n - 2 && j == n;
  return chain || fork ? 3 : 2;
}

std::vector<int> WeakOrderPoset::rank_sizes() const {
  std::vector<int> out;
  for (int len : lengths) {
    if (len >= static_cast<int>(out.size())) out.resize(len + 1, 0);
    ++out[len];
  }
  return out;
}

std::vector<int> WeakOrderPoset::maximal_nodes() const {
  std::vector<bool> has_out(nodes.size(), false);
  for (const auto& e : covers) has_out[e.from] = true;
  std::vector<int> out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!has_out[k]) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<int> WeakOrderPoset::minimal_nodes() const {
  std::vector<bool> has_in(nodes.size(), false);
  for (const auto& e : covers) has_in[e.to] = true;
  std::vector<int> out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!has_in[k]) out.push_back(static_cast<int>(k));
  }
  return out;
}

WeakOrderPoset weak_order_poset(int n) {
  WeakOrderPoset poset;
  poset.n = n;
  poset.nodes = enumerate_diii(n);
  const std::size_t count = poset.nodes.size();

  std::unordered_map<Clan, int> index;
  index.reserve(count);
  for (std::size_t k = 0; k < count; ++k) index.emplace(poset.nodes.clans[k].clan(), static_cast<int>(k));

  poset.lengths.assign(count, 0);
  std::vector<std::vector<CoverEdge>> out(count);
  parallel_for(count, [&](std::size_t k) {
    const DiiiClan& c = poset.nodes.clans[k];
    poset.lengths[k] = length(c);
    for (int i = 1; i <= n; ++i) {
      DiiiClan up = apply_reflection(i, c);
      if (up == c) continue;
      out[k].push_back({static_cast<int>(k), index.at(up.clan()), i});
    }
  });
  for (auto& edges : out) poset.covers.insert(poset.covers.end(), edges.begin(), edges.end());
  std::sort(poset.covers.begin(), poset.covers.end(), [](const CoverEdge& a, const CoverEdge& b) {
    return std::tie(a.from, a.reflection, a.to) < std::tie(b.from, b.reflection, b.to);
  });
  return poset;
}

RankPolynomial rank_polynomial(const WeakOrderPoset& poset) {
  RankPolynomial p;
  for (int len : poset.lengths) {
    if (len >= static_cast<int>(p.coeffs.size())) p.coeffs.resize(len + 1, 0);
    ++p.coeffs[len];
  }
  if (p.coeffs.empty()) p.coeffs.push_back(0);
  trim(p.coeffs);
  return p;
}

RankPolynomial rank_polynomial(const ClanSet& clans) {
  RankPolynomial p;
  for (const auto& c : clans) {
    int len = length(c);
    if (len >= static_cast<int>(p.coeffs.size())) p.coeffs.resize(len + 1, 0);
    ++p.coeffs[len];
  }
  if (p.coeffs.empty()) p.coeffs.push_back(0);
  trim(p.coeffs);
  return p;
}

RankPolynomial rank_poly_recurrence(int n) {
  if (n < 1) throw std::domain_error("rank polynomial recurrence needs n >= 1");
  std::vector<Count> prev2{1};     // A_1
  std::vector<Count> prev1{2, 1};  // A_2
  if (n == 1) return {prev2};
  for (int k = 3; k <= n; ++k) {
    std::vector<Count> mult(2 * k - 2, 0);
    for (int e = 1; e <= k - 1; ++e) ++mult[e];
    for (int e = k - 1; e <= 2 * k - 3; ++e) ++mult[e];
    auto next = poly_add(poly_mul({2}, prev1), poly_mul(mult, prev2));
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return {prev1};
}

DiiiClan maximal_clan(int n) {
  if (n < 1) throw std::domain_error("maximal_clan needs n >= 1");
  const int m = 2 * n;
  std::vector<Symbol> s(m, Symbol::plus());
  int label = 0;
  int j = 0;
  for (; 2 * j + 2 <= n; ++j) {
    int a = ++label, b = ++label;
    s[2 * j] = s[m - 2 * j - 2] = Symbol::pair(a);      // (2j+1, 2n-2j-1)
    s[2 * j + 1] = s[m - 2 * j - 1] = Symbol::pair(b);  // (2j+2, 2n-2j)
  }
  if (n % 2 == 1) {
    s[n - 1] = Symbol::plus();
    s[n] = Symbol::minus();
  }
  DiiiClan out{Clan(std::move(s))};
  if (length(out) != n * (n - 1) / 2) throw std::logic_error("maximal clan has unexpected length");
  return out;
}

}  // namespace diii
