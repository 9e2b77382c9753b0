#include "diii/rooks.hpp"

#include <algorithm>

namespace diii {

Pyramid make_pyramid(int n, std::vector<Rook> rooks) {
  std::sort(rooks.begin(), rooks.end());
  return {n, std::move(rooks)};
}

bool Pyramid::is_valid() const {
  if (n < 1) return false;
  std::vector<int> seen(n + 1, 0);
  for (const auto& r : rooks) {
    if (r.i < 1 || r.i > r.j || r.j > n) return false;
    ++seen[r.i];
    if (r.j != r.i) ++seen[r.j];
  }
  for (int k = 1; k <= n; ++k) {
    if (seen[k] != 1) return false;
  }
  return true;
}

Pyramid Pyramid::mirrored() const {
  std::vector<Rook> out = rooks;
  for (auto& r : out) r.side = other(r.side);
  return make_pyramid(n, std::move(out));
}

Pyramid clan_to_pyramid(const DiiiClan& dc) {
  const Clan& c = dc.clan();
  const int n = c.n();
  const int m = 2 * n;
  Side x = Side::L;
  std::vector<Rook> rooks;
  for (int i = n; i >= 1; --i) {
    const Symbol s = c.symbol(i);
    if (s.kind == Symbol::Kind::Plus) {
      rooks.push_back({x, i, i});
    } else if (s.kind == Symbol::Kind::Minus) {
      x = other(x);
      rooks.push_back({x, i, i});
    } else {
      const int j = c.mate(i);
      if (j > n && m + 1 - j > i) {
        rooks.push_back({x, i, m + 1 - j});
      } else if (i < j && j <= n) {
        x = other(x);
        rooks.push_back({x, i, j});
      }
    }
  }
  return make_pyramid(n, std::move(rooks));
}

Clan decode_pyramid(const Pyramid& p) {
  if (!p.is_valid()) throw ClanError("pyramid does not cover each of 1..n exactly once");
  const int n = p.n;
  const int m = 2 * n;
  std::vector<const Rook*> at_row(n + 1, nullptr);
  for (const auto& r : p.rooks) at_row[r.i] = &r;

  std::vector<Symbol> s(m, Symbol::plus());
  int label = 0;
  Side x = Side::L;
  for (int i = n; i >= 1; --i) {
    const Rook* r = at_row[i];
    if (r == nullptr) continue;  // i is the larger coordinate of a rook in a lower row
    if (r->diagonal()) {
      if (r->side == x) {
        s[i - 1] = Symbol::plus();
      } else {
        x = other(x);
        s[i - 1] = Symbol::minus();
      }
      s[m - i] = negated(s[i - 1]);
      continue;
    }
    const int a = r->i, b = r->j;
    if (r->side == x) {
      s[a - 1] = s[m - b] = Symbol::pair(++label);
      s[b - 1] = s[m - a] = Symbol::pair(++label);
    } else {
      x = other(x);
      s[a - 1] = s[b - 1] = Symbol::pair(++label);
      s[m - b] = s[m - a] = Symbol::pair(++label);
    }
  }
  return Clan(std::move(s));
}

DiiiClan pyramid_to_clan(const Pyramid& p) {
  Clan c = decode_pyramid(p);
  auto why = diii_violation(c);
  if (!why.empty()) throw ClanError("pyramid decodes to " + c.to_string() + ", which violates " + why + "; reflect pyramid");
  return DiiiClan(std::move(c));
}

bool RookPlacement::is_permutation() const {
  if (static_cast<int>(perm.size()) != size) return false;
  std::vector<bool> used(size + 1, false);
  for (int v : perm) {
    if (v < 1 || v > size || used[v]) return false;
    used[v] = true;
  }
  return true;
}

bool RookPlacement::is_doubly_symmetric() const {
  if (!is_permutation()) return false;
  const int m = size;
  for (int c = 1; c <= m; ++c) {
    const int r = (*this)(c);
    if ((*this)(r) != c) return false;
    if ((*this)(m + 1 - r) != m + 1 - c) return false;
  }
  return true;
}

RookPlacement pyramid_to_placement(const Pyramid& p) {
  if (!p.is_valid()) throw ClanError("pyramid does not cover each of 1..n exactly once");
  const int m = 2 * p.n;
  RookPlacement out{m, std::vector<int>(m, 0)};
  auto put = [&](int col, int row) {
    int& slot = out.perm[col - 1];
    if (slot != 0 && slot != row) throw ClanError("pyramid unfolds to attacking rooks");
    slot = row;
  };
  for (const auto& r : p.rooks) {
    const int col = r.side == Side::L ? r.j : m + 1 - r.j;
    const int row = r.i;
    put(col, row);
    put(row, col);
    put(m + 1 - row, m + 1 - col);
    put(m + 1 - col, m + 1 - row);
  }
  if (!out.is_doubly_symmetric()) throw ClanError("pyramid does not unfold to a full placement");
  return out;
}

Pyramid placement_pyramid(const RookPlacement& r) {
  if (r.size % 2 != 0) throw ClanError("placement size must be even");
  if (!r.is_doubly_symmetric()) throw ClanError("placement is not symmetric across both diagonals");
  const int m = r.size;
  const int n = m / 2;
  std::vector<Rook> rooks;
  for (int col = 1; col <= m; ++col) {
    const int row = r(col);
    if (row > col || row > m + 1 - col) continue;
    if (col <= n) {
      rooks.push_back({Side::L, row, col});
    } else {
      rooks.push_back({Side::R, row, m + 1 - col});
    }
  }
  return make_pyramid(n, std::move(rooks));
}

DiiiClan placement_to_clan(const RookPlacement& r) {
  Pyramid p = placement_pyramid(r);
  Clan a = decode_pyramid(p);
  Clan b = decode_pyramid(p.mirrored());
  const bool ok_a = is_diii(a), ok_b = is_diii(b);
  if (ok_a == ok_b) throw std::logic_error("expected exactly one pyramid of the placement to decode to a DIII clan");
  return DiiiClan(ok_a ? std::move(a) : std::move(b));
}

RookPlacement clan_to_placement(const DiiiClan& c) { return pyramid_to_placement(clan_to_pyramid(c)); }

namespace {

void extend_placements(std::vector<int>& perm, std::vector<RookPlacement>& out) {
  const int m = static_cast<int>(perm.size());
  int c = 1;
  while (c <= m && perm[c - 1] != 0) ++c;
  if (c > m) {
    out.push_back({m, perm});
    return;
  }
  for (int r = 1; r <= m; ++r) {
    // The rook (c, r) forces its images under both reflections.
    const int cells[4][2] = {{c, r}, {r, c}, {m + 1 - r, m + 1 - c}, {m + 1 - c, m + 1 - r}};
    std::vector<int> trial = perm;
    bool ok = true;
    for (const auto& cell : cells) {
      int& slot = trial[cell[0] - 1];
      if (slot != 0 && slot != cell[1]) ok = false;
      slot = cell[1];
    }
    if (!ok) continue;
    std::vector<bool> used(m + 1, false);
    for (int v : trial) {
      if (v != 0 && used[v]) ok = false;
      if (v != 0) used[v] = true;
    }
    if (ok) extend_placements(trial, out);
  }
}

}  // namespace

std::vector<RookPlacement> doubly_symmetric_placements(int m) {
  std::vector<RookPlacement> out;
  if (m < 1) return out;
  std::vector<int> perm(m, 0);
  extend_placements(perm, out);
  std::sort(out.begin(), out.end());
  return out;
}

RookPlacement rotate_placement(const RookPlacement& r) {
  RookPlacement out = r;
  for (int& v : out.perm) v = r.size + 1 - v;
  return out;
}

RookPlacement extend_odd(const RookPlacement& r) {
  if (r.size % 2 != 0) throw ClanError("extend_odd needs an even placement");
  const int n = r.size / 2;
  auto shift = [n](int k) { return k <= n ? k : k + 1; };
  RookPlacement out{r.size + 1, std::vector<int>(r.size + 1, 0)};
  for (int c = 1; c <= r.size; ++c) out.perm[shift(c) - 1] = shift(r(c));
  out.perm[n] = n + 1;
  return out;
}

RookPlacement shrink_odd(const RookPlacement& r) {
  if (r.size % 2 != 1) throw ClanError("shrink_odd needs an odd placement");
  const int n = r.size / 2;
  if (r(n + 1) != n + 1) throw ClanError("odd placement has no central rook");
  auto unshift = [n](int k) { return k <= n ? k : k - 1; };
  RookPlacement out{r.size - 1, std::vector<int>(r.size - 1, 0)};
  for (int c = 1; c <= r.size; ++c) {
    if (c != n + 1) out.perm[unshift(c) - 1] = unshift(r(c));
  }
  return out;
}

std::pair<Involution, Involution> signed_involution_pair(const RookPlacement& r) {
  if (!r.is_doubly_symmetric()) throw ClanError("placement is not symmetric across both diagonals");
  Involution v{r.perm};
  Involution w{rotate_placement(r).perm};
  if (w < v) std::swap(v, w);
  return {std::move(v), std::move(w)};
}

bool PartitionPair::is_valid() const {
  if (n < 1 || left.empty() || right.empty()) return false;
  std::vector<int> block(n + 1, 0);
  for (int k : left) {
    if (k < 1 || k > n || block[k]) return false;
    block[k] = 1;
  }
  for (int k : right) {
    if (k < 1 || k > n || block[k]) return false;
    block[k] = 2;
  }
  std::vector<bool> covered(n + 1, false);
  for (const auto& b : pprime) {
    if (b.empty() || b.size() > 2) return false;
    for (int k : b) {
      if (k < 1 || k > n || covered[k]) return false;
      covered[k] = true;
    }
    if (b.size() == 2 && block[b[0]] == block[b[1]]) return false;
  }
  for (int k = 1; k <= n; ++k) {
    if (!block[k] || !covered[k]) return false;
  }
  return true;
}

PartitionPair PartitionPair::swapped() const {
  PartitionPair out = *this;
  std::swap(out.left, out.right);
  return out;
}

PartitionPair pyramid_to_partition_pair(const Pyramid& p) {
  if (!p.is_valid()) throw ClanError("pyramid does not cover each of 1..n exactly once");
  PartitionPair pp;
  pp.n = p.n;
  for (const auto& r : p.rooks) {
    const bool left = r.side == Side::L;
    if (r.diagonal()) {
      (left ? pp.left : pp.right).push_back(r.i);
      pp.pprime.push_back({r.i});
    } else {
      (left ? pp.left : pp.right).push_back(r.j);
      (left ? pp.right : pp.left).push_back(r.i);
      pp.pprime.push_back({r.i, r.j});
    }
  }
  if (pp.left.empty() || pp.right.empty()) throw ClanError("pyramid gives a partition with an empty block");
  std::sort(pp.left.begin(), pp.left.end());
  std::sort(pp.right.begin(), pp.right.end());
  std::sort(pp.pprime.begin(), pp.pprime.end());
  return pp;
}

Pyramid partition_pair_to_pyramid(const PartitionPair& pp) {
  if (!pp.is_valid()) throw ClanError("not a minimally intersecting partition pair with two nonempty blocks");
  std::vector<bool> in_left(pp.n + 1, false);
  for (int k : pp.left) in_left[k] = true;
  std::vector<Rook> rooks;
  for (const auto& b : pp.pprime) {
    const int i = std::min(b.front(), b.back()), j = std::max(b.front(), b.back());
    rooks.push_back({in_left[j] ? Side::L : Side::R, i, j});
  }
  return make_pyramid(pp.n, std::move(rooks));
}

DiiiClan partition_pair_to_clan(const PartitionPair& pp) {
  Pyramid p = partition_pair_to_pyramid(pp);
  Clan a = decode_pyramid(p);
  if (is_diii(a)) return DiiiClan(std::move(a));
  return pyramid_to_clan(p.mirrored());
}

}  // namespace diii
