// Length function, the simple-reflection monoid action and the weak order.
#ifndef DIII_WEAK_ORDER_HPP
#define DIII_WEAK_ORDER_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "diii/clan.hpp"
#include "diii/enumeration.hpp"

namespace diii {

struct PairStats {
  int i = 0, j = 0;  // mate positions, i < j
  int spread = 0;    // j - i
  int weave = 0;     // #pairs (u, t) with u < i < t < j
};

struct LengthStats {
  std::vector<PairStats> pairs;
  int z = 0;       // |Pi_0| / 2
  int length = 0;  // ((sum spread - weave) - z) / 2
};

LengthStats clan_length(const DiiiClan& c);
inline int length(const DiiiClan& c) { return clan_length(c).length; }

/// Integer polynomial; coeffs[k] is the coefficient of t^k. Trailing zeros
/// are trimmed.
struct RankPolynomial {
  std::vector<Count> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Count total() const;
  /// "t^6+3t^5+...+8"
  std::string to_string() const;

  friend bool operator==(const RankPolynomial&, const RankPolynomial&) = default;
};

/// A candidate for s_i . c, before acceptance.
struct ReflectionCandidate {
  enum class Kind { Swap, Collapse } kind;
  Clan clan;
};

/// The swap candidate and, where the signs allow it, the collapse candidate
/// for s_i (1 <= i <= n).
std::vector<ReflectionCandidate> reflection_candidates(int i, const DiiiClan& c);

/// s_i . c: the unique candidate that is a DIII clan one longer than c, or c
/// itself when there is none. Throws std::logic_error if two candidates
/// qualify.
DiiiClan apply_reflection(int i, const DiiiClan& c);

struct CoverEdge {
  int from = 0;  // node indices
  int to = 0;
  int reflection = 0;

  friend auto operator<=>(const CoverEdge&, const CoverEdge&) = default;
};

struct WeakOrderPoset {
  int n = 0;
  ClanSet nodes;
  std::vector<int> lengths;      // per node
  std::vector<CoverEdge> covers;  // sorted by (from, reflection, to)

  std::vector<int> rank_sizes() const;
  std::vector<int> maximal_nodes() const;  // no outgoing covers
  std::vector<int> minimal_nodes() const;  // no incoming covers
};

/// Order of s_i s_j in the type D_n Coxeter group: 1 when i == j, 3 for
/// neighbours in the diagram (the chain s_1..s_{n-1} plus the edge
/// s_{n-2} -- s_n), 2 otherwise.
int coxeter_order(int n, int i, int j);

/// Nodes are enumerate_diii(n); edges (c, s_i.c, i) for every ascent.
WeakOrderPoset weak_order_poset(int n);

RankPolynomial rank_polynomial(const WeakOrderPoset& poset);
/// Rank polynomial counted directly from a clan list.
RankPolynomial rank_polynomial(const ClanSet& clans);

/// A_1 = 1, A_2 = t + 2, and for n >= 3
/// A_n = 2 A_{n-1} + (t + ... + t^{n-1} + t^{n-1} + ... + t^{2n-3}) A_{n-2}.
RankPolynomial rank_poly_recurrence(int n);

/// The unique clan of maximal length n(n-1)/2 (n >= 1; n = 1 gives "+-").
DiiiClan maximal_clan(int n);

}  // namespace diii

#endif  // DIII_WEAK_ORDER_HPP
