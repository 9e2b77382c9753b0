// Exhaustive generation and counting of DIII (n,n)-clans.
#ifndef DIII_ENUMERATION_HPP
#define DIII_ENUMERATION_HPP

#include <vector>

#include "diii/checked.hpp"
#include "diii/clan.hpp"

namespace diii {

/// All DIII (n,n)-clans, deduplicated and sorted by canonical spaced text.
struct ClanSet {
  int n = 0;
  std::vector<DiiiClan> clans;

  std::size_t size() const { return clans.size(); }
  auto begin() const { return clans.begin(); }
  auto end() const { return clans.end(); }
  /// Index of c in clans, or -1.
  int index_of(const Clan& c) const;
};

/// Structured generator: choose the first-half number positions, pair them,
/// decide for each pair whether it is an in-half pair or the first mates of
/// two opposing straddling pairs, fill signs with even parity and complete by
/// skew-symmetry. n = 0 yields an empty set.
ClanSet enumerate_diii(int n);

/// Number of DIII clans with exactly 2r mate pairs:
/// 2^(n-2r-1) * C(n, 2r) * (2r)! / r!.
Count count_by_pairs(int n, int r);

/// Sum of count_by_pairs over r. count_formula(0) is 1 by convention.
Count count_formula(int n);

/// D_0 = 1, D_1 = 1, D_2 = 3, D_n = 2 D_{n-1} + (2n-2) D_{n-2}.
Count count_recurrence(int n);

/// The matchless DIII clans, in the same order as enumerate_diii.
std::vector<DiiiClan> matchless_clans(int n);

}  // namespace diii

#endif  // DIII_ENUMERATION_HPP
