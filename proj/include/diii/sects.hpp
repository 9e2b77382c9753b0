// Sects (clans grouped by base clan), Schubert-cell subsets and the big sect
// with its partial fixed-point-free involution coding.
#ifndef DIII_SECTS_HPP
#define DIII_SECTS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "diii/checked.hpp"
#include "diii/clan.hpp"
#include "diii/enumeration.hpp"

namespace diii {

/// I subset of {1..2n}: |I| = n, never both i and 2n+1-i, and an even
/// number of i <= n missing from I.
struct SchubertSubset {
  int n = 0;
  std::vector<int> elements;  // sorted

  /// Validating constructor; throws ClanError.
  static SchubertSubset make(int n, std::vector<int> elements);
  friend bool operator==(const SchubertSubset&, const SchubertSubset&) = default;
};

DiiiClan subset_to_base_clan(const SchubertSubset& s);
/// b must be matchless.
SchubertSubset base_clan_to_subset(const DiiiClan& b);

struct Sect {
  DiiiClan base;
  std::vector<DiiiClan> members;  // in enumeration order

  /// Indices of the members of maximal length.
  std::vector<int> longest() const;
};

/// Sects ordered by the text of their base clan.
std::vector<Sect> sects(const ClanSet& clans);
std::vector<Sect> sects(int n);

/// Base clan of the dense cell: n minuses then n pluses for even n; n-1
/// minuses, +, -, n-1 pluses for odd n.
DiiiClan dense_base_clan(int n);
bool in_big_sect(const DiiiClan& c);
Sect big_sect(int n);

/// x(i) in {0..n}, 0 meaning undefined. Symmetric and without fixed points.
struct PartialFpfInvolution {
  std::vector<int> x;  // x[i-1]

  int n() const { return static_cast<int>(x.size()); }
  int operator()(int i) const { return x[i - 1]; }
  bool is_valid() const;
  /// "1:2,3:5"; each pair once with the smaller point first. "" when empty.
  std::string to_string() const;
  static PartialFpfInvolution parse(int n, std::string_view text);

  friend auto operator<=>(const PartialFpfInvolution&, const PartialFpfInvolution&) = default;
};

/// Throws ClanError for clans outside the big sect.
PartialFpfInvolution clan_to_pfpf(const DiiiClan& c);
DiiiClan pfpf_to_clan(const PartialFpfInvolution& x);

/// sum_r n! / ((n-2r)! r! 2^r), with epsilon_count(0) = 1.
Count epsilon_count(int n);
/// e_n = e_{n-1} + (n-1) e_{n-2}.
Count epsilon_recurrence(int n);

}  // namespace diii

#endif  // DIII_SECTS_HPP
