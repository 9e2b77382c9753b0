// Pyramids, doubly symmetric rook placements and minimally intersecting
// partition pairs, with the bijections to DIII clans.
//
// Board chart: cells are (column, row), both 1..m, row 1 at the bottom. The
// pyramid of a placement on a 2n board is its bottom triangle: Left(i, j) is
// the cell (j, i) and Right(i, j) the cell (2n+1-j, i), 1 <= i <= j <= n.
#ifndef DIII_ROOKS_HPP
#define DIII_ROOKS_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "diii/clan.hpp"

namespace diii {

enum class Side : std::uint8_t { L, R };

constexpr Side other(Side s) { return s == Side::L ? Side::R : Side::L; }

struct Rook {
  Side side = Side::L;
  int i = 0;  // row, i <= j
  int j = 0;

  bool diagonal() const { return i == j; }
  friend auto operator<=>(const Rook&, const Rook&) = default;
};

struct Pyramid {
  int n = 0;
  std::vector<Rook> rooks;  // sorted

  /// Every k in 1..n occurs in exactly one rook's coordinates, and all
  /// coordinates satisfy 1 <= i <= j <= n.
  bool is_valid() const;
  /// Left and Right exchanged.
  Pyramid mirrored() const;

  friend auto operator<=>(const Pyramid&, const Pyramid&) = default;
};

/// Sorts the rooks; does not validate.
Pyramid make_pyramid(int n, std::vector<Rook> rooks);

Pyramid clan_to_pyramid(const DiiiClan& c);
/// Replays the scan on a valid pyramid. The result is skew-symmetric with no
/// antipodal mates but may fail the parity condition. Throws ClanError for an
/// invalid pyramid.
Clan decode_pyramid(const Pyramid& p);
/// decode_pyramid, rejecting a non-DIII result ("reflect pyramid").
DiiiClan pyramid_to_clan(const Pyramid& p);

struct RookPlacement {
  int size = 0;
  std::vector<int> perm;  // perm[c-1] = row of the rook in column c

  int operator()(int c) const { return perm[c - 1]; }
  bool is_permutation() const;
  /// Invariant under both diagonal reflections.
  bool is_doubly_symmetric() const;

  friend auto operator<=>(const RookPlacement&, const RookPlacement&) = default;
};

RookPlacement pyramid_to_placement(const Pyramid& p);
/// Bottom triangle of an even doubly symmetric placement. Throws ClanError
/// when the placement is not doubly symmetric or has odd size.
Pyramid placement_pyramid(const RookPlacement& r);
/// Picks whichever of the pyramid and its mirror decodes to a DIII clan and
/// checks that exactly one does.
DiiiClan placement_to_clan(const RookPlacement& r);
RookPlacement clan_to_placement(const DiiiClan& c);

/// Every placement of size m symmetric across both diagonals, in
/// lexicographic order of perm, found by backtracking over involutions.
std::vector<RookPlacement> doubly_symmetric_placements(int m);

/// Quarter-turn class representative: column c keeps its rook, row r becomes
/// m+1-r. For doubly symmetric placements this is the other element of the
/// rotation orbit.
RookPlacement rotate_placement(const RookPlacement& r);
/// Inserts a central row and column carrying a rook; size 2n -> 2n+1.
RookPlacement extend_odd(const RookPlacement& r);
/// Drops the central rook of an odd doubly symmetric placement.
RookPlacement shrink_odd(const RookPlacement& r);

/// {v, w0 v} as involutions, ordered.
std::pair<Involution, Involution> signed_involution_pair(const RookPlacement& r);

struct PartitionPair {
  int n = 0;
  std::vector<int> left, right;           // the two blocks of p, sorted
  std::vector<std::vector<int>> pprime;  // blocks of size 1 or 2, sorted

  /// Both blocks nonempty and disjoint covering 1..n; pprime a partition of
  /// 1..n whose blocks meet each block of p at most once.
  bool is_valid() const;
  /// The pair with left and right exchanged, for unordered comparison.
  PartitionPair swapped() const;

  friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
};

/// Throws ClanError when one block of p would be empty.
PartitionPair pyramid_to_partition_pair(const Pyramid& p);
Pyramid partition_pair_to_pyramid(const PartitionPair& pp);
/// Orientation-free inverse: tries both orders of (left, right).
DiiiClan partition_pair_to_clan(const PartitionPair& pp);

}  // namespace diii

#endif  // DIII_ROOKS_HPP
