// Weighted Delannoy paths and their bijection with DIII clans.
#ifndef DIII_DELANNOY_HPP
#define DIII_DELANNOY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "diii/clan.hpp"

namespace diii {

enum class Direction : std::uint8_t { N, E, D };

struct LabeledStep {
  Direction dir = Direction::N;
  int label = 1;  // 1 for N and E

  static LabeledStep north() { return {Direction::N, 1}; }
  static LabeledStep east() { return {Direction::E, 1}; }
  static LabeledStep diag(int l) { return {Direction::D, l}; }

  friend auto operator<=>(const LabeledStep&, const LabeledStep&) = default;
};

struct WeightedDelannoyPath {
  int n = 0;
  std::vector<LabeledStep> word;

  /// "E D:4 D:3 D:2 D:5 N"
  std::string to_string() const;
  /// Accepts the to_string form (also "N:1", "E:1"); n is read off as
  /// #E + #D. Throws ClanError on malformed tokens.
  static WeightedDelannoyPath parse(std::string_view text);

  friend auto operator<=>(const WeightedDelannoyPath&, const WeightedDelannoyPath&) = default;
};

struct PathCheck {
  bool ok = true;
  int condition = 0;  // first violated condition, 1..4, or 0
  std::string reason;
};

/// Conditions: (1) lattice path (0,0)->(n,n) with labels 1 on N/E and >= 2
/// on D; (2) step i is N iff step r+1-i is E, D iff D; (3) a first-half D
/// step i with k D steps before it has 2 <= l <= 2n+1-2(i+k) and its mirror
/// carries 2n+3-2(i+k)-l; (4) the middle pair is E,N or (D,3),(D,2).
PathCheck validate_path(const WeightedDelannoyPath& w);

WeightedDelannoyPath clan_to_path(const DiiiClan& c);
/// Throws ClanError naming the violated condition for an invalid path.
DiiiClan path_to_clan(const WeightedDelannoyPath& w);

}  // namespace diii

#endif  // DIII_DELANNOY_HPP
