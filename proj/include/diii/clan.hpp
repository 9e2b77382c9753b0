// Clans of type DIII: symbols, canonical form, validity and the elementary
// transforms (reverse, negative, flip, base clan, default permutation).
//
// Positions are 1-indexed everywhere in the public interface: a clan of
// half-length n has symbols c_1 .. c_{2n}.
#ifndef DIII_CLAN_HPP
#define DIII_CLAN_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diii {

/// Raised for malformed input or a violated structural condition.
class ClanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Symbol {
  enum class Kind : std::uint8_t { Plus, Minus, Pair };

  Kind kind = Kind::Plus;
  int label = 0;  // > 0 iff kind == Pair

  static constexpr Symbol plus() { return {Kind::Plus, 0}; }
  static constexpr Symbol minus() { return {Kind::Minus, 0}; }
  static constexpr Symbol pair(int label) { return {Kind::Pair, label}; }

  constexpr bool is_sign() const { return kind != Kind::Pair; }
  constexpr bool is_pair() const { return kind == Kind::Pair; }

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Opposite sign; pair symbols are returned unchanged.
constexpr Symbol negated(Symbol s) {
  if (s.kind == Symbol::Kind::Plus) return Symbol::minus();
  if (s.kind == Symbol::Kind::Minus) return Symbol::plus();
  return s;
}

enum class TextFormat { Auto, Compact, Spaced };

/// An (n,n)-clan in canonical form: pair labels are 1..k numbered by first
/// occurrence, so two clans compare equal iff their mate positions and sign
/// positions agree.
class Clan {
 public:
  Clan() = default;

  /// Validates and canonicalizes. Throws ClanError on odd length, a label
  /// not appearing exactly twice, or #Plus != #Minus.
  explicit Clan(std::vector<Symbol> symbols);

  /// Parses compact ("+1212-") or whitespace separated ("+ 1 2 1 2 -") text.
  static Clan parse(std::string_view text);

  int n() const { return static_cast<int>(symbols_.size() / 2); }
  int size() const { return static_cast<int>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }

  /// 1-indexed access.
  const Symbol& symbol(int pos) const { return symbols_[pos - 1]; }
  /// Position of the mate of c_pos, or 0 when c_pos is a sign.
  int mate(int pos) const { return mates_[pos - 1]; }

  const std::vector<Symbol>& symbols() const { return symbols_; }

  int pair_count() const;
  bool is_matchless() const { return pair_count() == 0; }
  int max_label() const { return pair_count(); }

  std::string to_string(TextFormat fmt = TextFormat::Auto) const;

  friend bool operator==(const Clan& a, const Clan& b) { return a.symbols_ == b.symbols_; }
  friend auto operator<=>(const Clan& a, const Clan& b) { return a.symbols_ <=> b.symbols_; }

 private:
  std::vector<Symbol> symbols_;
  std::vector<int> mates_;
};

std::ostream& operator<<(std::ostream& os, const Clan& c);

/// Mate pairs (i, j), i < j, in order of the first position.
std::vector<std::pair<int, int>> mate_pairs(const Clan& c);

/// True iff c is skew-symmetric, has no antipodal mates and satisfies the
/// first-half parity condition.
bool is_diii(const Clan& c);

/// Name of the first DIII condition that c violates, or an empty string.
std::string diii_violation(const Clan& c);

/// A clan known to satisfy the DIII conditions.
class DiiiClan {
 public:
  /// Throws ClanError naming the violated condition.
  explicit DiiiClan(Clan c);
  static DiiiClan parse(std::string_view text) { return DiiiClan(Clan::parse(text)); }

  const Clan& clan() const { return clan_; }
  operator const Clan&() const { return clan_; }  // NOLINT
  int n() const { return clan_.n(); }
  std::string to_string(TextFormat fmt = TextFormat::Auto) const { return clan_.to_string(fmt); }

  friend bool operator==(const DiiiClan&, const DiiiClan&) = default;
  friend auto operator<=>(const DiiiClan& a, const DiiiClan& b) { return a.clan_ <=> b.clan_; }

 private:
  Clan clan_;
};

std::ostream& operator<<(std::ostream& os, const DiiiClan& c);

/// Permutation of {1..m} in one-line notation; image[k-1] = sigma(k).
struct Involution {
  std::vector<int> image;

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int k) const { return image[k - 1]; }

  bool is_involution() const;
  /// "154326"-style when every value is a single digit, space separated otherwise.
  std::string one_line() const;
  /// Canonical cycle form of the 2-cycles, e.g. "(1 3)(2 4)"; "()" for the identity.
  std::string cycles() const;

  friend auto operator<=>(const Involution&, const Involution&) = default;
};

struct PairClassification {
  std::vector<std::pair<int, int>> pi0;  // i <= n < j
  std::vector<std::pair<int, int>> pi1;  // same half
  /// (i, j, 2n+1-j, 2n+1-i) with c_i = c_j, i < j and i < 2n+1-j.
  std::vector<std::array<int, 4>> families;

  int z() const { return static_cast<int>(pi0.size() / 2); }
  int y() const { return static_cast<int>(pi1.size() / 2); }
};

Clan reverse(const Clan& c);
Clan negative(const Clan& c);
/// Swaps c_n and c_{n+1}.
Clan flip(const Clan& c);

PairClassification classify_pairs(const DiiiClan& c);

/// Matchless clan of signatures: first mates become Minus, second mates Plus.
DiiiClan base_clan(const DiiiClan& c);

Involution default_permutation(const DiiiClan& c);
Involution underlying_involution(const Clan& c);

}  // namespace diii

template <>
struct std::hash<diii::Clan> {
  std::size_t operator()(const diii::Clan& c) const noexcept;
};

#endif  // DIII_CLAN_HPP
