#include "diii/clan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

namespace diii {

namespace {

constexpr std::string_view kUnicodeMinus = "−";

Symbol parse_token(std::string_view tok) {
  if (tok == "+") return Symbol::plus();
  if (tok == "-" || tok == kUnicodeMinus) return Symbol::minus();
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    throw ClanError("unknown token '" + std::string(tok) + "'");
  }
  if (tok.size() > 9) throw ClanError("label too large: '" + std::string(tok) + "'");
  int label = std::stoi(std::string(tok));
  if (label < 1) throw ClanError("labels must be positive integers, got '" + std::string(tok) + "'");
  return Symbol::pair(label);
}

}  // namespace

Clan::Clan(std::vector<Symbol> symbols) {
  if (symbols.size() % 2 != 0) {
    throw ClanError("odd length " + std::to_string(symbols.size()) + ": a clan has 2n symbols");
  }
  int plus = 0, minus = 0;
  std::map<int, std::vector<int>> where;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    switch (symbols[k].kind) {
      case Symbol::Kind::Plus: ++plus; break;
      case Symbol::Kind::Minus: ++minus; break;
      case Symbol::Kind::Pair:
        if (symbols[k].label < 1) throw ClanError("labels must be positive integers");
        where[symbols[k].label].push_back(static_cast<int>(k));
        break;
    }
  }
  for (const auto& [label, pos] : where) {
    if (pos.size() != 2) {
      throw ClanError("label " + std::to_string(label) + " appears " + std::to_string(pos.size()) +
                      " times (must appear exactly twice)");
    }
  }
  if (plus != minus) {
    throw ClanError("unbalanced signs: " + std::to_string(plus) + " '+' vs " + std::to_string(minus) +
                    " '-' (not an (n,n)-clan)");
  }

  mates_.assign(symbols.size(), 0);
  for (const auto& [label, pos] : where) {
    mates_[pos[0]] = pos[1] + 1;
    mates_[pos[1]] = pos[0] + 1;
  }
  // Renumber by first occurrence.
  int next = 0;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (!symbols[k].is_pair()) continue;
    auto m = static_cast<std::size_t>(mates_[k] - 1);
    if (m > k) {
      symbols[k].label = ++next;
    } else {
      symbols[k].label = symbols[m].label;
    }
  }
  symbols_ = std::move(symbols);
}

Clan Clan::parse(std::string_view text) {
  std::vector<Symbol> out;
  bool spaced = std::any_of(text.begin(), text.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (spaced) {
    std::size_t k = 0;
    while (k < text.size()) {
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      std::size_t start = k;
      while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k > start) out.push_back(parse_token(text.substr(start, k - start)));
    }
  } else {
    for (std::size_t k = 0; k < text.size();) {
      if (text.substr(k, kUnicodeMinus.size()) == kUnicodeMinus) {
        out.push_back(Symbol::minus());
        k += kUnicodeMinus.size();
        continue;
      }
      out.push_back(parse_token(text.substr(k, 1)));
      ++k;
    }
  }
  if (out.empty()) throw ClanError("empty clan");
  return Clan(std::move(out));
}

int Clan::pair_count() const {
  return static_cast<int>(std::count_if(symbols_.begin(), symbols_.end(), [](const Symbol& s) { return s.is_pair(); })) / 2;
}

std::string Clan::to_string(TextFormat fmt) const {
  if (fmt == TextFormat::Auto) fmt = max_label() <= 9 ? TextFormat::Compact : TextFormat::Spaced;
  std::string out;
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    if (fmt == TextFormat::Spaced && k > 0) out += ' ';
    const Symbol& s = symbols_[k];
    switch (s.kind) {
      case Symbol::Kind::Plus: out += '+'; break;
      case Symbol::Kind::Minus: out += '-'; break;
      case Symbol::Kind::Pair: out += std::to_string(s.label); break;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Clan& c) { return os << c.to_string(); }
std::ostream& operator<<(std::ostream& os, const DiiiClan& c) { return os << c.to_string(); }

std::vector<std::pair<int, int>> mate_pairs(const Clan& c) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= c.size(); ++i) {
    int j = c.mate(i);
    if (j > i) out.emplace_back(i, j);
  }
  return out;
}

std::string diii_violation(const Clan& c) {
  const int n = c.n();
  const int m = c.size();
  for (int i = 1; i <= m; ++i) {
    const Symbol& s = c.symbol(i);
    const int k = m + 1 - i;
    if (s.is_sign()) {
      if (c.symbol(k) != negated(s)) return "condition 1 (skew-symmetry): position " + std::to_string(i);
    } else {
      if (c.mate(i) == k) return "condition 2 (antipodal mates): positions " + std::to_string(i) + "," + std::to_string(k);
      // The mirror image of the pair (i, j) must be a pair (m+1-j, m+1-i).
      if (!c.symbol(k).is_pair() || c.mate(k) != m + 1 - c.mate(i)) {
        return "condition 1 (skew-symmetry): position " + std::to_string(i);
      }
    }
  }
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    const Symbol& s = c.symbol(i);
    if (s.kind == Symbol::Kind::Minus) ++count;
    if (s.is_pair() && c.mate(i) > i && c.mate(i) <= n) ++count;
  }
  if (count % 2 != 0) return "condition 3 (first-half parity)";
  return {};
}

bool is_diii(const Clan& c) { return diii_violation(c).empty(); }

DiiiClan::DiiiClan(Clan c) : clan_(std::move(c)) {
  auto why = diii_violation(clan_);
  if (!why.empty()) throw ClanError("not a DIII clan: " + clan_.to_string() + " violates " + why);
}

bool Involution::is_involution() const {
  for (int k = 1; k <= size(); ++k) {
    int v = (*this)(k);
    if (v < 1 || v > size() || (*this)(v) != k) return false;
  }
  return true;
}

std::string Involution::one_line() const {
  bool compact = std::all_of(image.begin(), image.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string out;
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (!compact && k > 0) out += ' ';
    out += std::to_string(image[k]);
  }
  return out;
}

std::string Involution::cycles() const {
  std::string out;
  for (int k = 1; k <= size(); ++k) {
    int v = (*this)(k);
    if (v > k) out += "(" + std::to_string(k) + " " + std::to_string(v) + ")";
  }
  return out.empty() ? "()" : out;
}

Clan reverse(const Clan& c) {
  std::vector<Symbol> s(c.symbols().rbegin(), c.symbols().rend());
  return Clan(std::move(s));
}

Clan negative(const Clan& c) {
  std::vector<Symbol> s = c.symbols();
  for (auto& x : s) x = negated(x);
  return Clan(std::move(s));
}

Clan flip(const Clan& c) {
  std::vector<Symbol> s = c.symbols();
  if (c.n() > 0) std::swap(s[c.n() - 1], s[c.n()]);
  return Clan(std::move(s));
}

PairClassification classify_pairs(const DiiiClan& dc) {
  const Clan& c = dc.clan();
  const int n = c.n();
  const int m = c.size();
  PairClassification out;
  for (auto [i, j] : mate_pairs(c)) {
    if (i <= n && j > n) {
      out.pi0.emplace_back(i, j);
    } else {
      out.pi1.emplace_back(i, j);
    }
    if (i < m + 1 - j) out.families.push_back({i, j, m + 1 - j, m + 1 - i});
  }
  return out;
}

namespace {

// Signature of each position in the default signed clan.
std::vector<Symbol> signatures(const Clan& c) {
  std::vector<Symbol> s = c.symbols();
  for (int i = 1; i <= c.size(); ++i) {
    if (s[i - 1].is_pair()) s[i - 1] = c.mate(i) > i ? Symbol::minus() : Symbol::plus();
  }
  return s;
}

}  // namespace

DiiiClan base_clan(const DiiiClan& c) { return DiiiClan(Clan(signatures(c.clan()))); }

Involution default_permutation(const DiiiClan& c) {
  const int n = c.n();
  const int m = 2 * n;
  auto sig = signatures(c.clan());
  Involution out{std::vector<int>(m)};
  for (int i = 1; i <= n; ++i) {
    if (sig[i - 1].kind == Symbol::Kind::Plus) {
      out.image[i - 1] = i;
      out.image[m - i] = m + 1 - i;
    } else {
      out.image[i - 1] = m + 1 - i;
      out.image[m - i] = i;
    }
  }
  return out;
}

Involution underlying_involution(const Clan& c) {
  Involution out{std::vector<int>(c.size())};
  for (int i = 1; i <= c.size(); ++i) out.image[i - 1] = c.mate(i) ? c.mate(i) : i;
  return out;
}

}  // namespace diii

std::size_t std::hash<diii::Clan>::operator()(const diii::Clan& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto& s : c.symbols()) {
    h ^= static_cast<std::size_t>(s.kind) * 31u + static_cast<std::size_t>(s.label);
    h *= 1099511628211ull;
  }
  return h;
}
