#include "diii/delannoy.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace diii {

namespace {

char dir_char(Direction d) { return d == Direction::N ? 'N' : d == Direction::E ? 'E' : 'D'; }

void swap_middles(std::vector<Symbol>& s) {
  if (s.empty()) return;
  const std::size_t k = s.size() / 2;
  std::swap(s[k - 1], s[k]);
}

PathCheck fail(int condition, std::string reason) { return {false, condition, std::move(reason)}; }

}  // namespace

std::string WeightedDelannoyPath::to_string() const {
  std::string out;
  for (const auto& st : word) {
    if (!out.empty()) out += ' ';
    out += dir_char(st.dir);
    if (st.dir == Direction::D) out += ':' + std::to_string(st.label);
  }
  return out;
}

WeightedDelannoyPath WeightedDelannoyPath::parse(std::string_view text) {
  WeightedDelannoyPath w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.empty()) continue;
    Direction d;
    switch (tok[0]) {
      case 'N': case 'n': d = Direction::N; break;
      case 'E': case 'e': d = Direction::E; break;
      case 'D': case 'd': d = Direction::D; break;
      default: throw ClanError("bad step '" + tok + "': expected N, E or D:<label>");
    }
    int label = 1;
    if (tok.size() > 1) {
      if (tok[1] != ':') throw ClanError("bad step '" + tok + "'");
      auto [p, ec] = std::from_chars(tok.data() + 2, tok.data() + tok.size(), label);
      if (ec != std::errc() || p != tok.data() + tok.size()) throw ClanError("bad label in step '" + tok + "'");
    } else if (d == Direction::D) {
      throw ClanError("diagonal step needs a label, e.g. D:3");
    }
    w.word.push_back({d, label});
  }
  for (const auto& st : w.word) {
    if (st.dir != Direction::N) ++w.n;
  }
  return w;
}

PathCheck validate_path(const WeightedDelannoyPath& w) {
  const int n = w.n;
  const int r = static_cast<int>(w.word.size());
  int north = 0, east = 0, diag = 0;
  for (int i = 1; i <= r; ++i) {
    const auto& st = w.word[i - 1];
    if (st.dir == Direction::D) {
      ++diag;
      if (st.label < 2) return fail(1, "diagonal step " + std::to_string(i) + " has label below 2");
    } else {
      (st.dir == Direction::N ? north : east) += 1;
      if (st.label != 1) return fail(1, "step " + std::to_string(i) + " is N/E with label other than 1");
    }
  }
  if (n < 1 || east + diag != n || north + diag != n) {
    return fail(1, "steps do not trace a path from (0,0) to (" + std::to_string(n) + "," + std::to_string(n) + ")");
  }

  if (r % 2 != 0) return fail(2, "odd number of steps");
  for (int i = 1; i <= r; ++i) {
    const Direction a = w.word[i - 1].dir, b = w.word[r - i].dir;
    const bool mirrored = (a == Direction::D && b == Direction::D) || (a == Direction::N && b == Direction::E) ||
                          (a == Direction::E && b == Direction::N);
    if (!mirrored) return fail(2, "steps " + std::to_string(i) + " and " + std::to_string(r + 1 - i) + " do not mirror");
  }

  int k = 0;
  for (int i = 1; i <= r / 2; ++i) {
    const auto& st = w.word[i - 1];
    if (st.dir != Direction::D) continue;
    const int bound = 2 * n + 1 - 2 * (i + k);
    if (st.label > bound) {
      return fail(3, "label " + std::to_string(st.label) + " of step " + std::to_string(i) + " exceeds " +
                         std::to_string(bound));
    }
    const int expected = 2 * n + 3 - 2 * (i + k) - st.label;
    if (w.word[r - i].label != expected) {
      return fail(3, "step " + std::to_string(r + 1 - i) + " should carry label " + std::to_string(expected));
    }
    ++k;
  }

  const auto& a = w.word[r / 2 - 1];
  const auto& b = w.word[r / 2];
  const bool en = a.dir == Direction::E && b.dir == Direction::N;
  const bool dd = a == LabeledStep::diag(3) && b == LabeledStep::diag(2);
  if (!en && !dd) return fail(4, "middle steps must be E,N or D:3,D:2");
  return {};
}

WeightedDelannoyPath clan_to_path(const DiiiClan& c) {
  std::vector<Symbol> s = c.clan().symbols();
  std::vector<LabeledStep> front, back;
  while (!s.empty()) {
    const int m = static_cast<int>(s.size() / 2);
    const Symbol last = s.back();
    if (last.is_sign()) {
      const bool plus = last.kind == Symbol::Kind::Plus;
      front.push_back(plus ? LabeledStep::north() : LabeledStep::east());
      back.push_back(plus ? LabeledStep::east() : LabeledStep::north());
      s = std::vector<Symbol>(s.begin() + 1, s.end() - 1);
      if (plus) swap_middles(s);
      continue;
    }
    int i = 0;  // 1-indexed mate of the last position
    for (int k = 0; k < 2 * m - 1; ++k) {
      if (s[k] == last) i = k + 1;
    }
    const int mirror = 2 * m + 1 - i;
    if (!(s[0] == s[mirror - 1])) throw std::logic_error("clan lost skew-symmetry during path construction");
    front.push_back(LabeledStep::diag(mirror));
    back.push_back(LabeledStep::diag(i));
    std::vector<Symbol> rest;
    for (int k = 1; k <= 2 * m; ++k) {
      if (k != 1 && k != i && k != mirror && k != 2 * m) rest.push_back(s[k - 1]);
    }
    s = std::move(rest);
    if (i > m) swap_middles(s);
  }
  WeightedDelannoyPath w;
  w.n = c.n();
  w.word = std::move(front);
  w.word.insert(w.word.end(), back.rbegin(), back.rend());
  return w;
}

DiiiClan path_to_clan(const WeightedDelannoyPath& w) {
  auto check = validate_path(w);
  if (!check.ok) throw ClanError("invalid path, condition " + std::to_string(check.condition) + ": " + check.reason);
  const int r = static_cast<int>(w.word.size());
  std::vector<Symbol> s;
  int label = 0;
  for (int k = r / 2 - 1; k >= 0; --k) {
    const auto& f = w.word[k];
    const auto& b = w.word[r - 1 - k];
    if (f.dir == Direction::E) {
      s.insert(s.begin(), Symbol::plus());
      s.push_back(Symbol::minus());
    } else if (f.dir == Direction::N) {
      swap_middles(s);
      s.insert(s.begin(), Symbol::minus());
      s.push_back(Symbol::plus());
    } else {
      const int m = static_cast<int>(s.size() / 2) + 2;
      const int i = b.label;
      if (i > m) swap_middles(s);
      std::vector<Symbol> next(2 * m);
      const Symbol outer = Symbol::pair(++label), inner = Symbol::pair(++label);
      next[0] = next[2 * m - i] = outer;
      next[i - 1] = next[2 * m - 1] = inner;
      auto it = s.begin();
      for (int p = 1; p <= 2 * m; ++p) {
        if (p != 1 && p != i && p != 2 * m + 1 - i && p != 2 * m) next[p - 1] = *it++;
      }
      s = std::move(next);
    }
  }
  return DiiiClan(Clan(std::move(s)));
}

}  // namespace diii
