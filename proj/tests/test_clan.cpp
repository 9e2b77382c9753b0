#include <doctest.h>

#include "diii/enumeration.hpp"
#include "oracles.hpp"

using namespace diii;

TEST_CASE("parse canonicalizes labels by first occurrence") {
  auto c = Clan::parse("+1212-");
  CHECK(c.n() == 3);
  CHECK(c.to_string() == "+1212-");
  CHECK(Clan::parse("2211") == Clan::parse("1122"));
  CHECK(Clan::parse("2211").to_string() == "1122");
  CHECK(Clan::parse("+ 7 3 7 3 -") == Clan::parse("+1212-"));
  CHECK(Clan::parse("+1212−") == Clan::parse("+1212-"));
}

TEST_CASE("parse rejects malformed clans") {
  CHECK_THROWS_AS(Clan::parse("+1+1"), ClanError);   // 3 '+' vs 1 '-'
  CHECK_THROWS_AS(Clan::parse("+-1"), ClanError);    // odd length
  CHECK_THROWS_AS(Clan::parse("1112"), ClanError);   // label 1 three times
  CHECK_THROWS_AS(Clan::parse("+x-y"), ClanError);   // unknown token
  CHECK_THROWS_AS(Clan::parse("+ 0 0 -"), ClanError);
  CHECK_THROWS_AS(Clan::parse(""), ClanError);
}

TEST_CASE("spaced form for labels above 9") {
  std::string text;
  for (int k = 1; k <= 10; ++k) text += std::to_string(k) + " ";
  for (int k = 1; k <= 10; ++k) text += std::to_string(k) + " ";
  auto c = Clan::parse(text);
  CHECK(c.max_label() == 10);
  CHECK(c.to_string() == c.to_string(TextFormat::Spaced));
  CHECK(Clan::parse(c.to_string()) == c);
}

TEST_CASE("DIII conditions") {
  CHECK(is_diii(Clan::parse("+-1122+-")));
  CHECK_FALSE(is_diii(Clan::parse("1122")));
  CHECK(diii_violation(Clan::parse("1122")).find("condition 3") != std::string::npos);
  CHECK_FALSE(is_diii(Clan::parse("1221")));
  CHECK(diii_violation(Clan::parse("1221")).find("condition 2") != std::string::npos);
  CHECK_FALSE(is_diii(Clan::parse("+-+-")));
  CHECK_THROWS_AS(DiiiClan::parse("1221"), ClanError);
}

TEST_CASE("library DIII test agrees with the oracle on every (n,n)-clan, n <= 4") {
  // Generate all (n,n)-clans through the oracle without the DIII filter by
  // checking both predicates on the same raw inputs.
  for (int n = 1; n <= 4; ++n) {
    const int m = 2 * n;
    int checked = 0;
    std::function<void(oracle::Raw&, int, int)> rec = [&](oracle::Raw& cur, int pos, int label) {
      if (pos == m) {
        int plus = 0, minus = 0;
        for (int v : cur) plus += v == 0, minus += v == -1;
        if (plus != minus) return;
        std::vector<Symbol> s;
        for (int v : cur) s.push_back(v == 0 ? Symbol::plus() : v == -1 ? Symbol::minus() : Symbol::pair(v));
        CHECK(is_diii(Clan(s)) == oracle::is_diii(cur));
        ++checked;
        return;
      }
      if (cur[pos] != -2) return rec(cur, pos + 1, label);
      for (int sg : {0, -1}) {
        cur[pos] = sg;
        rec(cur, pos + 1, label);
      }
      for (int q = pos + 1; q < m; ++q) {
        if (cur[q] != -2) continue;
        cur[pos] = cur[q] = label;
        rec(cur, pos + 1, label + 1);
        cur[q] = -2;
      }
      cur[pos] = -2;
    };
    oracle::Raw cur(m, -2);
    rec(cur, 0, 1);
    CHECK(checked > 0);
  }
}

TEST_CASE("reverse, negative, flip") {
  CHECK(negative(Clan::parse("+1212-")) == Clan::parse("-1212+"));
  CHECK(flip(Clan::parse("1-1-+2+2")) == Clan::parse("1-1+-2+2"));
  CHECK(reverse(Clan::parse("+-1122+-")) == Clan::parse("-+1122-+"));
  CHECK(reverse(Clan::parse("1212")) == Clan::parse("1212"));
}

TEST_CASE("skew-symmetry round trip and flip invalidity, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_diii(n)) {
      CHECK(reverse(negative(c)) == c.clan());
      CHECK_FALSE(is_diii(flip(c)));
      CHECK(Clan::parse(c.to_string(TextFormat::Spaced)) == c.clan());
      CHECK(Clan::parse(c.to_string(TextFormat::Compact)) == c.clan());
    }
  }
}

TEST_CASE("classify_pairs") {
  auto p = classify_pairs(DiiiClan::parse("++1212--"));
  CHECK(p.pi0 == std::vector<std::pair<int, int>>{{3, 5}, {4, 6}});
  CHECK(p.pi1.empty());
  CHECK(p.z() == 1);

  auto q = classify_pairs(DiiiClan::parse("+-1122+-"));
  CHECK(q.pi0.empty());
  CHECK(q.pi1 == std::vector<std::pair<int, int>>{{3, 4}, {5, 6}});

  auto r = classify_pairs(DiiiClan::parse("++--"));
  CHECK(r.pi0.empty());
  CHECK(r.pi1.empty());
  CHECK(r.families.empty());

  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : enumerate_diii(n)) {
      auto k = classify_pairs(c);
      CHECK(k.pi0.size() + k.pi1.size() == static_cast<std::size_t>(c.clan().pair_count()));
      CHECK(k.pi0.size() % 2 == 0);
      CHECK(k.pi1.size() % 2 == 0);
      CHECK(2 * k.families.size() == static_cast<std::size_t>(c.clan().pair_count()));
      for (auto f : k.families) CHECK((f[0] < f[1] && f[0] < f[2]));
    }
  }
}

TEST_CASE("base clan") {
  CHECK(base_clan(DiiiClan::parse("-12334412+")).to_string() == "----+-++++");
  CHECK(base_clan(DiiiClan::parse("+1212-")).to_string() == "+--++-");
  CHECK(base_clan(DiiiClan::parse("++--")).to_string() == "++--");
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : enumerate_diii(n)) {
      auto b = base_clan(c);
      CHECK(b.clan().is_matchless());
      CHECK(base_clan(b) == b);
    }
  }
}

TEST_CASE("default permutation and underlying involution") {
  CHECK(default_permutation(DiiiClan::parse("+1212-")).one_line() == "154326");
  CHECK(default_permutation(DiiiClan::parse("++--")).one_line() == "1234");
  CHECK(default_permutation(DiiiClan::parse("--++")).one_line() == "4321");
  CHECK(underlying_involution(Clan::parse("1212")).cycles() == "(1 3)(2 4)");
  CHECK(underlying_involution(Clan::parse("+-+-")).cycles() == "()");
  CHECK(underlying_involution(Clan::parse("12343412")).cycles() == "(1 7)(2 8)(3 5)(4 6)");
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : enumerate_diii(n)) {
      CHECK(default_permutation(c).is_involution());
      CHECK(underlying_involution(c).is_involution());
    }
  }
}

TEST_CASE("hash is consistent with equality") {
  std::hash<Clan> h;
  CHECK(h(Clan::parse("2211")) == h(Clan::parse("1122")));
}
