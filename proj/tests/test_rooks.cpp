#include <doctest.h>

#include <set>

#include "diii/enumeration.hpp"
#include "diii/rooks.hpp"
#include "oracles.hpp"

using namespace diii;

namespace {

Pyramid pyr(int n, std::vector<Rook> r) { return make_pyramid(n, std::move(r)); }

}  // namespace

TEST_CASE("clan to pyramid examples") {
  auto example = pyr(4, {{Side::L, 4, 4}, {Side::R, 2, 2}, {Side::L, 1, 3}});
  CHECK(clan_to_pyramid(DiiiClan::parse("1-1+-2+2")) == example);
  CHECK(clan_to_pyramid(DiiiClan::parse("+-")) == pyr(1, {{Side::L, 1, 1}}));
  CHECK(clan_to_pyramid(DiiiClan::parse("1212")) == pyr(2, {{Side::L, 1, 2}}));
}

TEST_CASE("pyramid decoding") {
  auto example = pyr(4, {{Side::L, 4, 4}, {Side::R, 2, 2}, {Side::L, 1, 3}});
  CHECK(pyramid_to_clan(example).to_string() == "1-1+-2+2");
  CHECK(decode_pyramid(example.mirrored()).to_string() == "1-1-+2+2");
  CHECK_THROWS_AS(pyramid_to_clan(example.mirrored()), ClanError);
  CHECK(pyramid_to_clan(pyr(1, {{Side::L, 1, 1}})).to_string() == "+-");
  CHECK_FALSE(pyr(2, {{Side::L, 1, 1}}).is_valid());
  CHECK_FALSE(pyr(2, {{Side::L, 1, 2}, {Side::L, 2, 2}}).is_valid());
  CHECK_FALSE(pyr(2, {{Side::L, 2, 1}}).is_valid());
  CHECK_THROWS_AS(decode_pyramid(pyr(2, {{Side::L, 1, 1}})), ClanError);
}

TEST_CASE("clan, pyramid and placement round trips, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<Pyramid> pyramids;
    std::set<RookPlacement> placements;
    for (const auto& c : enumerate_diii(n)) {
      auto p = clan_to_pyramid(c);
      CHECK(p.is_valid());
      CHECK(pyramid_to_clan(p) == c);
      CHECK_FALSE(is_diii(decode_pyramid(p.mirrored())));
      auto r = pyramid_to_placement(p);
      CHECK(r.is_doubly_symmetric());
      CHECK(placement_pyramid(r) == p);
      CHECK(placement_to_clan(r) == c);
      CHECK(placement_to_clan(rotate_placement(r)) == c);
      CHECK(placement_pyramid(rotate_placement(r)) == p.mirrored());
      pyramids.insert(p);
      placements.insert(r);
      placements.insert(rotate_placement(r));
    }
    CHECK(pyramids.size() == count_formula(n));
    CHECK(placements.size() == 2 * count_formula(n));
  }
}

TEST_CASE("doubly symmetric placement counts against brute force") {
  for (int m = 1; m <= 11; ++m) {
    CAPTURE(m);
    auto lib = doubly_symmetric_placements(m);
    auto brute = oracle::doubly_symmetric(m);
    CHECK(lib.size() == brute.size());
    std::set<std::vector<int>> a, b(brute.begin(), brute.end());
    for (const auto& r : lib) a.insert(r.perm);
    CHECK(a == b);
    if (m % 2 == 0) CHECK(lib.size() == 2 * count_formula(m / 2));
    if (m % 2 == 1 && m > 1) CHECK(lib.size() == 2 * count_formula(m / 2));
  }
  for (int m = 1; m <= 8; ++m) {
    CHECK(oracle::doubly_symmetric_by_permutations(m) == static_cast<long>(doubly_symmetric_placements(m).size()));
  }
  CHECK(doubly_symmetric_placements(4).size() == 6);
}

TEST_CASE("odd boards: central rook and extend/shrink bijection") {
  for (int n = 1; n <= 5; ++n) {
    auto odd = doubly_symmetric_placements(2 * n + 1);
    std::set<RookPlacement> extended;
    for (const auto& r : doubly_symmetric_placements(2 * n)) {
      auto e = extend_odd(r);
      CHECK(e.is_doubly_symmetric());
      CHECK(shrink_odd(e) == r);
      extended.insert(e);
    }
    for (const auto& r : odd) CHECK(r(n + 1) == n + 1);
    CHECK(extended == std::set<RookPlacement>(odd.begin(), odd.end()));
  }
}

TEST_CASE("no placement has the full dihedral symmetry, sizes 2..6") {
  for (int m = 2; m <= 6; ++m) {
    for (const auto& r : doubly_symmetric_placements(m)) {
      // A quarter turn maps column c, row r to column r, row m+1-c.
      RookPlacement q{m, std::vector<int>(m)};
      for (int c = 1; c <= m; ++c) q.perm[r(c) - 1] = m + 1 - c;
      CHECK_FALSE(q == r);
    }
  }
}

TEST_CASE("signed involution pairs") {
  RookPlacement id{4, {1, 2, 3, 4}};
  auto [v, w] = signed_involution_pair(id);
  CHECK(v.one_line() == "1234");
  CHECK(w.one_line() == "4321");
  for (int m = 2; m <= 8; m += 2) {
    for (const auto& r : doubly_symmetric_placements(m)) {
      auto pr = signed_involution_pair(r);
      CHECK(pr.first.is_involution());
      CHECK(pr.second.is_involution());
      CHECK(signed_involution_pair(rotate_placement(r)) == pr);
      CHECK(rotate_placement(rotate_placement(r)) == r);
    }
  }
  CHECK_THROWS_AS(signed_involution_pair(RookPlacement{3, {2, 3, 1}}), ClanError);
}

TEST_CASE("placement input validation") {
  CHECK_THROWS_AS(placement_to_clan(RookPlacement{4, {2, 1, 3, 4}}), ClanError);  // not antidiagonal symmetric
  CHECK_THROWS_AS(placement_to_clan(RookPlacement{3, {1, 2, 3}}), ClanError);     // odd
}

TEST_CASE("partition pair example") {
  auto example = pyr(4, {{Side::L, 4, 4}, {Side::R, 2, 2}, {Side::L, 1, 3}});
  auto pp = pyramid_to_partition_pair(example);
  CHECK(pp.left == std::vector<int>{3, 4});
  CHECK(pp.right == std::vector<int>{1, 2});
  CHECK(pp.pprime == std::vector<std::vector<int>>{{1, 3}, {2}, {4}});
  CHECK(pp.is_valid());
  CHECK(partition_pair_to_pyramid(pp) == example);
  CHECK(partition_pair_to_clan(pp).to_string() == "1-1+-2+2");
  CHECK(partition_pair_to_clan(pp.swapped()).to_string() == "1-1+-2+2");
  CHECK_THROWS_AS(pyramid_to_partition_pair(clan_to_pyramid(DiiiClan::parse("++++----"))), ClanError);
}

namespace {

std::string encode(const PartitionPair& pp) {
  // Same text as the oracle: the block holding 1 first, then its matches.
  const auto& a = std::find(pp.left.begin(), pp.left.end(), 1) != pp.left.end() ? pp.left : pp.right;
  std::string s;
  for (int k : a) s += std::to_string(k) + ".";
  s += "|";
  for (int k : a) {
    for (const auto& b : pp.pprime) {
      if (b.size() == 2 && (b[0] == k || b[1] == k)) {
        s += "(" + std::to_string(k) + "," + std::to_string(b[0] == k ? b[1] : b[0]) + ")";
      }
    }
  }
  return s;
}

}  // namespace

TEST_CASE("partition pairs against the independent enumeration") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> produced;
    int excluded = 0;
    for (const auto& c : enumerate_diii(n)) {
      PartitionPair pp;
      try {
        pp = pyramid_to_partition_pair(clan_to_pyramid(c));
      } catch (const ClanError&) {
        ++excluded;
        // only n pluses then n minuses: every rook on the left diagonal, so p has an empty block
        CHECK(c.to_string() == std::string(n, '+') + std::string(n, '-'));
        continue;
      }
      CHECK(pp.is_valid());
      CHECK(partition_pair_to_clan(pp) == c);
      CHECK(partition_pair_to_pyramid(pp) == clan_to_pyramid(c));
      produced.insert(encode(pp));
    }
    CHECK(excluded == 1);
    CHECK(produced.size() + 1 == count_formula(n));
    CHECK(produced == oracle::partition_pairs(n));
  }
}
