#include "diii/verify.hpp"

#include <functional>
#include <mutex>
#include <set>

#include "diii/delannoy.hpp"
#include "diii/flag.hpp"
#include "diii/parallel.hpp"
#include "diii/rooks.hpp"
#include "diii/sects.hpp"
#include "diii/weak_order.hpp"

namespace diii {

namespace {

// Collects the first failure message; safe to call from workers.
class Failure {
 public:
  void note(std::string msg) {
    std::lock_guard lock(mu_);
    if (first_.empty()) first_ = std::move(msg);
  }
  bool any() const { return !first_.empty(); }
  const std::string& what() const { return first_; }

 private:
  std::mutex mu_;
  std::string first_;
};

using SizeCheck = std::function<void(int, const ClanSet&, Failure&)>;

void per_clan(const ClanSet& all, Failure& f, const std::function<std::string(const DiiiClan&)>& check) {
  parallel_for(all.size(), [&](std::size_t k) {
    auto msg = check(all.clans[k]);
    if (!msg.empty()) f.note(all.clans[k].to_string() + ": " + msg);
  });
}

void counting(int n, const ClanSet& all, Failure& f) {
  const Count e = all.size(), a = count_formula(n), b = count_recurrence(n);
  if (e != a || e != b) {
    f.note("n=" + std::to_string(n) + ": enumeration " + std::to_string(e) + ", formula " + std::to_string(a) +
           ", recurrence " + std::to_string(b));
  }
}

void rank_poly(int n, const ClanSet&, Failure& f) {
  auto a = rank_polynomial(weak_order_poset(n)), b = rank_poly_recurrence(n);
  if (!(a == b)) f.note("n=" + std::to_string(n) + ": poset " + a.to_string() + " vs recurrence " + b.to_string());
}

void action(int n, const ClanSet& all, Failure& f) {
  per_clan(all, f, [n](const DiiiClan& c) -> std::string {
    const int len = length(c);
    for (int i = 1; i <= n; ++i) {
      auto up = apply_reflection(i, c);
      if (!(apply_reflection(i, up) == up)) return "s_" + std::to_string(i) + " not idempotent";
      if (!(up == c) && length(up) != len + 1) return "s_" + std::to_string(i) + " does not raise length by one";
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        auto s = [](int k, const DiiiClan& x) { return apply_reflection(k, x); };
        const bool ok = coxeter_order(n, i, j) == 3 ? s(i, s(j, s(i, c))) == s(j, s(i, s(j, c)))
                                                    : s(i, s(j, c)) == s(j, s(i, c));
        if (!ok) return "braid relation fails for s_" + std::to_string(i) + ", s_" + std::to_string(j);
      }
    }
    return "";
  });
}

void extremes(int n, const ClanSet&, Failure& f) {
  auto poset = weak_order_poset(n);
  auto top = poset.maximal_nodes();
  if (top.size() != 1) {
    f.note("n=" + std::to_string(n) + ": " + std::to_string(top.size()) + " maximal clans");
    return;
  }
  const auto& max = poset.nodes.clans[top[0]];
  if (!(max == maximal_clan(n)) || poset.lengths[top[0]] != n * (n - 1) / 2) {
    f.note("n=" + std::to_string(n) + ": maximum is " + max.to_string());
  }
  auto bottom = poset.minimal_nodes();
  if (bottom.size() != checked_pow2(n - 1)) f.note("n=" + std::to_string(n) + ": wrong number of minimal clans");
  for (int k : bottom) {
    if (!poset.nodes.clans[k].clan().is_matchless()) f.note("minimal clan " + poset.nodes.clans[k].to_string() + " has pairs");
  }
}

void sect_checks(int n, const ClanSet& all, Failure& f) {
  auto ss = sects(all);
  std::size_t total = 0;
  for (const auto& s : ss) {
    total += s.members.size();
    if (s.longest().size() != 1) f.note("sect of " + s.base.to_string() + " has no unique longest clan");
  }
  if (ss.size() != checked_pow2(n - 1) || total != all.size()) f.note("n=" + std::to_string(n) + ": sects do not partition");
  auto big = big_sect(n);
  if (big.members.size() != epsilon_count(n) || epsilon_count(n) != epsilon_recurrence(n)) {
    f.note("n=" + std::to_string(n) + ": big sect has " + std::to_string(big.members.size()) + " clans");
  }
  for (const auto& c : big.members) {
    auto x = clan_to_pfpf(c);
    if (!x.is_valid() || !(pfpf_to_clan(x) == c)) f.note(c.to_string() + ": partial involution round trip fails");
  }
}

void rook_checks(int n, const ClanSet& all, Failure& f) {
  per_clan(all, f, [](const DiiiClan& c) -> std::string {
    auto p = clan_to_pyramid(c);
    if (!p.is_valid()) return "pyramid invalid";
    if (!(pyramid_to_clan(p) == c)) return "pyramid round trip fails";
    if (is_diii(decode_pyramid(p.mirrored()))) return "both pyramids decode to DIII clans";
    auto r = pyramid_to_placement(p);
    if (!(placement_to_clan(r) == c) || !(placement_to_clan(rotate_placement(r)) == c)) return "placement round trip fails";
    return "";
  });
  if (2 * n <= 12) {
    const auto even = doubly_symmetric_placements(2 * n).size();
    const auto odd = doubly_symmetric_placements(2 * n + 1).size();
    if (even != 2 * all.size() || odd != even) {
      f.note("n=" + std::to_string(n) + ": " + std::to_string(even) + " even and " + std::to_string(odd) +
             " odd placements");
    }
  }
}

void partition_checks(int n, const ClanSet& all, Failure& f) {
  std::set<PartitionPair> seen;
  for (const auto& c : all) {
    PartitionPair pp;
    try {
      pp = pyramid_to_partition_pair(clan_to_pyramid(c));
    } catch (const ClanError&) {
      continue;  // the one clan whose pyramid has an empty block
    }
    if (!pp.is_valid()) f.note(c.to_string() + ": partition pair not minimally intersecting");
    if (!(partition_pair_to_clan(pp) == c)) f.note(c.to_string() + ": partition pair round trip fails");
    seen.insert(std::min(pp, pp.swapped()));
  }
  if (seen.size() + 1 != all.size()) f.note("n=" + std::to_string(n) + ": " + std::to_string(seen.size()) + " partition pairs");
}

void delannoy_checks(int, const ClanSet& all, Failure& f) {
  std::set<std::string> words;
  for (const auto& c : all) {
    auto w = clan_to_path(c);
    auto chk = validate_path(w);
    if (!chk.ok) f.note(c.to_string() + ": path fails condition " + std::to_string(chk.condition));
    else if (!(path_to_clan(w) == c)) f.note(c.to_string() + ": path round trip fails");
    words.insert(w.to_string());
  }
  if (words.size() != all.size()) f.note("clan to path is not injective");
}

void flag_checks(int n, const ClanSet& all, Failure& f) {
  per_clan(all, f, [n](const DiiiClan& c) -> std::string {
    auto g = representative_matrix(c).g;
    if (!verify_special_orthogonal(g)) return "flag matrix not in SO(2n)";
    if (intersection_parity(g) != n % 2) return "intersection parity differs from n";
    return "";
  });
}

}  // namespace

std::vector<CheckResult> run_verification(int n) {
  const std::vector<std::pair<std::string, SizeCheck>> suites = {
      {"counting", counting},          {"rank polynomial", rank_poly}, {"reflection action", action},
      {"weak order extremes", extremes}, {"sects", sect_checks},      {"rook placements", rook_checks},
      {"partition pairs", partition_checks}, {"delannoy paths", delannoy_checks}, {"flag matrices", flag_checks},
  };
  std::vector<ClanSet> sets;
  for (int k = 1; k <= n; ++k) sets.push_back(enumerate_diii(k));

  std::vector<CheckResult> out;
  for (const auto& [name, fn] : suites) {
    Failure f;
    for (int k = 1; k <= n && !f.any(); ++k) {
      try {
        fn(k, sets[k - 1], f);
      } catch (const std::exception& e) {
        f.note("n=" + std::to_string(k) + ": " + e.what());
      }
    }
    out.push_back({name, !f.any(), f.any() ? f.what() : "n = 1.." + std::to_string(n)});
  }
  return out;
}

}  // namespace diii
