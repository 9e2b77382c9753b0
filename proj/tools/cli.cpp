#include "cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <sstream>

#include "diii/diii.hpp"

namespace diii::cli {

namespace {

struct Options {
  unsigned threads = 1;
  int n = 0;
  int index = 0;
  std::string clan;
  std::string count_method;
  std::string rank_method;
  std::string enum_format;
  std::string poset_format;
  std::string flag_format;
  std::string to;
  std::string from;
  std::string payload;
  bool sizes_only = false;
  bool json = false;
};

void print_count(const Options& o, std::ostream& out) {
  if (o.count_method == "formula") {
    out << count_formula(o.n) << "\n";
  } else if (o.count_method == "recurrence") {
    out << count_recurrence(o.n) << "\n";
  } else if (o.count_method == "enumeration") {
    out << enumerate_diii(o.n).size() << "\n";
  } else {
    const Count f = count_formula(o.n), r = count_recurrence(o.n), e = o.n == 0 ? 1 : enumerate_diii(o.n).size();
    out << "formula     " << f << "\nrecurrence  " << r << "\nenumeration " << e << "\n";
    if (f != r || f != e) throw std::runtime_error("counting methods disagree");
  }
}

void print_enumerate(const Options& o, std::ostream& out) {
  auto all = enumerate_diii(o.n);
  if (o.enum_format == "json") {
    Json arr = Json::array();
    for (const auto& c : all) arr.push_back(c.to_string(TextFormat::Spaced));
    out << arr.dump() << "\n";
    return;
  }
  const auto fmt = o.enum_format == "spaced" ? TextFormat::Spaced : TextFormat::Auto;
  for (const auto& c : all) out << c.to_string(fmt) << "\n";
}

void print_rank_poly(const Options& o, std::ostream& out) {
  if (o.rank_method == "poset") {
    out << rank_polynomial(weak_order_poset(o.n)).to_string() << "\n";
  } else if (o.rank_method == "recurrence") {
    out << rank_poly_recurrence(o.n).to_string() << "\n";
  } else {
    auto a = rank_polynomial(weak_order_poset(o.n)), b = rank_poly_recurrence(o.n);
    out << "poset      " << a.to_string() << "\nrecurrence " << b.to_string() << "\n";
    if (!(a == b)) throw std::runtime_error("rank polynomials differ");
  }
}

void print_sects(const Options& o, std::ostream& out) {
  auto ss = sects(o.n);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& s : ss) arr.push_back(to_json(s));
    out << arr.dump(2) << "\n";
    return;
  }
  for (const auto& s : ss) {
    out << s.base.to_string() << "  " << s.members.size();
    if (!o.sizes_only) {
      out << " :";
      for (const auto& c : s.members) out << ' ' << c.to_string();
    }
    out << "\n";
  }
}

void print_big_sect(const Options& o, std::ostream& out) {
  auto s = big_sect(o.n);
  out << "base " << s.base.to_string() << ", " << s.members.size() << " clans\n";
  for (const auto& c : s.members) {
    auto x = clan_to_pfpf(c);
    out << c.to_string() << "  {" << x.to_string() << "}\n";
  }
}

void print_convert(const Options& o, std::ostream& out) {
  if (o.to.empty() == o.from.empty()) throw CLI::ValidationError("convert", "give exactly one of --to or --from");
  if (!o.to.empty()) {
    auto c = DiiiClan::parse(o.payload);
    if (o.to == "pyramid") {
      out << to_json(clan_to_pyramid(c)).dump() << "\n";
    } else if (o.to == "rooks") {
      out << to_json(clan_to_placement(c)).dump() << "\n";
    } else if (o.to == "partitions") {
      out << to_json(pyramid_to_partition_pair(clan_to_pyramid(c))).dump() << "\n";
    } else if (o.to == "delannoy") {
      auto w = clan_to_path(c);
      out << (o.json ? to_json(w).dump() : w.to_string()) << "\n";
    } else {
      out << clan_to_pfpf(c).to_string() << "\n";
    }
    return;
  }
  auto parse_json = [&]() {
    try {
      return Json::parse(o.payload);
    } catch (const nlohmann::json::exception& e) {
      throw ClanError(std::string("malformed JSON: ") + e.what());
    }
  };
  DiiiClan c = [&] {
    if (o.from == "rooks") return placement_to_clan(placement_from_json(parse_json()));
    if (o.from == "pyramid") return pyramid_to_clan(pyramid_from_json(parse_json()));
    if (o.from == "delannoy") return path_to_clan(WeightedDelannoyPath::parse(o.payload));
    if (o.n < 1) throw CLI::ValidationError("--n", "--from pfpf needs --n <n>");
    return pfpf_to_clan(PartialFpfInvolution::parse(o.n, o.payload));
  }();
  out << c.to_string() << "\n";
}

void print_flag(const Options& o, std::ostream& out) {
  auto f = representative_matrix(DiiiClan::parse(o.clan));
  if (o.flag_format == "json") {
    out << to_json(f).dump() << "\n";
    return;
  }
  const Eigen::Index m = f.g.rows();
  std::size_t width = 1;
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) width = std::max(width, f.g(r, c).to_string().size());
  }
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) {
      out << (c ? "  " : "") << std::setw(static_cast<int>(width)) << f.g(r, c).to_string();
    }
    out << "\n";
  }
}

bool print_verify(const Options& o, std::ostream& out) {
  auto rows = run_verification(o.n);
  bool all = true;
  for (const auto& r : rows) {
    out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(20) << r.name << r.detail << "\n";
    all = all && r.pass;
  }
  out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of DIII clans: enumeration, weak order, sects, rook and path models, flags"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "worker threads (0 = hardware concurrency)")->check(CLI::Range(0u, 1024u));

  auto positive_n = [&](CLI::App* sub) { sub->add_option("n", o.n, "half-length")->required()->check(CLI::Range(1, 24)); };

  auto* count = app.add_subcommand("count", "number of DIII clans of half-length n");
  count->add_option("n", o.n, "half-length")->required()->check(CLI::Range(0, 60));
  count->add_option("--method", o.count_method, "formula, recurrence, enumeration or all")
      ->check(CLI::IsMember({"formula", "recurrence", "enumeration", "all"}))
      ->default_val("formula");

  auto* enumerate = app.add_subcommand("enumerate", "list all DIII clans in canonical order");
  positive_n(enumerate);
  enumerate->add_option("--format", o.enum_format)->check(CLI::IsMember({"compact", "spaced", "json"}))->default_val("compact");

  auto* len = app.add_subcommand("length", "length of a clan");
  len->add_option("clan", o.clan)->required();

  auto* act = app.add_subcommand("act", "apply the simple reflection s_i");
  act->add_option("i", o.index)->required();
  act->add_option("clan", o.clan)->required();

  auto* poset = app.add_subcommand("poset", "weak order cover relations");
  positive_n(poset);
  poset->add_option("--format", o.poset_format)->check(CLI::IsMember({"dot", "json"}))->default_val("dot");

  auto* rank = app.add_subcommand("rank-poly", "rank generating polynomial");
  positive_n(rank);
  rank->add_option("--method", o.rank_method)->check(CLI::IsMember({"poset", "recurrence", "both"}))->default_val("poset");

  auto* sect = app.add_subcommand("sects", "clans grouped by base clan");
  positive_n(sect);
  sect->add_flag("--sizes-only", o.sizes_only, "print base clans and sizes only");
  sect->add_flag("--json", o.json);

  auto* big = app.add_subcommand("big-sect", "the sect over the dense cell, with partial involutions");
  positive_n(big);

  auto* convert = app.add_subcommand("convert", "translate between clans and the other models");
  convert->add_option("--to", o.to)->check(CLI::IsMember({"pyramid", "rooks", "partitions", "delannoy", "pfpf"}));
  convert->add_option("--from", o.from)->check(CLI::IsMember({"rooks", "pyramid", "delannoy", "pfpf"}));
  convert->add_option("--n", o.n, "half-length for --from pfpf")->check(CLI::Range(1, 24));
  convert->add_flag("--json", o.json, "JSON output for --to delannoy");
  convert->add_option("input", o.payload, "clan, JSON, word or map")->required();

  auto* flag = app.add_subcommand("flag", "representative flag matrix over Q(sqrt2)");
  flag->add_option("clan", o.clan)->required();
  flag->add_option("--format", o.flag_format)->check(CLI::IsMember({"pretty", "json"}))->default_val("pretty");

  auto* verify = app.add_subcommand("verify", "run the invariant suite for sizes 1..n");
  verify->add_option("n", o.n)->required()->check(CLI::Range(1, 8));

  std::vector<const char*> argv{"diii"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  set_thread_count(o.threads);

  try {
    if (*count) {
      print_count(o, out);
    } else if (*enumerate) {
      print_enumerate(o, out);
    } else if (*len) {
      out << length(DiiiClan::parse(o.clan)) << "\n";
    } else if (*act) {
      auto c = DiiiClan::parse(o.clan);
      if (o.index < 1 || o.index > c.n()) {
        err << "error: reflection index must be in 1.." << c.n() << "\n";
        return 2;
      }
      out << apply_reflection(o.index, c).to_string() << "\n";
    } else if (*poset) {
      auto p = weak_order_poset(o.n);
      out << (o.poset_format == "json" ? to_json(p).dump(2) + "\n" : to_dot(p));
    } else if (*rank) {
      print_rank_poly(o, out);
    } else if (*sect) {
      print_sects(o, out);
    } else if (*big) {
      print_big_sect(o, out);
    } else if (*convert) {
      print_convert(o, out);
    } else if (*flag) {
      print_flag(o, out);
    } else if (*verify) {
      return print_verify(o, out) ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace diii::cli
