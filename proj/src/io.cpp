#include "diii/io.hpp"

#include <map>
#include <sstream>

namespace diii {

Json to_json(const Pyramid& p) {
  Json rooks = Json::array();
  for (const auto& r : p.rooks) {
    rooks.push_back({{"side", r.side == Side::L ? "L" : "R"}, {"i", r.i}, {"j", r.j}});
  }
  return {{"n", p.n}, {"rooks", rooks}};
}

Pyramid pyramid_from_json(const Json& j) {
  try {
    std::vector<Rook> rooks;
    for (const auto& r : j.at("rooks")) {
      const auto side = r.at("side").get<std::string>();
      if (side != "L" && side != "R") throw ClanError("rook side must be \"L\" or \"R\"");
      rooks.push_back({side == "L" ? Side::L : Side::R, r.at("i").get<int>(), r.at("j").get<int>()});
    }
    return make_pyramid(j.at("n").get<int>(), std::move(rooks));
  } catch (const nlohmann::json::exception& e) {
    throw ClanError(std::string("malformed pyramid JSON: ") + e.what());
  }
}

Json to_json(const RookPlacement& r) { return {{"size", r.size}, {"perm", r.perm}}; }

RookPlacement placement_from_json(const Json& j) {
  try {
    RookPlacement r{j.at("size").get<int>(), j.at("perm").get<std::vector<int>>()};
    if (!r.is_permutation()) throw ClanError("\"perm\" is not a permutation of 1..size");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ClanError(std::string("malformed placement JSON: ") + e.what());
  }
}

Json to_json(const PartitionPair& pp) {
  return {{"n", pp.n}, {"p", {pp.left, pp.right}}, {"pprime", pp.pprime}};
}

Json to_json(const WeightedDelannoyPath& w) {
  Json steps = Json::array();
  for (const auto& st : w.word) {
    const char* d = st.dir == Direction::N ? "N" : st.dir == Direction::E ? "E" : "D";
    steps.push_back({{"dir", d}, {"label", st.label}});
  }
  return {{"n", w.n}, {"word", w.to_string()}, {"steps", steps}};
}

Json to_json(const RankPolynomial& p) { return {{"coeffs", p.coeffs}, {"text", p.to_string()}}; }

Json to_json(const Sect& s) {
  Json members = Json::array();
  for (const auto& c : s.members) members.push_back(c.to_string());
  return {{"base", s.base.to_string()}, {"size", s.members.size()}, {"members", members}};
}

Json to_json(const FlagMatrix& f) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < f.g.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < f.g.cols(); ++c) {
      row.push_back({{"a", rational_text(f.g(r, c).a())}, {"b", rational_text(f.g(r, c).b())}});
    }
    rows.push_back(std::move(row));
  }
  return {{"clan", f.clan.to_string()}, {"size", f.g.rows()}, {"rows", rows}};
}

Json to_json(const WeakOrderPoset& poset) {
  Json nodes = Json::array();
  for (std::size_t k = 0; k < poset.nodes.size(); ++k) {
    nodes.push_back({{"id", k}, {"clan", poset.nodes.clans[k].to_string()}, {"length", poset.lengths[k]}});
  }
  Json edges = Json::array();
  for (const auto& e : poset.covers) edges.push_back({{"from", e.from}, {"to", e.to}, {"reflection", e.reflection}});
  return {{"n", poset.n}, {"nodes", nodes}, {"edges", edges}};
}

std::string to_dot(const WeakOrderPoset& poset) {
  std::ostringstream os;
  os << "digraph weak_order_" << poset.n << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  std::map<int, std::vector<std::size_t>> by_length;
  for (std::size_t k = 0; k < poset.nodes.size(); ++k) by_length[poset.lengths[k]].push_back(k);
  for (const auto& [len, ids] : by_length) {
    os << "  { rank=same;";
    for (auto k : ids) os << " n" << k << ";";
    os << " }  // length " << len << "\n";
  }
  for (std::size_t k = 0; k < poset.nodes.size(); ++k) {
    os << "  n" << k << " [label=\"" << poset.nodes.clans[k].to_string() << "\"];\n";
  }
  for (const auto& e : poset.covers) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.reflection << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace diii
