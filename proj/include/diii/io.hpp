// JSON and DOT renderings of the library types.
#ifndef DIII_IO_HPP
#define DIII_IO_HPP

#include <json.hpp>
#include <string>

#include "diii/delannoy.hpp"
#include "diii/flag.hpp"
#include "diii/rooks.hpp"
#include "diii/sects.hpp"
#include "diii/weak_order.hpp"

namespace diii {

using Json = nlohmann::ordered_json;

Json to_json(const Pyramid& p);
Pyramid pyramid_from_json(const Json& j);

/// {"size": m, "perm": [1-indexed rows]}
Json to_json(const RookPlacement& r);
RookPlacement placement_from_json(const Json& j);

Json to_json(const PartitionPair& pp);
Json to_json(const WeightedDelannoyPath& w);
Json to_json(const RankPolynomial& p);
Json to_json(const Sect& s);
/// Entries as {"a": "p/q", "b": "r/s"} for a + b sqrt2.
Json to_json(const FlagMatrix& f);
Json to_json(const WeakOrderPoset& poset);

/// Bottom-to-top drawing, one rank per length, edges labeled by reflection.
std::string to_dot(const WeakOrderPoset& poset);

}  // namespace diii

#endif  // DIII_IO_HPP
