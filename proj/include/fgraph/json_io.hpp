#ifndef FGRAPH_JSON_IO_HPP
#define FGRAPH_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "fgraph/cofree.hpp"
#include "fgraph/covariety.hpp"
#include "fgraph/graph.hpp"
#include "fgraph/relations.hpp"
#include "fgraph/transforms.hpp"

namespace fgraph {

/// nlohmann::json keeps object keys sorted, so identical data always
/// serializes to identical bytes.
using Json = nlohmann::json;

Json functor_to_json(const FunctorSpec& spec);
FunctorSpec functor_from_json(const Json& j);

Json value_to_json(const Value& v);
Value value_from_json(const Json& j);

Json graph_to_json(const FGraph& g);
GraphPtr graph_from_json(const Json& j);

/// Emits the two maps only; graphs travel in separate files.
Json hom_maps_to_json(const Hom& phi);
Hom hom_from_json(const Json& j, GraphPtr source, GraphPtr target);

Json idmap_to_json(const IdMap& f);
IdMap idmap_from_json(const Json& j);

Json relation_to_json(const RelationPair& r);
RelationPair relation_from_json(const Json& j, GraphPtr left, GraphPtr right);

/// Relation plus the per-edge-pair witness values, keyed "e|f".
Json graph_relation_to_json(const GraphRelation& r);

Json colorset_to_json(const ColorSet& x);
ColorSet colorset_from_json(const Json& j);

Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json pattern_to_json(const Pattern& p);
Pattern pattern_from_json(const Json& j);

Json handle_to_json(const SubgraphHandle& h);

Json closure_report_to_json(const ClosureAuditReport& report);

std::string closure_mode_name(ClosureMode mode);
std::optional<ClosureMode> closure_mode_from_name(const std::string& name);

/// Reads and parses a file; throws MalformedValue naming the path when the
/// file is unreadable or not valid JSON.
Json read_json_file(const std::string& path);

}  // namespace fgraph

#endif
