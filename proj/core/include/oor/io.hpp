#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "oor/drawing.hpp"
#include "oor/generators.hpp"
#include "oor/orientation.hpp"
#include "oor/recognizer.hpp"
#include "oor/verify.hpp"

namespace oor {

using Json = nlohmann::json;

// Rationals are written as lowest-terms "p/q" strings (or "p" for integers)
// and points as two-element arrays of such strings. Readers throw InputError
// on malformed documents.

/// {"n": .., "edges": [[u, v], ...]}
Json to_json(const Graph& g);
/// Also validates "rotation" and "outer_face_edge" when present.
Graph graph_from_json(const Json& j);

/// Graph fields plus "rotation" and "outer_face_edge": [tail, head, "left"].
Json to_json(const EmbeddedGraph& g);
EmbeddedGraph embedded_from_json(const Json& j);

Json to_json(const InnerChordalGraph& ic);

/// {"nodes": [{"kind": "K4", "vertices": [...], "inner": v}, ...],
///  "tree_edges": [[i, j, [u, v]], ...]}
Json to_json(const ConstructionTree& t);
ConstructionTree tree_from_json(const Json& j);

/// {"chords": [[[u, v], "->", t], ...]}
Json to_json(const ChordOrientation& o);
ChordOrientation orientation_from_json(const Json& j);

/// {"points": [["p/q", "r/s"], ...], "edges": [[u, v], ...]}
Json to_json(const Drawing& d);
Drawing drawing_from_json(const Json& j);

/// {"vertices": [["p/q", "r/s"], ...]}
Json to_json(const SimplePolygon& p);
SimplePolygon polygon_from_json(const Json& j);

Json to_json(const RejectReason& r);
Json to_json(const VerificationReport& r);
/// Graph fields plus "family", "size", "seed" and the ground-truth "tree".
Json to_json(const Instance& inst, const InstanceSpec& spec);

Json point_to_json(const RationalPoint& p);
RationalPoint point_from_json(const Json& j);

/// Parses text; throws InputError naming the position of a syntax error.
Json parse_json(const std::string& text);
/// Reads a whole file ("-" is stdin).
std::string read_text(const std::string& path);
/// Writes text to a file ("-" or empty is stdout).
void write_text(const std::string& path, const std::string& text);

}  // namespace oor
