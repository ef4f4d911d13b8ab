#pragma once

#include <string>

#include "gaingraph/graph.hpp"

namespace gaingraph {

// Parses a GraphDocument: {"n": int, "edges": [{"u":..,"v":..,"gain":
// {"re":..,"im":..} | {"turns":"p/q"}}]}. Gains given as turns mean
// exp(2 pi i p/q) and survive round trips exactly. Throws ParseError
// (with the edge index) or the graph validation errors.
GainGraph parse_document(const std::string& text);

// Normalized serialization: edges sorted, turns kept as reduced
// rationals, cartesian gains written with full precision.
std::string write_document(const GainGraph& g);

// FNV-1a digest of the normalized serialization.
std::string document_digest(const GainGraph& g);

}  // namespace gaingraph
