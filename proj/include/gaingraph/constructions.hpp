#pragma once

#include <optional>

#include "gaingraph/graph.hpp"

namespace gaingraph {

enum class DoubleKind { hermitian_block, identity_block, odd_anchor, sylvester };

// [A B; B* -A] on 2n vertices. B must be Hermitian of the same order
// with entries in T union {0}.
GainGraph hermitian_double(const GainGraph& g, const GainMatrix& b);

// [A zI; conj(z)I -A]: two copies joined by a perfect matching of gain z.
GainGraph identity_block_double(const GainGraph& g, const Unit& z);

// [0 a -a; a* A' O; -a* O -A'] on 2n-1 vertices, sharing the anchor.
GainGraph odd_anchor_double(const GainGraph& g, int anchor);

// [A A+zI; A+conj(z)I -A] on 2n vertices; nullopt z means z = 0 (the
// cross diagonal is absent).
GainGraph sylvester_double(const GainGraph& g, const std::optional<Unit>& z);

// The 5-vertex gain graph of the paper's running counterexample, with
// omega = exp(i pi / 3).
GainGraph example2_fixture();

// Signed graph: hexagon with a negative 1-4 chord, a positive 4-6 chord,
// and s extra vertices joined to hexagon vertices 1 and 5 (0-based: 0
// and 4).
GainGraph gamma_s(int s);

// Same underlying graph, every gain replaced by i.
GainGraph all_imaginary(const GainGraph& g);

// Search fixtures: two triangles sharing a vertex plus a pendant (3a),
// and two triangles plus a quadrilateral (3b). All gains 1.
GainGraph fig3a_fixture();
GainGraph fig3b_fixture();

}  // namespace gaingraph
