#ifndef SPANTRAIL_EXTREMAL_FAMILY_HPP
#define SPANTRAIL_EXTREMAL_FAMILY_HPP

#include "spantrail/graph.hpp"
#include "spantrail/recognition.hpp"

namespace spantrail {

/// G_n: a clique Q1 on 4n vertices, an independent set Q2 on 4n vertices
/// perfectly matched to Q1, and a clique Q3 on n-1 vertices joined to
/// everything else. Labels: Q1 = 0..4n-1, Q2 = 4n..8n-1 (q2_i matched to
/// q1_i), Q3 = 8n..9n-2.
struct ExtremalInstance {
	int n = 0;
	Graph graph;
	VertexSet q1, q2, q3;
	std::vector<std::pair<Vertex, Vertex>> matching; // (q1_i, q2_i)
};

/// Throws Error(NTooSmall) for n <= 1.
ExtremalInstance build_extremal(int n);

/// Closed form (5n-2)/(4n).
Rational extremal_toughness_formula(std::int64_t n);

/// Minimum of |S| / c(G - S) over S = Q3 + R, R a subset of Q1: the values
/// (n-1+r)/(r+1) for 1 <= r <= 4n-1 against (5n-1)/(4n) for R = Q1. The cut
/// returned is Q3 plus Q1 without its last vertex.
ToughnessResult structured_toughness(const ExtremalInstance& inst);

/// Counting certificate that no spanning subgraph with all degrees in [2, 4]
/// exists: each Q2 vertex needs an edge into Q3, which can absorb only 4|Q3|.
struct NoTrailCertificate {
	std::int64_t required = 0; // |Q2|
	std::int64_t budget = 0;   // 4 |Q3|
	VertexSet q2;
	VertexSet q3;
};

/// Throws Error(MalformedInstance) if some Q2 vertex does not have exactly
/// one Q1 neighbour with every other neighbour in Q3.
NoTrailCertificate no_trail_certificate(const ExtremalInstance& inst);

/// True iff in g: Q2 and Q3 are disjoint vertex sets of g, Q2 is independent,
/// every Q2 vertex has at most one neighbour outside Q3, required = |Q2|,
/// budget = 4|Q3| and required > budget.
bool check_certificate(const Graph& g, const NoTrailCertificate& cert);

} // namespace spantrail

#endif // SPANTRAIL_EXTREMAL_FAMILY_HPP
