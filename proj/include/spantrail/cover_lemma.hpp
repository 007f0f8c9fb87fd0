#ifndef SPANTRAIL_COVER_LEMMA_HPP
#define SPANTRAIL_COVER_LEMMA_HPP

#include "spantrail/graph.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace spantrail {

/// Bipartite instance over labels drawn from some host universe. X and Y are
/// disjoint; every edge is (x, y) with x in X and y in Y.
struct BipartiteInstance {
	VertexSet X;
	VertexSet Y;
	std::vector<std::pair<Vertex, Vertex>> edges; // (x, y), sorted

	/// Throws Error(MalformedInstance) when an edge does not cross X x Y or X, Y overlap.
	static BipartiteInstance make(VertexSet X, VertexSet Y, std::vector<std::pair<Vertex, Vertex>> edges);

	/// N(S) for S a subset of X, sorted.
	VertexSet neighborhood(const VertexSet& S) const;

	/// The instance with y removed from Y together with its edges.
	BipartiteInstance without_y(Vertex y) const;
};

/// Plain bipartite graph on left 0..L-1, right 0..R-1.
struct BipartiteGraph {
	int left = 0;
	int right = 0;
	std::vector<std::vector<int>> adj; // left -> sorted right neighbours

	std::size_t edge_count() const;
};

/// Expanded graph: each x becomes 3 left copies, each y 2 right copies, each
/// edge xy all 6 copy pairs. left_origin / right_origin are the projection.
struct Expansion {
	BipartiteGraph graph;
	std::vector<Vertex> left_origin;  // left copy -> x
	std::vector<Vertex> right_origin; // right copy -> y
};

Expansion expand(const BipartiteInstance& inst);

struct MatchingResult {
	std::vector<int> mate_of_left; // -1 when unmatched
	int size = 0;
	/// Left vertices of a Hall-violating set (|N(Z)| < |Z|), present iff the
	/// matching does not saturate the left side.
	std::optional<std::vector<int>> deficient_left;
};

/// Maximum matching by augmenting paths in deterministic vertex order. On
/// failure the alternating-reachability set from the first unmatched left
/// vertex is returned as a Hall certificate.
MatchingResult max_matching(const BipartiteGraph& bip);

/// S with |N(S)| < (3/2)|S|.
struct DeficientSet {
	VertexSet S;
	VertexSet neighborhood;
};

struct PathComponent {
	std::vector<Vertex> vertices; // end to end; both ends in Y
};

struct CycleComponent {
	std::vector<Vertex> vertices; // cyclic order, starting at the smallest vertex
};

/// H: every x has degree exactly 2, every y degree at most 2.
struct CoverSubgraph {
	std::vector<Edge> edges; // sorted canonical host edges

	int degree(Vertex v) const;
};

struct CoverComponents {
	std::vector<PathComponent> paths;
	std::vector<CycleComponent> cycles;
};

/// Splits H into path and cycle components; paths are oriented from their
/// smaller end, components ordered by smallest vertex.
CoverComponents decompose(const CoverSubgraph& h);

/// Whether h satisfies the degree conditions over inst and uses only its edges.
bool is_valid_cover(const BipartiteInstance& inst, const CoverSubgraph& h);

/// Whether S satisfies |N(S)| < (3/2)|S| in inst.
bool is_deficient(const BipartiteInstance& inst, const VertexSet& S);

/// Either H or a deficient set. X-vertices of projected degree 3 lose the
/// edge to their largest Y neighbour. When the expansion matching fails an
/// exact flow search still looks for H, so a DeficientSet means no H exists.
std::variant<CoverSubgraph, DeficientSet> build_cover(const BipartiteInstance& inst);

/// X = x0..x(2k-1) matched to Y1 = a0..a(2k-1), all of X joined to
/// Y2 = c0..c(k-1). Labels: X first, then Y1, then Y2.
BipartiteInstance tightness_family(int k);

} // namespace spantrail

#endif // SPANTRAIL_COVER_LEMMA_HPP
