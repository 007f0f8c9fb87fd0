#ifndef SPANTRAIL_TRAIL_BUILDER_HPP
#define SPANTRAIL_TRAIL_BUILDER_HPP

#include "spantrail/cover_lemma.hpp"
#include "spantrail/cycle_search.hpp"
#include "spantrail/graph.hpp"
#include "spantrail/recognition.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace spantrail {

/// Spanning connected subgraph with every degree even and at most 4; the
/// edge-set form of a spanning 2-trail.
struct TwoTrail {
	std::vector<Edge> edges; // sorted
	std::vector<int> degrees; // indexed by host vertex

	static TwoTrail from_edges(int n, std::vector<Edge> edges);
};

/// Which guarantee of the construction failed. Each tag is paired with a
/// witness showing the input breaks 3/2-toughness or 2K2-freeness, or with
/// the evidence of an internal inconsistency.
enum class FailureStep {
	NotEnoughVertices,
	NoCycle,
	LemmaViolation,
	ClaimA_a,       // an exterior vertex sees two consecutive cycle vertices
	ClaimA_b,       // u1+ v1+ is an edge
	ClaimA_c,       // non-spanning longest cycle with fewer than 7 vertices
	CoverDeficient, // the exterior bipartite graph fails 3/2-expansion
	ClaimB_b,
	ClaimC_NoDistantPair,
	Case2_NoChord,
	Case2_ToughnessStructure,
};

std::string_view to_string(FailureStep step);

struct BuildFailure {
	FailureStep step;
	std::string detail;
	VertexSet vertices;
	std::vector<Edge> edges;
	std::optional<ToughnessCut> cut;            // certifies toughness < 3/2
	std::optional<TwoK2Witness> induced_2k2;    // certifies not 2K2-free
	std::optional<std::vector<Vertex>> longer_cycle; // beats the "longest" cycle
};

/// Replays a failure's certificate against g: true when the cut violates
/// 3/2-toughness, the 2K2 is induced in g, or the longer cycle is a genuine
/// cycle of g longer than `cycle_length`.
bool witness_holds(const Graph& g, const BuildFailure& failure, int cycle_length);

/// A path component of H with ends u, v on the cycle and their H-neighbours s, t.
struct CoverPath {
	std::vector<Vertex> vertices; // u ... v

	Vertex u() const { return vertices.front(); }
	Vertex v() const { return vertices.back(); }
	Vertex s() const { return vertices[1]; }
	Vertex t() const { return vertices[vertices.size() - 2]; }
};

struct CoverDecomposition {
	std::vector<Edge> h_edges; // sorted
	std::vector<CoverPath> paths;
	std::vector<CycleComponent> cycles; // their union is D
	int swaps = 0;
};

/// X = V(g) - V(c), Y = V(c), edges E(X, Y). Throws Error(NotDominating).
BipartiteInstance exterior_bipartite(const Graph& g, const OrientedCycle& c);

/// Applies the end-swap (replace s_i u_i by s_i u_j, and the three symmetric
/// variants) until none applies, then decomposes. The result has no edge
/// from any s_i / t_i to an end of a different path.
CoverDecomposition minimize_components(const Graph& g, const OrientedCycle& c, const CoverSubgraph& h);

struct MergedPath {
	std::vector<Vertex> vertices;
	std::vector<Edge> edges;      // H path edges plus connectors
	std::vector<Edge> connectors; // added chords, none on the cycle
};

/// Chains every path component into one path avoiding E(c).
std::variant<MergedPath, BuildFailure> merge_paths(const Graph& g, const OrientedCycle& c,
                                                   const CoverDecomposition& decomp);

enum class Case2Branch {
	LongPath = 1,     // |V(H1)| >= 4
	ShortPathFar = 2, // |V(H1)| = 3, dist(u1, v1) >= 3
	Reroot = 3,       // H1 replaced by u' s1 v'
	RewireD = 4,      // a D-cycle opened into a second path
};

enum class Route { SpanningCycle, CycleWithD, Case1, Case2 };

std::string_view to_string(Route route);
std::string_view to_string(Case2Branch branch);

struct BuildTrace {
	std::optional<OrientedCycle> cycle;
	std::optional<Route> route;
	std::vector<Case2Branch> case2_branches;
	std::vector<std::string> steps; // the T formula applied at each stage
	int path_components = 0;
	int swaps = 0;
};

/// Dispatch on the number of path components of a minimized cover H of the
/// exterior: none gives C + D, one goes to assemble_case2, more are merged
/// into a single path first. Records route, swaps and path count in `trace`.
std::variant<TwoTrail, BuildFailure> assemble_from_cover(const Graph& g, const OrientedCycle& c,
                                                         const CoverDecomposition& decomp,
                                                         BuildTrace* trace = nullptr);

std::variant<TwoTrail, BuildFailure> assemble_case1(const Graph& g, const OrientedCycle& c,
                                                    const CoverDecomposition& decomp, const MergedPath& path,
                                                    BuildTrace* trace = nullptr);

std::variant<TwoTrail, BuildFailure> assemble_case2(const Graph& g, const OrientedCycle& c,
                                                    const CoverDecomposition& decomp,
                                                    BuildTrace* trace = nullptr);

struct BuildOptions {
	int cycle_limit = default_cycle_limit;
};

struct BuildResult {
	std::variant<TwoTrail, BuildFailure> outcome;
	BuildTrace trace;

	bool ok() const { return std::holds_alternative<TwoTrail>(outcome); }
	const TwoTrail& trail() const { return std::get<TwoTrail>(outcome); }
	const BuildFailure& failure() const { return std::get<BuildFailure>(outcome); }
};

/// Runs the whole construction. Every returned trail has been accepted by
/// verify_2trail. Throws SizeLimitExceeded from the cycle search.
BuildResult find_spanning_2trail(const Graph& g, const BuildOptions& options = {});

enum class TrailDefect { NotAnEdge, RepeatedEdge, Uncovered, OddDegree, DegreeAboveFour, Disconnected };

std::string_view to_string(TrailDefect defect);

struct TrailRejection {
	TrailDefect defect;
	Vertex vertex; // for edge defects, the edge's first end
};

struct TrailVerdict {
	std::vector<TrailRejection> rejections; // empty iff accepted

	bool accepted() const { return rejections.empty(); }
};

TrailVerdict verify_2trail(const Graph& g, const std::vector<Edge>& edges);

struct OracleLimits {
	int max_vertices = 12;
	std::size_t max_edges = 28;
};

struct OracleResult {
	bool exists = false;
	std::optional<TwoTrail> witness;
	std::uint64_t nodes = 0; // search nodes visited
};

/// Exhaustive backtracking over edge inclusion with degree, parity and
/// connectivity propagation. Runs when either limit is met.
OracleResult oracle_exists_2trail(const Graph& g, const OracleLimits& limits = {});

} // namespace spantrail

#endif // SPANTRAIL_TRAIL_BUILDER_HPP
