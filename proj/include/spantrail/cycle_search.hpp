#ifndef SPANTRAIL_CYCLE_SEARCH_HPP
#define SPANTRAIL_CYCLE_SEARCH_HPP

#include "spantrail/error.hpp"
#include "spantrail/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace spantrail {

/// A cycle c0 c1 ... c(m-1) of some host graph with the orientation c(i) -> c(i+1).
class OrientedCycle {
public:
	OrientedCycle() = default;

	/// Checks the sequence is a cycle of g (m >= 3, distinct vertices, all
	/// consecutive pairs adjacent); throws Error(InvalidArgument) otherwise.
	OrientedCycle(const Graph& g, std::vector<Vertex> sequence);

	const std::vector<Vertex>& vertices() const noexcept { return seq_; }
	int length() const noexcept { return static_cast<int>(seq_.size()); }
	bool contains(Vertex v) const noexcept {
		return v >= 0 && v < static_cast<Vertex>(pos_.size()) && pos_[v] >= 0;
	}

	/// x+ ; throws Error(VertexNotOnCycle).
	Vertex successor(Vertex x) const;
	Vertex predecessor(Vertex x) const;

	/// Whether uv is one of the cycle's edges.
	bool has_edge(Vertex u, Vertex v) const;
	std::vector<Edge> edges() const;

	/// Vertex set, sorted.
	VertexSet vertex_set() const;

	friend bool operator==(const OrientedCycle& a, const OrientedCycle& b) { return a.seq_ == b.seq_; }

	/// Index of x in vertices(); throws Error(VertexNotOnCycle).
	int position(Vertex x) const;

private:
	std::vector<Vertex> seq_;
	std::vector<int> pos_; // host vertex -> index in seq_, or -1
};

/// Shortest of the two arcs between u and v along c.
int cyclic_distance(const OrientedCycle& c, Vertex u, Vertex v);

inline constexpr int default_cycle_limit = 20;

/// Length of a longest cycle (0 when acyclic), by branch and bound.
int longest_cycle_length(const Graph& g, int limit = default_cycle_limit);

/// Visits every cycle of exactly `length` vertices once, in canonical form
/// (smallest vertex first, second vertex smaller than the last), in
/// lexicographic order of the sequences, until `visit` returns false.
void for_each_cycle_of_length(const Graph& g, int length,
                              const std::function<bool(const std::vector<Vertex>&)>& visit,
                              int limit = default_cycle_limit);

/// Lexicographically smallest canonical longest cycle, or nullopt if g is acyclic.
std::optional<OrientedCycle> find_longest_cycle(const Graph& g, int limit = default_cycle_limit);

/// Whether g - V(c) has no edges.
bool is_dominating(const Graph& g, const OrientedCycle& c);

/// Raised when no longest cycle dominates; carries the longest cycles examined.
class LemmaViolation : public Error {
public:
	LemmaViolation(Graph g, std::vector<OrientedCycle> cycles);

	const Graph& graph() const noexcept { return graph_; }
	const std::vector<OrientedCycle>& longest_cycles() const noexcept { return cycles_; }

private:
	Graph graph_;
	std::vector<OrientedCycle> cycles_;
};

/// First longest cycle in canonical order that dominates g. Throws
/// Error(NoCycle) when g is acyclic and LemmaViolation when none dominates.
OrientedCycle find_dominating_longest_cycle(const Graph& g, int limit = default_cycle_limit);

} // namespace spantrail

#endif // SPANTRAIL_CYCLE_SEARCH_HPP
