#ifndef SPANTRAIL_GRAPH_HPP
#define SPANTRAIL_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spantrail {

using Vertex = int;
using VertexSet = std::vector<Vertex>; // sorted, duplicate free

/// Unordered pair of distinct vertices, smaller label first.
struct Edge {
	Vertex u = 0;
	Vertex v = 0;

	Edge() = default;
	Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

	bool has(Vertex x) const noexcept { return x == u || x == v; }
	Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

	friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built;
/// with_edge / without_edge return modified copies.
class Graph {
public:
	Graph() = default;

	/// Throws Error(OutOfRangeLabel) or Error(SelfLoop). Duplicate and
	/// reversed pairs collapse.
	static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);
	static Graph from_edges(int n, std::span<const Edge> edges);
	static Graph complete(int n);

	int vertex_count() const noexcept { return n_; }
	std::size_t edge_count() const noexcept { return m_; }

	const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
	int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
	bool adjacent(Vertex a, Vertex b) const {
		return matrix_[static_cast<std::size_t>(a) * n_ + b] != 0;
	}
	bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

	/// All edges in canonical sorted order.
	std::vector<Edge> edges() const;

	bool is_complete() const noexcept {
		return m_ == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
	}

	Graph with_edge(Edge e) const;
	Graph without_edge(Edge e) const;

	/// Neighbourhood bitmask; only valid for n <= 64.
	std::uint64_t neighbor_mask(Vertex v) const { return masks_[v]; }

	friend bool operator==(const Graph& a, const Graph& b) {
		return a.n_ == b.n_ && a.adj_ == b.adj_;
	}

private:
	Graph(int n, std::vector<Edge> edges);

	int n_ = 0;
	std::size_t m_ = 0;
	std::vector<std::vector<Vertex>> adj_;
	std::vector<unsigned char> matrix_;
	std::vector<std::uint64_t> masks_;
};

/// Blocks of the partition of V(g) - removed into connected components,
/// each block sorted, blocks ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});

/// c(g - removed).
int component_count(const Graph& g, const VertexSet& removed = {});

struct InducedSubgraph {
	Graph graph;
	std::vector<Vertex> original; // new label -> old label
};

/// Subgraph induced by `keep`, relabelled 0..|keep|-1 in increasing order.
InducedSubgraph induced(const Graph& g, const VertexSet& keep);

/// Bitmask helpers for the exponential searches (n <= 64).
int component_count_masked(const Graph& g, std::uint64_t alive);

VertexSet mask_to_set(std::uint64_t mask);
std::uint64_t set_to_mask(const VertexSet& s);

/// Whether every vertex of the edge set's span reaches every other one and the
/// span covers all of 0..n-1.
bool spans_connected(int n, std::span<const Edge> edges);

} // namespace spantrail

#endif // SPANTRAIL_GRAPH_HPP
