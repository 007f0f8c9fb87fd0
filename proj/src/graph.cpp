#include "spantrail/graph.hpp"

#include "spantrail/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace spantrail {

namespace {

void check_pair(int n, Vertex a, Vertex b) {
	if (a < 0 || a >= n || b < 0 || b >= n)
		throw Error(ErrorCode::OutOfRangeLabel,
		            "edge (" + std::to_string(a) + ", " + std::to_string(b) +
		                ") has a label outside [0, " + std::to_string(n) + ")");
	if (a == b)
		throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
}

} // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
	std::sort(edges.begin(), edges.end());
	edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
	m_ = edges.size();
	adj_.assign(n, {});
	matrix_.assign(static_cast<std::size_t>(n) * n, 0);
	for (const Edge& e : edges) {
		adj_[e.u].push_back(e.v);
		adj_[e.v].push_back(e.u);
		matrix_[static_cast<std::size_t>(e.u) * n + e.v] = 1;
		matrix_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
	}
	for (auto& list : adj_)
		std::sort(list.begin(), list.end());
	if (n <= 64) {
		masks_.assign(n, 0);
		for (const Edge& e : edges) {
			masks_[e.u] |= std::uint64_t{1} << e.v;
			masks_[e.v] |= std::uint64_t{1} << e.u;
		}
	}
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
	if (n < 0)
		throw Error(ErrorCode::InvalidArgument, "negative vertex count");
	std::vector<Edge> list;
	list.reserve(edges.size());
	for (auto [a, b] : edges) {
		check_pair(n, a, b);
		list.emplace_back(a, b);
	}
	return Graph(n, std::move(list));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
	if (n < 0)
		throw Error(ErrorCode::InvalidArgument, "negative vertex count");
	for (const Edge& e : edges)
		check_pair(n, e.u, e.v);
	return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph Graph::complete(int n) {
	std::vector<Edge> list;
	for (Vertex a = 0; a < n; ++a)
		for (Vertex b = a + 1; b < n; ++b)
			list.emplace_back(a, b);
	return Graph(n, std::move(list));
}

std::vector<Edge> Graph::edges() const {
	std::vector<Edge> out;
	out.reserve(m_);
	for (Vertex a = 0; a < n_; ++a)
		for (Vertex b : adj_[a])
			if (a < b)
				out.emplace_back(a, b);
	return out;
}

Graph Graph::with_edge(Edge e) const {
	check_pair(n_, e.u, e.v);
	auto list = edges();
	list.push_back(e);
	return Graph(n_, std::move(list));
}

Graph Graph::without_edge(Edge e) const {
	auto list = edges();
	std::erase(list, e);
	return Graph(n_, std::move(list));
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
	const int n = g.vertex_count();
	std::vector<char> gone(n, 0);
	for (Vertex v : removed)
		gone[v] = 1;
	std::vector<VertexSet> blocks;
	std::vector<Vertex> stack;
	for (Vertex start = 0; start < n; ++start) {
		if (gone[start])
			continue;
		VertexSet block;
		gone[start] = 1;
		stack.push_back(start);
		while (!stack.empty()) {
			Vertex v = stack.back();
			stack.pop_back();
			block.push_back(v);
			for (Vertex w : g.neighbors(v)) {
				if (!gone[w]) {
					gone[w] = 1;
					stack.push_back(w);
				}
			}
		}
		std::sort(block.begin(), block.end());
		blocks.push_back(std::move(block));
	}
	return blocks;
}

int component_count(const Graph& g, const VertexSet& removed) {
	if (g.vertex_count() <= 64) {
		std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0}
		                                           : (std::uint64_t{1} << g.vertex_count()) - 1;
		return component_count_masked(g, all & ~set_to_mask(removed));
	}
	return static_cast<int>(components(g, removed).size());
}

InducedSubgraph induced(const Graph& g, const VertexSet& keep) {
	std::vector<int> relabel(g.vertex_count(), -1);
	for (std::size_t i = 0; i < keep.size(); ++i)
		relabel[keep[i]] = static_cast<int>(i);
	std::vector<Edge> list;
	for (Vertex a : keep)
		for (Vertex b : g.neighbors(a))
			if (a < b && relabel[b] >= 0)
				list.emplace_back(relabel[a], relabel[b]);
	return {Graph::from_edges(static_cast<int>(keep.size()), list), keep};
}

int component_count_masked(const Graph& g, std::uint64_t alive) {
	int count = 0;
	while (alive != 0) {
		std::uint64_t seen = alive & -alive;
		std::uint64_t frontier = seen;
		while (frontier != 0) {
			std::uint64_t next = 0;
			for (std::uint64_t f = frontier; f != 0; f &= f - 1)
				next |= g.neighbor_mask(std::countr_zero(f));
			next &= alive & ~seen;
			seen |= next;
			frontier = next;
		}
		alive &= ~seen;
		++count;
	}
	return count;
}

VertexSet mask_to_set(std::uint64_t mask) {
	VertexSet out;
	for (; mask != 0; mask &= mask - 1)
		out.push_back(std::countr_zero(mask));
	return out;
}

std::uint64_t set_to_mask(const VertexSet& s) {
	std::uint64_t mask = 0;
	for (Vertex v : s)
		mask |= std::uint64_t{1} << v;
	return mask;
}

bool spans_connected(int n, std::span<const Edge> edges) {
	if (n == 0)
		return true;
	std::vector<int> parent(n);
	std::iota(parent.begin(), parent.end(), 0);
	auto find = [&](int x) {
		while (parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	};
	int blocks = n;
	for (const Edge& e : edges) {
		int a = find(e.u), b = find(e.v);
		if (a != b) {
			parent[a] = b;
			--blocks;
		}
	}
	return blocks == 1;
}

} // namespace spantrail
