#include "spantrail/trail_builder.hpp"

#include <algorithm>
#include <numeric>

namespace spantrail {

std::string_view to_string(TrailDefect defect) {
	switch (defect) {
	case TrailDefect::NotAnEdge: return "not an edge of the graph";
	case TrailDefect::RepeatedEdge: return "repeated edge";
	case TrailDefect::Uncovered: return "uncovered vertex";
	case TrailDefect::OddDegree: return "odd degree";
	case TrailDefect::DegreeAboveFour: return "degree above 4";
	case TrailDefect::Disconnected: return "disconnected";
	}
	return "unknown";
}

TrailVerdict verify_2trail(const Graph& g, const std::vector<Edge>& edges) {
	TrailVerdict verdict;
	const int n = g.vertex_count();
	std::vector<Edge> sorted = edges;
	std::sort(sorted.begin(), sorted.end());
	for (std::size_t i = 0; i < sorted.size(); ++i) {
		const Edge& e = sorted[i];
		if (!g.contains(e.u) || !g.contains(e.v) || e.u == e.v || !g.adjacent(e.u, e.v)) {
			verdict.rejections.push_back({TrailDefect::NotAnEdge, e.u});
			return verdict;
		}
		if (i > 0 && sorted[i - 1] == e) {
			verdict.rejections.push_back({TrailDefect::RepeatedEdge, e.u});
			return verdict;
		}
	}

	std::vector<int> deg(n, 0);
	for (const Edge& e : sorted) {
		++deg[e.u];
		++deg[e.v];
	}
	auto first = [&](auto pred) {
		for (Vertex v = 0; v < n; ++v)
			if (pred(v))
				return v;
		return -1;
	};
	if (Vertex v = first([&](Vertex w) { return deg[w] == 0; }); v >= 0)
		verdict.rejections.push_back({TrailDefect::Uncovered, v});
	if (Vertex v = first([&](Vertex w) { return deg[w] % 2 != 0; }); v >= 0)
		verdict.rejections.push_back({TrailDefect::OddDegree, v});
	if (Vertex v = first([&](Vertex w) { return deg[w] > 4; }); v >= 0)
		verdict.rejections.push_back({TrailDefect::DegreeAboveFour, v});

	// Connectivity among covered vertices; an uncovered vertex is already reported.
	std::vector<int> parent(n);
	std::iota(parent.begin(), parent.end(), 0);
	auto find = [&](int x) {
		while (parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	};
	for (const Edge& e : sorted)
		parent[find(e.u)] = find(e.v);
	Vertex root = first([&](Vertex w) { return deg[w] > 0; });
	if (root >= 0) {
		Vertex stray = first([&](Vertex w) { return deg[w] > 0 && find(w) != find(root); });
		if (stray >= 0)
			verdict.rejections.push_back({TrailDefect::Disconnected, stray});
	}
	return verdict;
}

namespace {

enum class State : unsigned char { Open, In, Out };

struct Oracle {
	const Graph& g;
	std::vector<Edge> edges;
	std::vector<std::vector<int>> incident; // vertex -> edge indices
	std::uint64_t nodes = 0;
	std::vector<State> witness;

	struct Node {
		std::vector<State> state;
		std::vector<int> deg_in;
		std::vector<int> open;
	};

	bool set(Node& node, int e, State s) {
		node.state[e] = s;
		for (Vertex v : {edges[e].u, edges[e].v}) {
			--node.open[v];
			if (s == State::In)
				++node.deg_in[v];
		}
		return true;
	}

	// Degree, parity and forcing rules to a fixpoint; false on contradiction.
	bool propagate(Node& node) {
		bool changed = true;
		while (changed) {
			changed = false;
			for (Vertex v = 0; v < g.vertex_count(); ++v) {
				const int d = node.deg_in[v], o = node.open[v];
				if (d > 4 || d + o < 2)
					return false;
				if (o == 0) {
					if (d % 2 != 0)
						return false;
					continue;
				}
				std::optional<State> force;
				if (d == 4)
					force = State::Out;
				else if (d + o == 2)
					force = State::In;
				else if (o == 1)
					force = d % 2 != 0 ? State::In : State::Out;
				if (!force)
					continue;
				for (int e : incident[v])
					if (node.state[e] == State::Open)
						set(node, e, *force);
				changed = true;
			}
		}
		return connected(node);
	}

	bool connected(const Node& node) const {
		std::vector<Edge> usable;
		for (std::size_t e = 0; e < edges.size(); ++e)
			if (node.state[e] != State::Out)
				usable.push_back(edges[e]);
		return spans_connected(g.vertex_count(), usable);
	}

	bool search(Node node) {
		++nodes;
		if (!propagate(node))
			return false;
		auto open = std::find(node.state.begin(), node.state.end(), State::Open);
		if (open == node.state.end()) {
			std::vector<Edge> chosen;
			for (std::size_t e = 0; e < edges.size(); ++e)
				if (node.state[e] == State::In)
					chosen.push_back(edges[e]);
			if (!spans_connected(g.vertex_count(), chosen))
				return false;
			witness = node.state;
			return true;
		}
		const int e = static_cast<int>(open - node.state.begin());
		for (State s : {State::In, State::Out}) {
			Node child = node;
			set(child, e, s);
			if (search(std::move(child)))
				return true;
		}
		return false;
	}
};

} // namespace

OracleResult oracle_exists_2trail(const Graph& g, const OracleLimits& limits) {
	if (g.vertex_count() > limits.max_vertices && g.edge_count() > limits.max_edges)
		throw SizeLimitExceeded("oracle_exists_2trail", g.edge_count(), limits.max_edges);
	OracleResult result;
	const int n = g.vertex_count();
	if (n == 0)
		return result;

	Oracle oracle{g, g.edges(), std::vector<std::vector<int>>(n), 0, {}};
	for (std::size_t e = 0; e < oracle.edges.size(); ++e) {
		oracle.incident[oracle.edges[e].u].push_back(static_cast<int>(e));
		oracle.incident[oracle.edges[e].v].push_back(static_cast<int>(e));
	}
	Oracle::Node root{std::vector<State>(oracle.edges.size(), State::Open), std::vector<int>(n, 0),
	                  std::vector<int>(n, 0)};
	for (Vertex v = 0; v < n; ++v)
		root.open[v] = g.degree(v);
	result.exists = oracle.search(std::move(root));
	result.nodes = oracle.nodes;
	if (result.exists) {
		std::vector<Edge> chosen;
		for (std::size_t e = 0; e < oracle.edges.size(); ++e)
			if (oracle.witness[e] == State::In)
				chosen.push_back(oracle.edges[e]);
		result.witness = TwoTrail::from_edges(n, std::move(chosen));
	}
	return result;
}

} // namespace spantrail
