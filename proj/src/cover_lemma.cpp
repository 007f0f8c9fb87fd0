#include "spantrail/cover_lemma.hpp"

#include "spantrail/error.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <optional>

namespace spantrail {

BipartiteInstance BipartiteInstance::make(VertexSet X, VertexSet Y,
                                          std::vector<std::pair<Vertex, Vertex>> edges) {
	std::sort(X.begin(), X.end());
	X.erase(std::unique(X.begin(), X.end()), X.end());
	std::sort(Y.begin(), Y.end());
	Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
	for (Vertex x : X)
		if (std::binary_search(Y.begin(), Y.end(), x))
			throw Error(ErrorCode::MalformedInstance, "X and Y overlap at " + std::to_string(x));
	for (auto [x, y] : edges)
		if (!std::binary_search(X.begin(), X.end(), x) || !std::binary_search(Y.begin(), Y.end(), y))
			throw Error(ErrorCode::MalformedInstance,
			            "edge (" + std::to_string(x) + ", " + std::to_string(y) + ") does not cross X x Y");
	std::sort(edges.begin(), edges.end());
	edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
	return BipartiteInstance{std::move(X), std::move(Y), std::move(edges)};
}

VertexSet BipartiteInstance::neighborhood(const VertexSet& S) const {
	VertexSet out;
	for (auto [x, y] : edges)
		if (std::binary_search(S.begin(), S.end(), x))
			out.push_back(y);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

BipartiteInstance BipartiteInstance::without_y(Vertex y) const {
	BipartiteInstance out{X, {}, {}};
	for (Vertex w : Y)
		if (w != y)
			out.Y.push_back(w);
	for (auto e : edges)
		if (e.second != y)
			out.edges.push_back(e);
	return out;
}

std::size_t BipartiteGraph::edge_count() const {
	std::size_t m = 0;
	for (const auto& list : adj)
		m += list.size();
	return m;
}

Expansion expand(const BipartiteInstance& inst) {
	Expansion ex;
	std::map<Vertex, int> x_index, y_index;
	for (std::size_t i = 0; i < inst.X.size(); ++i)
		x_index[inst.X[i]] = static_cast<int>(i);
	for (std::size_t j = 0; j < inst.Y.size(); ++j)
		y_index[inst.Y[j]] = static_cast<int>(j);

	ex.graph.left = static_cast<int>(3 * inst.X.size());
	ex.graph.right = static_cast<int>(2 * inst.Y.size());
	ex.graph.adj.assign(ex.graph.left, {});
	for (Vertex x : inst.X)
		for (int c = 0; c < 3; ++c)
			ex.left_origin.push_back(x);
	for (Vertex y : inst.Y)
		for (int c = 0; c < 2; ++c)
			ex.right_origin.push_back(y);

	for (auto [x, y] : inst.edges) {
		int i = x_index.at(x), j = y_index.at(y);
		for (int a = 0; a < 3; ++a)
			for (int b = 0; b < 2; ++b)
				ex.graph.adj[3 * i + a].push_back(2 * j + b);
	}
	for (auto& list : ex.graph.adj)
		std::sort(list.begin(), list.end());
	return ex;
}

namespace {

struct Kuhn {
	const BipartiteGraph& bip;
	std::vector<int> mate_left, mate_right;
	std::vector<char> seen;

	explicit Kuhn(const BipartiteGraph& b)
	    : bip(b), mate_left(b.left, -1), mate_right(b.right, -1), seen(b.right, 0) {}

	bool augment(int u) {
		for (int r : bip.adj[u]) {
			if (seen[r])
				continue;
			seen[r] = 1;
			if (mate_right[r] < 0 || augment(mate_right[r])) {
				mate_left[u] = r;
				mate_right[r] = u;
				return true;
			}
		}
		return false;
	}
};

} // namespace

MatchingResult max_matching(const BipartiteGraph& bip) {
	Kuhn k(bip);
	MatchingResult out;
	for (int u = 0; u < bip.left; ++u) {
		std::fill(k.seen.begin(), k.seen.end(), 0);
		if (k.augment(u))
			++out.size;
	}
	out.mate_of_left = k.mate_left;

	auto first_free = std::find(k.mate_left.begin(), k.mate_left.end(), -1);
	if (first_free == k.mate_left.end())
		return out;

	// Alternating reachability: left -> any right neighbour -> its mate. Every
	// reached right vertex is matched (else the matching was not maximum), so
	// the reached left set Z has |N(Z)| = |Z| - 1.
	std::vector<char> left_seen(bip.left, 0), right_seen(bip.right, 0);
	std::deque<int> queue{static_cast<int>(first_free - k.mate_left.begin())};
	left_seen[queue.front()] = 1;
	while (!queue.empty()) {
		int u = queue.front();
		queue.pop_front();
		for (int r : bip.adj[u]) {
			if (right_seen[r])
				continue;
			right_seen[r] = 1;
			int w = k.mate_right[r];
			assert(w >= 0);
			if (!left_seen[w]) {
				left_seen[w] = 1;
				queue.push_back(w);
			}
		}
	}
	std::vector<int> deficient;
	for (int u = 0; u < bip.left; ++u)
		if (left_seen[u])
			deficient.push_back(u);
	out.deficient_left = std::move(deficient);
	return out;
}

int CoverSubgraph::degree(Vertex v) const {
	return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const Edge& e) { return e.has(v); }));
}

CoverComponents decompose(const CoverSubgraph& h) {
	std::map<Vertex, std::vector<Vertex>> adj;
	for (const Edge& e : h.edges) {
		adj[e.u].push_back(e.v);
		adj[e.v].push_back(e.u);
	}
	for (auto& [v, list] : adj)
		std::sort(list.begin(), list.end());

	std::map<Vertex, bool> used;
	auto walk = [&](Vertex start, Vertex next) {
		std::vector<Vertex> seq{start};
		used[start] = true;
		Vertex prev = start, cur = next;
		while (cur != start && !used[cur]) {
			seq.push_back(cur);
			used[cur] = true;
			Vertex step = -1;
			for (Vertex w : adj[cur])
				if (w != prev && (!used[w] || (w == start && seq.size() > 2))) {
					step = w;
					break;
				}
			if (step < 0)
				break;
			prev = cur;
			cur = step;
		}
		return seq;
	};

	CoverComponents out;
	for (auto& [v, list] : adj)
		if (list.size() == 1 && !used[v])
			out.paths.push_back({walk(v, list.front())});
	for (auto& [v, list] : adj)
		if (!used[v] && list.size() >= 2)
			out.cycles.push_back({walk(v, list.front())});

	auto by_min = [](const auto& a, const auto& b) {
		return *std::min_element(a.vertices.begin(), a.vertices.end()) <
		       *std::min_element(b.vertices.begin(), b.vertices.end());
	};
	std::sort(out.paths.begin(), out.paths.end(), by_min);
	std::sort(out.cycles.begin(), out.cycles.end(), by_min);
	return out;
}

bool is_valid_cover(const BipartiteInstance& inst, const CoverSubgraph& h) {
	for (const Edge& e : h.edges) {
		bool found = std::binary_search(inst.edges.begin(), inst.edges.end(), std::pair{e.u, e.v}) ||
		             std::binary_search(inst.edges.begin(), inst.edges.end(), std::pair{e.v, e.u});
		if (!found)
			return false;
	}
	std::map<Vertex, int> deg;
	for (const Edge& e : h.edges) {
		++deg[e.u];
		++deg[e.v];
	}
	for (Vertex x : inst.X)
		if (deg[x] != 2)
			return false;
	for (Vertex y : inst.Y)
		if (deg[y] > 2)
			return false;
	return true;
}

bool is_deficient(const BipartiteInstance& inst, const VertexSet& S) {
	// |N(S)| < (3/2)|S|  <=>  2|N(S)| < 3|S|
	return 2 * inst.neighborhood(S).size() < 3 * S.size();
}

namespace {

// Degree-constrained subgraph by unit augmenting paths on source -> x (2),
// x -> y (1), y -> sink (2). Finds H whenever one exists, expansion or not.
std::optional<CoverSubgraph> exact_cover(const BipartiteInstance& inst) {
	const int nx = static_cast<int>(inst.X.size()), ny = static_cast<int>(inst.Y.size());
	const int source = nx + ny, sink = source + 1, nodes = sink + 1;
	auto index_of = [](const VertexSet& side, Vertex v) {
		return static_cast<int>(std::lower_bound(side.begin(), side.end(), v) - side.begin());
	};
	std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
	for (int i = 0; i < nx; ++i)
		cap[source][i] = 2;
	for (int j = 0; j < ny; ++j)
		cap[nx + j][sink] = 2;
	for (auto [x, y] : inst.edges)
		cap[index_of(inst.X, x)][nx + index_of(inst.Y, y)] = 1;

	int flow = 0;
	while (true) {
		std::vector<int> parent(nodes, -1);
		parent[source] = source;
		std::deque<int> queue{source};
		while (!queue.empty() && parent[sink] < 0) {
			const int u = queue.front();
			queue.pop_front();
			for (int w = 0; w < nodes; ++w)
				if (parent[w] < 0 && cap[u][w] > 0) {
					parent[w] = u;
					queue.push_back(w);
				}
		}
		if (parent[sink] < 0)
			break;
		for (int w = sink; w != source; w = parent[w]) {
			--cap[parent[w]][w];
			++cap[w][parent[w]];
		}
		++flow;
	}
	if (flow < 2 * nx)
		return std::nullopt;

	CoverSubgraph h;
	for (auto [x, y] : inst.edges)
		if (cap[index_of(inst.X, x)][nx + index_of(inst.Y, y)] == 0)
			h.edges.emplace_back(x, y);
	std::sort(h.edges.begin(), h.edges.end());
	return h;
}

} // namespace

std::variant<CoverSubgraph, DeficientSet> build_cover(const BipartiteInstance& inst) {
	const Expansion ex = expand(inst);
	const MatchingResult m = max_matching(ex.graph);

	if (m.deficient_left) {
		// Expansion fails, but a cover may still exist without it.
		if (auto h = exact_cover(inst)) {
			assert(is_valid_cover(inst, *h));
			return *h;
		}
		VertexSet S;
		for (int u : *m.deficient_left)
			S.push_back(ex.left_origin[u]);
		S.erase(std::unique(S.begin(), S.end()), S.end());
		DeficientSet d{S, inst.neighborhood(S)};
		assert(is_deficient(inst, d.S));
		return d;
	}

	// Projection collapses parallel copies; each x keeps 2 or 3 distinct
	// neighbours because a y has only two copies.
	std::map<Vertex, VertexSet> chosen;
	for (int u = 0; u < ex.graph.left; ++u)
		chosen[ex.left_origin[u]].push_back(ex.right_origin[m.mate_of_left[u]]);
	CoverSubgraph h;
	for (auto& [x, ys] : chosen) {
		std::sort(ys.begin(), ys.end());
		ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
		assert(ys.size() == 2 || ys.size() == 3);
		if (ys.size() == 3)
			ys.pop_back();
		for (Vertex y : ys)
			h.edges.emplace_back(x, y);
	}
	std::sort(h.edges.begin(), h.edges.end());
	assert(is_valid_cover(inst, h));
	return h;
}

BipartiteInstance tightness_family(int k) {
	if (k < 1)
		throw Error(ErrorCode::NonPositiveK, "tightness family needs k >= 1, got " + std::to_string(k));
	VertexSet X, Y;
	std::vector<std::pair<Vertex, Vertex>> edges;
	for (int i = 0; i < 2 * k; ++i)
		X.push_back(i);
	for (int i = 0; i < 3 * k; ++i)
		Y.push_back(2 * k + i);
	for (int i = 0; i < 2 * k; ++i) {
		edges.emplace_back(i, 2 * k + i);
		for (int c = 0; c < k; ++c)
			edges.emplace_back(i, 4 * k + c);
	}
	return BipartiteInstance::make(std::move(X), std::move(Y), std::move(edges));
}

} // namespace spantrail
