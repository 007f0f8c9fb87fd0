#include "spantrail/cycle_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace spantrail {

OrientedCycle::OrientedCycle(const Graph& g, std::vector<Vertex> sequence) : seq_(std::move(sequence)) {
	const int m = static_cast<int>(seq_.size());
	if (m < 3)
		throw Error(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
	pos_.assign(g.vertex_count(), -1);
	for (int i = 0; i < m; ++i) {
		Vertex v = seq_[i];
		if (!g.contains(v))
			throw Error(ErrorCode::OutOfRangeLabel, "cycle vertex " + std::to_string(v) + " not in graph");
		if (pos_[v] >= 0)
			throw Error(ErrorCode::InvalidArgument, "cycle repeats vertex " + std::to_string(v));
		pos_[v] = i;
	}
	for (int i = 0; i < m; ++i)
		if (!g.adjacent(seq_[i], seq_[(i + 1) % m]))
			throw Error(ErrorCode::InvalidArgument, "cycle uses a non-edge " + std::to_string(seq_[i]) + "-" +
			                                            std::to_string(seq_[(i + 1) % m]));
}

int OrientedCycle::position(Vertex x) const {
	if (!contains(x))
		throw Error(ErrorCode::VertexNotOnCycle, "vertex " + std::to_string(x) + " is not on the cycle");
	return pos_[x];
}

Vertex OrientedCycle::successor(Vertex x) const {
	return seq_[(position(x) + 1) % seq_.size()];
}

Vertex OrientedCycle::predecessor(Vertex x) const {
	return seq_[(position(x) + seq_.size() - 1) % seq_.size()];
}

bool OrientedCycle::has_edge(Vertex u, Vertex v) const {
	if (!contains(u) || !contains(v))
		return false;
	return successor(u) == v || successor(v) == u;
}

std::vector<Edge> OrientedCycle::edges() const {
	std::vector<Edge> out;
	for (std::size_t i = 0; i < seq_.size(); ++i)
		out.emplace_back(seq_[i], seq_[(i + 1) % seq_.size()]);
	std::sort(out.begin(), out.end());
	return out;
}

VertexSet OrientedCycle::vertex_set() const {
	VertexSet out = seq_;
	std::sort(out.begin(), out.end());
	return out;
}

int cyclic_distance(const OrientedCycle& c, Vertex u, Vertex v) {
	const int m = c.length();
	int forward = ((c.position(v) - c.position(u)) % m + m) % m;
	return std::min(forward, m - forward);
}

namespace {

void check_limit(const Graph& g, int limit, const char* op) {
	const int hard = 64;
	if (g.vertex_count() > std::min(limit, hard))
		throw SizeLimitExceeded(op, static_cast<std::size_t>(g.vertex_count()),
		                        static_cast<std::size_t>(std::min(limit, hard)));
}

std::uint64_t low_mask(int n) {
	return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Vertices reachable from `from` through `open`, excluding `from` itself.
std::uint64_t reach(const Graph& g, Vertex from, std::uint64_t open) {
	std::uint64_t seen = 0;
	std::uint64_t frontier = g.neighbor_mask(from) & open;
	while (frontier != 0) {
		seen |= frontier;
		std::uint64_t next = 0;
		for (std::uint64_t f = frontier; f != 0; f &= f - 1)
			next |= g.neighbor_mask(std::countr_zero(f));
		frontier = next & open & ~seen;
	}
	return seen;
}

struct LongestSearch {
	const Graph& g;
	int best = 0;
	int ceiling = 0; // no cycle through the current start can exceed this
	Vertex start = 0;
	std::uint64_t open = 0;

	// Returns true once the ceiling is reached and the search can stop.
	bool dfs(Vertex cur, int len) {
		if (len >= 3 && g.adjacent(cur, start) && len > best) {
			best = len;
			if (best == ceiling)
				return true;
		}
		std::uint64_t r = reach(g, cur, open);
		if ((r & g.neighbor_mask(start)) == 0 || len + std::popcount(r) <= best)
			return false;
		for (std::uint64_t cand = g.neighbor_mask(cur) & open; cand != 0; cand &= cand - 1) {
			Vertex w = std::countr_zero(cand);
			open &= ~(std::uint64_t{1} << w);
			bool done = dfs(w, len + 1);
			open |= std::uint64_t{1} << w;
			if (done)
				return true;
		}
		return false;
	}
};

struct LengthEnumerator {
	const Graph& g;
	int target = 0;
	Vertex start = 0;
	std::uint64_t open = 0;
	std::vector<Vertex> path;
	const std::function<bool(const std::vector<Vertex>&)>& visit;

	// Returns false once the visitor asks to stop.
	bool dfs(Vertex cur) {
		const int len = static_cast<int>(path.size());
		if (len == target) {
			if (g.adjacent(cur, start) && path[1] < cur)
				return visit(path);
			return true;
		}
		std::uint64_t r = reach(g, cur, open);
		if ((r & g.neighbor_mask(start)) == 0 || len + std::popcount(r) < target)
			return true;
		for (std::uint64_t cand = g.neighbor_mask(cur) & open; cand != 0; cand &= cand - 1) {
			Vertex w = std::countr_zero(cand);
			open &= ~(std::uint64_t{1} << w);
			path.push_back(w);
			bool go_on = dfs(w);
			path.pop_back();
			open |= std::uint64_t{1} << w;
			if (!go_on)
				return false;
		}
		return true;
	}
};

} // namespace

int longest_cycle_length(const Graph& g, int limit) {
	check_limit(g, limit, "longest_cycle_length");
	const int n = g.vertex_count();
	LongestSearch search{g};
	for (Vertex s = 0; s < n; ++s) {
		if (n - s <= search.best)
			break;
		search.start = s;
		search.ceiling = n - s;
		search.open = low_mask(n) & ~low_mask(s + 1);
		search.dfs(s, 1);
	}
	return search.best;
}

void for_each_cycle_of_length(const Graph& g, int length,
                              const std::function<bool(const std::vector<Vertex>&)>& visit, int limit) {
	check_limit(g, limit, "for_each_cycle_of_length");
	const int n = g.vertex_count();
	if (length < 3)
		return;
	for (Vertex s = 0; s + length <= n; ++s) {
		LengthEnumerator e{g, length, s, low_mask(n) & ~low_mask(s + 1), {s}, visit};
		if (!e.dfs(s))
			return;
	}
}

std::optional<OrientedCycle> find_longest_cycle(const Graph& g, int limit) {
	const int best = longest_cycle_length(g, limit);
	if (best == 0)
		return std::nullopt;
	std::optional<OrientedCycle> out;
	for_each_cycle_of_length(
	    g, best,
	    [&](const std::vector<Vertex>& seq) {
		    out.emplace(g, seq);
		    return false;
	    },
	    limit);
	return out;
}

bool is_dominating(const Graph& g, const OrientedCycle& c) {
	for (const Edge& e : g.edges())
		if (!c.contains(e.u) && !c.contains(e.v))
			return false;
	return true;
}

LemmaViolation::LemmaViolation(Graph g, std::vector<OrientedCycle> cycles)
    : Error(ErrorCode::LemmaViolation,
            "none of the " + std::to_string(cycles.size()) + " longest cycles is dominating"),
      graph_(std::move(g)), cycles_(std::move(cycles)) {}

OrientedCycle find_dominating_longest_cycle(const Graph& g, int limit) {
	const int best = longest_cycle_length(g, limit);
	if (best == 0)
		throw Error(ErrorCode::NoCycle, "graph is acyclic");
	std::optional<OrientedCycle> found;
	std::vector<OrientedCycle> examined;
	for_each_cycle_of_length(
	    g, best,
	    [&](const std::vector<Vertex>& seq) {
		    OrientedCycle c(g, seq);
		    if (is_dominating(g, c)) {
			    found = std::move(c);
			    return false;
		    }
		    examined.push_back(std::move(c));
		    return true;
	    },
	    limit);
	if (!found)
		throw LemmaViolation(g, std::move(examined));
	return *found;
}

} // namespace spantrail
