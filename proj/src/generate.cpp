#include "spantrail/generate.hpp"

#include "spantrail/error.hpp"
#include "spantrail/recognition.hpp"

#include <vector>

namespace spantrail {

namespace {

std::vector<Edge> all_pairs(int n) {
	std::vector<Edge> out;
	for (Vertex a = 0; a < n; ++a)
		for (Vertex b = a + 1; b < n; ++b)
			out.emplace_back(a, b);
	return out;
}

} // namespace

void for_each_graph(int n, const std::function<bool(const Graph&)>& visit) {
	if (n > 8)
		throw SizeLimitExceeded("for_each_graph", static_cast<std::size_t>(n), 8);
	const auto pairs = all_pairs(n);
	const std::uint64_t total = std::uint64_t{1} << pairs.size();
	std::vector<Edge> chosen;
	for (std::uint64_t mask = 0; mask < total; ++mask) {
		chosen.clear();
		for (std::size_t i = 0; i < pairs.size(); ++i)
			if (mask >> i & 1)
				chosen.push_back(pairs[i]);
		if (!visit(Graph::from_edges(n, chosen)))
			return;
	}
}

void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& visit) {
	for_each_graph(n, [&](const Graph& g) {
		if (n > 0 && component_count(g) != 1)
			return true;
		return visit(g);
	});
}

double uniform_unit(Rng& rng) {
	return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(Rng& rng, int lo, int hi) {
	const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
	return lo + static_cast<int>(rng() % span);
}

Graph random_graph(int n, double p, Rng& rng) {
	std::vector<Edge> chosen;
	for (const Edge& e : all_pairs(n))
		if (uniform_unit(rng) < p)
			chosen.push_back(e);
	return Graph::from_edges(n, chosen);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
	while (true) {
		Graph g = random_graph(n, p, rng);
		if (n <= 1 || component_count(g) == 1)
			return g;
	}
}

Graph random_2k2_free_graph(int n, double q, Rng& rng) {
	Graph g = random_graph(n, 1.0 - q, rng);
	while (auto w = find_induced_2k2(g)) {
		const Edge cross[] = {{w->a, w->c}, {w->a, w->d}, {w->b, w->c}, {w->b, w->d}};
		g = g.with_edge(cross[uniform_int(rng, 0, 3)]);
	}
	return g;
}

} // namespace spantrail
