// Small graphs that steer the builder into each of its routes. Most were
// found by sampling and frozen here; the last two hand the assembly code a
// cover with a cycle component, which the matching never produces by itself.
#ifndef SPANTRAIL_TESTS_FIXTURES_HPP
#define SPANTRAIL_TESTS_FIXTURES_HPP

#include "spantrail/spantrail.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace fixtures {

using namespace spantrail;

// "0-1 0-2 ..." to a graph on n vertices.
inline Graph parse(int n, const std::string& text) {
	std::vector<Edge> edges;
	std::istringstream in(text);
	std::string token;
	while (in >> token) {
		const auto dash = token.find('-');
		edges.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
	}
	return Graph::from_edges(n, edges);
}

struct RouteFixture {
	const char* name;
	int n;
	const char* edges;
	Route route;
	std::vector<Case2Branch> branches;
	std::vector<std::string> steps;

	Graph graph() const { return parse(n, edges); }
};

inline const std::vector<RouteFixture>& builder_routes() {
	using B = Case2Branch;
	static const std::vector<RouteFixture> all = {
	    {"long path, s1 v1 chord", 10,
	     "0-1 0-6 0-9 1-2 1-6 1-7 1-9 2-3 3-4 3-7 3-8 4-5 5-6 5-7 5-8", Route::Case2, {B::LongPath},
	     {"C + H - s1 u1 + s1 v1"}},
	    {"long path, t1 u1 chord", 11,
	     "0-1 0-6 1-2 1-3 1-8 1-9 2-3 2-7 3-4 3-7 4-5 4-8 4-9 4-10 5-6 5-10 6-7 6-9", Route::Case2,
	     {B::LongPath}, {"C + H - t1 v1 + t1 u1"}},
	    {"long path, u1 v1 on the cycle", 10, "0-1 0-6 1-2 1-9 2-3 2-7 2-8 3-4 4-5 4-7 5-6 5-7 5-8 5-9",
	     Route::Case2, {B::LongPath}, {"C + H - u1 v1"}},
	    {"long path, u1 v1 off the cycle", 11,
	     "0-1 0-7 0-8 0-10 1-2 1-8 1-9 2-3 3-4 4-5 4-8 5-6 6-7 6-9 6-10", Route::Case2, {B::LongPath},
	     {"C + H + u1 v1"}},
	    {"short far path, u1 v1 chord", 10, "0-1 0-7 1-2 1-9 2-3 2-5 2-9 3-4 4-5 4-6 4-7 4-8 5-6 6-7 7-8",
	     Route::Case2, {B::ShortPathFar}, {"C + H + u1 v1"}},
	    {"short far path, u1 v1+ chord", 13,
	     "0-1 0-8 0-9 1-2 2-3 2-5 2-9 2-10 2-12 3-4 3-10 4-5 4-10 4-11 5-6 5-11 6-7 7-8 7-9 8-9 8-12",
	     Route::Case2, {B::ShortPathFar}, {"C + H + u1 v1+ - v1 v1+"}},
	    {"short far path, v1 u1+ chord", 13,
	     "0-1 0-3 0-7 0-9 0-11 1-2 1-10 2-3 3-4 4-5 4-9 4-10 4-11 4-12 5-6 5-7 6-7 6-8 6-12 7-8 7-12 8-9 9-12",
	     Route::Case2, {B::ShortPathFar}, {"C + H + v1 u1+ - u1 u1+"}},
	    {"rerooted short path", 9, "0-1 0-3 0-6 0-8 1-2 2-3 2-7 2-8 3-4 3-7 3-8 4-5 5-6", Route::Case2,
	     {B::Reroot}, {"H1 := u' s1 v'", "C + H + u1 v1"}},
	    {"rerooted short path, v1+ chord", 12,
	     "0-1 0-4 0-7 0-9 0-10 1-2 2-3 2-10 2-11 3-4 3-11 4-5 5-6 6-7 6-10 7-8 8-9 8-10", Route::Case2,
	     {B::Reroot}, {"H1 := u' s1 v'", "C + H + u1 v1+ - v1 v1+"}},
	    {"two paths, closing edge off the cycle", 12,
	     "0-1 0-3 0-4 0-9 0-10 1-2 2-3 3-4 3-11 4-5 4-7 4-10 5-6 6-7 7-8 7-11 8-9", Route::Case1, {},
	     {"C + D + P + vp u1"}},
	    {"two paths, closing edge on the cycle", 12,
	     "0-1 0-7 1-2 1-6 1-7 1-8 1-9 2-3 2-8 2-11 3-4 3-6 3-10 4-5 4-10 5-6 6-7 6-11 7-9", Route::Case1, {},
	     {"C + D + P - vp u1"}},
	};
	return all;
}

// C = 0..9 with exterior 10 (on the short path 0-10-2), and 11, 12 forming
// the D-cycle 11-4-12-7. Vertex 11 also sees 9, which lets branch (iv)
// open D into a second path.
struct HandCover {
	Graph graph;
	OrientedCycle cycle;
	CoverSubgraph cover;
};

inline OrientedCycle ten_cycle(const Graph& g) {
	std::vector<Vertex> seq;
	for (Vertex v = 0; v < 10; ++v)
		seq.push_back(v);
	return OrientedCycle(g, seq);
}

inline std::vector<Edge> ten_cycle_edges() {
	std::vector<Edge> e;
	for (Vertex v = 0; v < 10; ++v)
		e.emplace_back(v, (v + 1) % 10);
	return e;
}

inline HandCover rewire_fixture() {
	std::vector<Edge> e = ten_cycle_edges();
	e.insert(e.end(), {{10, 0}, {10, 2}, {11, 4}, {11, 7}, {11, 9}, {12, 4}, {12, 7}, {0, 4}, {2, 9}});
	Graph g = Graph::from_edges(13, e);
	OrientedCycle c = ten_cycle(g);
	std::vector<Edge> h{{0, 10}, {2, 10}, {4, 11}, {7, 11}, {4, 12}, {7, 12}};
	std::sort(h.begin(), h.end());
	return {g, c, CoverSubgraph{h}};
}

// C = 0..9 plus exterior 10, 11 both adjacent to 4 and 7: H is one 4-cycle.
inline HandCover cycle_only_fixture() {
	std::vector<Edge> e = ten_cycle_edges();
	e.insert(e.end(), {{10, 4}, {10, 7}, {11, 4}, {11, 7}});
	Graph g = Graph::from_edges(12, e);
	OrientedCycle c = ten_cycle(g);
	std::vector<Edge> h{{4, 10}, {4, 11}, {7, 10}, {7, 11}};
	return {g, c, CoverSubgraph{h}};
}

} // namespace fixtures

#endif // SPANTRAIL_TESTS_FIXTURES_HPP
