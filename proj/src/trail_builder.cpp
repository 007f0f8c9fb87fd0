#include "spantrail/trail_builder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spantrail {

std::string_view to_string(FailureStep step) {
	switch (step) {
	case FailureStep::NotEnoughVertices: return "NotEnoughVertices";
	case FailureStep::NoCycle: return "NoCycle";
	case FailureStep::LemmaViolation: return "LemmaViolation";
	case FailureStep::ClaimA_a: return "ClaimA_a";
	case FailureStep::ClaimA_b: return "ClaimA_b";
	case FailureStep::ClaimA_c: return "ClaimA_c";
	case FailureStep::CoverDeficient: return "CoverDeficient";
	case FailureStep::ClaimB_b: return "ClaimB_b";
	case FailureStep::ClaimC_NoDistantPair: return "ClaimC_NoDistantPair";
	case FailureStep::Case2_NoChord: return "Case2_NoChord";
	case FailureStep::Case2_ToughnessStructure: return "Case2_ToughnessStructure";
	}
	return "Unknown";
}

std::string_view to_string(Route route) {
	switch (route) {
	case Route::SpanningCycle: return "spanning-cycle";
	case Route::CycleWithD: return "cycle-plus-cycles";
	case Route::Case1: return "case1";
	case Route::Case2: return "case2";
	}
	return "unknown";
}

std::string_view to_string(Case2Branch branch) {
	switch (branch) {
	case Case2Branch::LongPath: return "i";
	case Case2Branch::ShortPathFar: return "ii";
	case Case2Branch::Reroot: return "iii";
	case Case2Branch::RewireD: return "iv";
	}
	return "?";
}

TwoTrail TwoTrail::from_edges(int n, std::vector<Edge> edges) {
	std::sort(edges.begin(), edges.end());
	TwoTrail t;
	t.degrees.assign(n, 0);
	for (const Edge& e : edges) {
		++t.degrees[e.u];
		++t.degrees[e.v];
	}
	t.edges = std::move(edges);
	return t;
}

bool witness_holds(const Graph& g, const BuildFailure& failure, int cycle_length) {
	if (failure.cut) {
		for (Vertex v : failure.cut->cutset)
			if (!g.contains(v))
				return false;
		ToughnessCut replay = make_cut(g, failure.cut->cutset);
		if (replay.component_count >= 2 && replay.ratio < Rational(3, 2))
			return true;
	}
	if (failure.induced_2k2 && is_valid_2k2(g, *failure.induced_2k2))
		return true;
	if (failure.longer_cycle) {
		try {
			OrientedCycle longer(g, *failure.longer_cycle);
			if (longer.length() > cycle_length)
				return true;
		} catch (const Error&) {
		}
	}
	return false;
}

namespace {

class EdgeSet {
public:
	void add(Edge e) {
		if (!set_.insert(e).second)
			throw std::logic_error("edge added twice");
	}
	void remove(Edge e) {
		if (set_.erase(e) != 1)
			throw std::logic_error("removing an absent edge");
	}
	void add_all(const std::vector<Edge>& edges) {
		for (const Edge& e : edges)
			add(e);
	}
	std::vector<Edge> to_vector() const { return {set_.begin(), set_.end()}; }

private:
	std::set<Edge> set_;
};

BuildFailure make_failure(FailureStep step, std::string detail) {
	BuildFailure f{step, std::move(detail), {}, {}, std::nullopt, std::nullopt, std::nullopt};
	return f;
}

std::variant<TwoTrail, BuildFailure> finish(const Graph& g, const EdgeSet& t) {
	auto edges = t.to_vector();
	if (!verify_2trail(g, edges).accepted())
		throw std::logic_error("assembled subgraph is not a spanning 2-trail");
	return TwoTrail::from_edges(g.vertex_count(), std::move(edges));
}

VertexSet h_vertices(const std::vector<Edge>& h) {
	VertexSet out;
	for (const Edge& e : h) {
		out.push_back(e.u);
		out.push_back(e.v);
	}
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

bool in(const VertexSet& s, Vertex v) {
	return std::binary_search(s.begin(), s.end(), v);
}

// Cycle of length |C| + 1 through x when x sees both y and y+.
std::vector<Vertex> insert_into_cycle(const OrientedCycle& c, Vertex x, Vertex y) {
	std::vector<Vertex> seq;
	const auto& cv = c.vertices();
	const int m = c.length();
	const int i = c.position(y);
	for (int k = 0; k < m; ++k) {
		seq.push_back(cv[(i + 1 + k) % m]);
		if (k == m - 1)
			seq.push_back(x);
	}
	return seq;
}

// u x v, back along C from v to u+, across u+ v+, forward from v+ to u.
std::vector<Vertex> successor_chord_cycle(const OrientedCycle& c, Vertex x, Vertex u, Vertex v) {
	const auto& cv = c.vertices();
	const int m = c.length();
	const int i = c.position(u), j = c.position(v);
	std::vector<Vertex> seq{u, x};
	for (int k = j; k != i; k = (k - 1 + m) % m)
		seq.push_back(cv[k]);
	for (int k = (j + 1) % m; k != i; k = (k + 1) % m)
		seq.push_back(cv[k]);
	return seq;
}

VertexSet exterior_neighbourhood(const Graph& g, const OrientedCycle& c) {
	VertexSet out;
	for (Vertex x = 0; x < g.vertex_count(); ++x)
		if (!c.contains(x))
			for (Vertex y : g.neighbors(x))
				out.push_back(y);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

std::variant<TwoTrail, BuildFailure> short_path_far(const Graph& g, const OrientedCycle& c,
                                                    const std::vector<Edge>& h, Vertex u, Vertex s, Vertex v,
                                                    BuildTrace* trace) {
	const Vertex up = c.successor(u), vp = c.successor(v);
	if (g.adjacent(up, vp)) {
		auto f = make_failure(FailureStep::ClaimA_b, "successors of two neighbours of an exterior vertex are adjacent");
		f.vertices = {u, v, up, vp, s};
		std::sort(f.vertices.begin(), f.vertices.end());
		f.edges = {Edge(up, vp)};
		f.longer_cycle = successor_chord_cycle(c, s, u, v);
		return f;
	}
	EdgeSet t;
	t.add_all(c.edges());
	t.add_all(h);
	std::string step;
	if (g.adjacent(u, vp)) {
		t.add(Edge(u, vp));
		t.remove(Edge(v, vp));
		step = "C + H + u1 v1+ - v1 v1+";
	} else if (g.adjacent(v, up)) {
		t.add(Edge(v, up));
		t.remove(Edge(u, up));
		step = "C + H + v1 u1+ - u1 u1+";
	} else if (g.adjacent(u, v)) {
		t.add(Edge(u, v));
		step = "C + H + u1 v1";
	} else {
		auto f = make_failure(FailureStep::Case2_NoChord, "no chord among u1 v1, u1 v1+, v1 u1+");
		f.induced_2k2 = TwoK2Witness{u, up, v, vp};
		f.vertices = {u, up, v, vp};
		std::sort(f.vertices.begin(), f.vertices.end());
		return f;
	}
	if (trace)
		trace->steps.push_back(step);
	return finish(g, t);
}

} // namespace

BipartiteInstance exterior_bipartite(const Graph& g, const OrientedCycle& c) {
	VertexSet X, Y = c.vertex_set();
	std::vector<std::pair<Vertex, Vertex>> edges;
	for (Vertex x = 0; x < g.vertex_count(); ++x) {
		if (c.contains(x))
			continue;
		X.push_back(x);
		for (Vertex y : g.neighbors(x)) {
			if (!c.contains(y))
				throw Error(ErrorCode::NotDominating, "exterior edge " + std::to_string(x) + "-" + std::to_string(y));
			edges.emplace_back(x, y);
		}
	}
	return BipartiteInstance::make(std::move(X), std::move(Y), std::move(edges));
}

CoverDecomposition minimize_components(const Graph& g, const OrientedCycle&, const CoverSubgraph& h) {
	CoverDecomposition out;
	CoverSubgraph cur = h;
	while (true) {
		CoverComponents comps = decompose(cur);
		std::vector<CoverPath> paths;
		for (auto& p : comps.paths)
			paths.push_back({std::move(p.vertices)});

		std::optional<std::pair<Edge, Edge>> swap; // (remove, add)
		for (std::size_t i = 0; i < paths.size() && !swap; ++i) {
			const CoverPath& pi = paths[i];
			const std::pair<Vertex, Vertex> own[] = {{pi.s(), pi.u()}, {pi.t(), pi.v()}};
			for (auto [inner, end] : own) {
				for (std::size_t j = 0; j < paths.size() && !swap; ++j) {
					if (j == i)
						continue;
					for (Vertex target : {paths[j].u(), paths[j].v()})
						if (g.adjacent(inner, target)) {
							swap = {Edge(inner, end), Edge(inner, target)};
							break;
						}
				}
				if (swap)
					break;
			}
		}
		if (!swap) {
			out.h_edges = cur.edges;
			out.paths = std::move(paths);
			out.cycles = std::move(comps.cycles);
			return out;
		}
		std::erase(cur.edges, swap->first);
		cur.edges.push_back(swap->second);
		std::sort(cur.edges.begin(), cur.edges.end());
		++out.swaps;
	}
}

std::variant<MergedPath, BuildFailure> merge_paths(const Graph& g, const OrientedCycle& c,
                                                   const CoverDecomposition& decomp) {
	if (decomp.paths.empty())
		throw Error(ErrorCode::InvalidArgument, "merge_paths needs at least one path component");
	const auto& first = decomp.paths.front().vertices;
	MergedPath out;
	out.vertices = first;
	for (std::size_t k = 0; k + 1 < first.size(); ++k)
		out.edges.emplace_back(first[k], first[k + 1]);
	if (decomp.paths.size() == 1)
		return out;
	if (c.length() < 7) {
		auto f = make_failure(FailureStep::ClaimA_c, "cycle too short to merge path components");
		f.vertices = c.vertex_set();
		return f;
	}

	for (std::size_t q = 1; q < decomp.paths.size(); ++q) {
		const CoverPath& hq = decomp.paths[q];
		const Vertex front = out.vertices.front(), back = out.vertices.back();
		struct Pairing {
			bool at_front;
			bool hq_from_u;
		};
		// (front, u_q), (front, v_q), (back, u_q), (back, v_q)
		const Pairing order[] = {{true, true}, {true, false}, {false, true}, {false, false}};
		std::optional<Pairing> chosen;
		for (const Pairing& p : order) {
			Vertex a = p.at_front ? front : back;
			Vertex b = p.hq_from_u ? hq.u() : hq.v();
			if (cyclic_distance(c, a, b) >= 2) {
				chosen = p;
				break;
			}
		}
		if (!chosen) {
			auto f = make_failure(FailureStep::ClaimC_NoDistantPair, "all endpoint pairs are within cyclic distance 1");
			f.vertices = {front, back, hq.u(), hq.v()};
			std::sort(f.vertices.begin(), f.vertices.end());
			return f;
		}
		const Vertex a = chosen->at_front ? front : back;
		const Vertex b = chosen->hq_from_u ? hq.u() : hq.v();
		if (!g.adjacent(a, b)) {
			const Vertex a_in = chosen->at_front ? out.vertices[1] : out.vertices[out.vertices.size() - 2];
			const Vertex b_in = chosen->hq_from_u ? hq.s() : hq.t();
			auto f = make_failure(FailureStep::ClaimB_b, "ends of different path components are not adjacent");
			f.induced_2k2 = TwoK2Witness{a_in, a, b_in, b};
			f.vertices = {a_in, a, b_in, b};
			std::sort(f.vertices.begin(), f.vertices.end());
			f.edges = {Edge(a, b)};
			return f;
		}

		std::vector<Vertex> piece = hq.vertices; // oriented so that b is adjacent to a
		if (chosen->at_front) {
			if (chosen->hq_from_u)
				std::reverse(piece.begin(), piece.end()); // v_q ... u_q, then front
			piece.insert(piece.end(), out.vertices.begin(), out.vertices.end());
			out.vertices = std::move(piece);
		} else {
			if (!chosen->hq_from_u)
				std::reverse(piece.begin(), piece.end()); // back, then v_q ... u_q
			out.vertices.insert(out.vertices.end(), piece.begin(), piece.end());
		}
		for (std::size_t k = 0; k + 1 < hq.vertices.size(); ++k)
			out.edges.emplace_back(hq.vertices[k], hq.vertices[k + 1]);
		out.edges.emplace_back(a, b);
		out.connectors.emplace_back(a, b);
	}
	std::sort(out.edges.begin(), out.edges.end());
	return out;
}

std::variant<TwoTrail, BuildFailure> assemble_case1(const Graph& g, const OrientedCycle& c,
                                                    const CoverDecomposition& decomp, const MergedPath& path,
                                                    BuildTrace* trace) {
	const Vertex first = path.vertices.front(), last = path.vertices.back();
	if (!g.adjacent(first, last)) {
		auto f = make_failure(FailureStep::ClaimB_b, "the merged path's ends are not adjacent");
		f.induced_2k2 = TwoK2Witness{path.vertices[1], first, path.vertices[path.vertices.size() - 2], last};
		f.vertices = {first, last, path.vertices[1], path.vertices[path.vertices.size() - 2]};
		std::sort(f.vertices.begin(), f.vertices.end());
		f.edges = {Edge(first, last)};
		return f;
	}
	EdgeSet t;
	t.add_all(c.edges());
	for (const auto& cyc : decomp.cycles)
		for (std::size_t k = 0; k < cyc.vertices.size(); ++k)
			t.add(Edge(cyc.vertices[k], cyc.vertices[(k + 1) % cyc.vertices.size()]));
	t.add_all(path.edges);
	if (c.has_edge(first, last)) {
		t.remove(Edge(first, last));
		if (trace)
			trace->steps.push_back("C + D + P - vp u1");
	} else {
		t.add(Edge(first, last));
		if (trace)
			trace->steps.push_back("C + D + P + vp u1");
	}
	return finish(g, t);
}

std::variant<TwoTrail, BuildFailure> assemble_case2(const Graph& g, const OrientedCycle& c,
                                                    const CoverDecomposition& decomp, BuildTrace* trace) {
	if (decomp.paths.size() != 1)
		throw Error(ErrorCode::InvalidArgument, "assemble_case2 needs exactly one path component");
	const CoverPath& h1 = decomp.paths.front();
	const Vertex u = h1.u(), v = h1.v(), s = h1.s(), t = h1.t();
	auto note = [&](Case2Branch b) {
		if (trace)
			trace->case2_branches.push_back(b);
	};

	if (h1.vertices.size() >= 4) {
		note(Case2Branch::LongPath);
		EdgeSet out;
		out.add_all(c.edges());
		out.add_all(decomp.h_edges);
		std::string step;
		if (g.adjacent(s, v)) {
			out.remove(Edge(s, u));
			out.add(Edge(s, v));
			step = "C + H - s1 u1 + s1 v1";
		} else if (g.adjacent(t, u)) {
			out.remove(Edge(t, v));
			out.add(Edge(t, u));
			step = "C + H - t1 v1 + t1 u1";
		} else if (c.has_edge(u, v)) {
			out.remove(Edge(u, v));
			step = "C + H - u1 v1";
		} else if (g.adjacent(u, v)) {
			out.add(Edge(u, v));
			step = "C + H + u1 v1";
		} else {
			auto f = make_failure(FailureStep::Case2_NoChord, "none of s1 v1, t1 u1, u1 v1 is an edge");
			f.induced_2k2 = TwoK2Witness{s, u, t, v};
			f.vertices = {s, u, t, v};
			std::sort(f.vertices.begin(), f.vertices.end());
			return f;
		}
		if (trace)
			trace->steps.push_back(step);
		return finish(g, out);
	}

	if (cyclic_distance(c, u, v) >= 3) {
		note(Case2Branch::ShortPathFar);
		return short_path_far(g, c, decomp.h_edges, u, s, v, trace);
	}

	const VertexSet on_h = h_vertices(decomp.h_edges);
	bool s_sees_outside = std::any_of(g.neighbors(s).begin(), g.neighbors(s).end(),
	                                  [&](Vertex w) { return !in(on_h, w); });
	if (s_sees_outside) {
		note(Case2Branch::Reroot);
		VertexSet on_d;
		for (const auto& cyc : decomp.cycles)
			on_d.insert(on_d.end(), cyc.vertices.begin(), cyc.vertices.end());
		std::sort(on_d.begin(), on_d.end());
		VertexSet candidates;
		for (Vertex w : g.neighbors(s))
			if (!in(on_d, w))
				candidates.push_back(w);
		for (std::size_t i = 0; i < candidates.size(); ++i)
			for (std::size_t j = i + 1; j < candidates.size(); ++j) {
				const Vertex a = candidates[i], b = candidates[j];
				if (cyclic_distance(c, a, b) < 3)
					continue;
				std::vector<Edge> h = decomp.h_edges;
				std::erase(h, Edge(s, u));
				std::erase(h, Edge(s, v));
				h.emplace_back(s, a);
				h.emplace_back(s, b);
				std::sort(h.begin(), h.end());
				if (trace)
					trace->steps.push_back("H1 := u' s1 v'");
				return short_path_far(g, c, h, a, s, b, trace);
			}
		auto f = make_failure(FailureStep::ClaimA_a, "no two neighbours of s1 off D at cyclic distance >= 3");
		f.vertices = candidates;
		return f;
	}

	note(Case2Branch::RewireD);
	// X-vertices of D in increasing order, each with its D-neighbours.
	std::vector<std::pair<Vertex, std::pair<Vertex, Vertex>>> d_exterior;
	for (const auto& cyc : decomp.cycles) {
		const auto& cv = cyc.vertices;
		for (std::size_t k = 0; k < cv.size(); ++k)
			if (!c.contains(cv[k])) {
				Vertex a = cv[(k + cv.size() - 1) % cv.size()], b = cv[(k + 1) % cv.size()];
				d_exterior.push_back({cv[k], {std::min(a, b), std::max(a, b)}});
			}
	}
	std::sort(d_exterior.begin(), d_exterior.end());
	for (const auto& [x, nbrs] : d_exterior) {
		for (Vertex w : g.neighbors(x)) {
			if (in(on_h, w))
				continue;
			std::vector<Edge> h = decomp.h_edges;
			std::erase(h, Edge(x, nbrs.first));
			h.emplace_back(x, w);
			std::sort(h.begin(), h.end());
			if (trace)
				trace->steps.push_back("D := D - x'v' + x'u'");
			CoverDecomposition next = minimize_components(g, c, CoverSubgraph{h});
			if (trace)
				trace->swaps += next.swaps;
			if (next.paths.size() == 1)
				return assemble_case2(g, c, next, trace);
			auto merged = merge_paths(g, c, next);
			if (auto* fail = std::get_if<BuildFailure>(&merged))
				return *fail;
			return assemble_case1(g, c, next, std::get<MergedPath>(merged), trace);
		}
	}

	auto f = make_failure(FailureStep::Case2_ToughnessStructure,
	                      "every exterior vertex has all its neighbours in H");
	f.cut = make_cut(g, exterior_neighbourhood(g, c));
	f.vertices = f.cut->cutset;
	return f;
}

BuildResult find_spanning_2trail(const Graph& g, const BuildOptions& options) {
	BuildResult result{make_failure(FailureStep::NotEnoughVertices, ""), {}};
	BuildTrace& trace = result.trace;
	const int n = g.vertex_count();
	if (n < 3) {
		result.outcome = make_failure(FailureStep::NotEnoughVertices, "fewer than three vertices");
		return result;
	}

	std::optional<OrientedCycle> found;
	try {
		found = find_dominating_longest_cycle(g, options.cycle_limit);
	} catch (const LemmaViolation& e) {
		auto f = make_failure(FailureStep::LemmaViolation, e.what());
		f.induced_2k2 = find_induced_2k2(g);
		result.outcome = std::move(f);
		return result;
	} catch (const Error& e) {
		if (e.code() != ErrorCode::NoCycle)
			throw;
		auto f = make_failure(FailureStep::NoCycle, "graph is a forest");
		// A forest on >= 3 vertices: either disconnected or a tree with an inner vertex.
		if (component_count(g) >= 2) {
			f.cut = make_cut(g, {});
		} else {
			for (Vertex v = 0; v < n; ++v)
				if (g.degree(v) >= 2) {
					f.cut = make_cut(g, {v});
					break;
				}
		}
		result.outcome = std::move(f);
		return result;
	}
	const OrientedCycle& c = *found;
	trace.cycle = c;

	if (c.length() == n) {
		trace.route = Route::SpanningCycle;
		trace.steps.push_back("C");
		result.outcome = TwoTrail::from_edges(n, c.edges());
		return result;
	}

	if (c.length() < 7) {
		auto f = make_failure(FailureStep::ClaimA_c, "non-spanning longest cycle has fewer than 7 vertices");
		for (Vertex x = 0; x < n && !f.cut; ++x) {
			if (c.contains(x))
				continue;
			ToughnessCut cut = make_cut(g, g.neighbors(x));
			if (cut.component_count >= 2 && cut.ratio < Rational(3, 2))
				f.cut = std::move(cut);
		}
		f.vertices = c.vertex_set();
		result.outcome = std::move(f);
		return result;
	}

	for (Vertex x = 0; x < n; ++x) {
		if (c.contains(x))
			continue;
		for (Vertex y : g.neighbors(x))
			if (g.adjacent(x, c.successor(y))) {
				auto f = make_failure(FailureStep::ClaimA_a, "exterior vertex adjacent to consecutive cycle vertices");
				f.vertices = {x, y, c.successor(y)};
				f.longer_cycle = insert_into_cycle(c, x, y);
				result.outcome = std::move(f);
				return result;
			}
	}

	const BipartiteInstance inst = exterior_bipartite(g, c);
	auto cover = build_cover(inst);
	if (auto* deficient = std::get_if<DeficientSet>(&cover)) {
		auto f = make_failure(FailureStep::CoverDeficient, "exterior vertices with |N(S)| < 3|S|/2");
		f.vertices = deficient->S;
		f.cut = make_cut(g, deficient->neighborhood);
		result.outcome = std::move(f);
		return result;
	}

	const CoverDecomposition decomp = minimize_components(g, c, std::get<CoverSubgraph>(cover));
	result.outcome = assemble_from_cover(g, c, decomp, &trace);
	return result;
}

std::variant<TwoTrail, BuildFailure> assemble_from_cover(const Graph& g, const OrientedCycle& c,
                                                         const CoverDecomposition& decomp, BuildTrace* trace) {
	BuildTrace scratch;
	BuildTrace& tr = trace ? *trace : scratch;
	tr.swaps += decomp.swaps;
	tr.path_components = static_cast<int>(decomp.paths.size());

	if (decomp.paths.empty()) {
		tr.route = Route::CycleWithD;
		tr.steps.push_back("C + D");
		EdgeSet t;
		t.add_all(c.edges());
		t.add_all(decomp.h_edges);
		return finish(g, t);
	}
	if (decomp.paths.size() >= 2) {
		tr.route = Route::Case1;
		auto merged = merge_paths(g, c, decomp);
		if (auto* fail = std::get_if<BuildFailure>(&merged))
			return *fail;
		return assemble_case1(g, c, decomp, std::get<MergedPath>(merged), &tr);
	}
	tr.route = Route::Case2;
	return assemble_case2(g, c, decomp, &tr);
}

} // namespace spantrail
