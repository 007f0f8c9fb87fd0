#include "spantrail/extremal_family.hpp"

#include "spantrail/error.hpp"

#include <algorithm>

namespace spantrail {

ExtremalInstance build_extremal(int n) {
	if (n <= 1)
		throw Error(ErrorCode::NTooSmall, "extremal family needs n >= 2, got " + std::to_string(n));
	ExtremalInstance inst;
	inst.n = n;
	const int k = 4 * n;
	for (int i = 0; i < k; ++i) {
		inst.q1.push_back(i);
		inst.q2.push_back(k + i);
		inst.matching.emplace_back(i, k + i);
	}
	for (int i = 0; i < n - 1; ++i)
		inst.q3.push_back(2 * k + i);

	std::vector<Edge> edges;
	for (std::size_t a = 0; a < inst.q1.size(); ++a)
		for (std::size_t b = a + 1; b < inst.q1.size(); ++b)
			edges.emplace_back(inst.q1[a], inst.q1[b]);
	for (std::size_t a = 0; a < inst.q3.size(); ++a)
		for (std::size_t b = a + 1; b < inst.q3.size(); ++b)
			edges.emplace_back(inst.q3[a], inst.q3[b]);
	for (Vertex z : inst.q3) {
		for (Vertex w : inst.q1)
			edges.emplace_back(z, w);
		for (Vertex w : inst.q2)
			edges.emplace_back(z, w);
	}
	for (auto [a, b] : inst.matching)
		edges.emplace_back(a, b);
	inst.graph = Graph::from_edges(9 * n - 1, edges);
	return inst;
}

Rational extremal_toughness_formula(std::int64_t n) {
	return Rational(5 * n - 2, 4 * n);
}

ToughnessResult structured_toughness(const ExtremalInstance& inst) {
	const std::int64_t n = inst.n;
	// All of Q1 removed: 4n isolated Q2 vertices.
	Rational best(5 * n - 1, 4 * n);
	// R a proper nonempty subset of Q1: r isolated Q2 vertices plus one block.
	// The map r -> (n-1+r)/(r+1) is nonincreasing, so on ties keep the larger r.
	std::int64_t best_r = 4 * n;
	for (std::int64_t r = 1; r <= 4 * n - 1; ++r) {
		Rational value(n - 1 + r, r + 1);
		if (value <= best) {
			best = value;
			best_r = r;
		}
	}
	ToughnessCut cut;
	cut.cutset = inst.q3;
	cut.cutset.insert(cut.cutset.end(), inst.q1.begin(), inst.q1.begin() + best_r);
	std::sort(cut.cutset.begin(), cut.cutset.end());
	cut.component_count = best_r == 4 * n ? static_cast<int>(4 * n) : static_cast<int>(best_r + 1);
	cut.ratio = best;
	return {best, std::move(cut)};
}

NoTrailCertificate no_trail_certificate(const ExtremalInstance& inst) {
	const Graph& g = inst.graph;
	for (Vertex v : inst.q2) {
		int in_q1 = 0;
		for (Vertex w : g.neighbors(v)) {
			if (std::binary_search(inst.q1.begin(), inst.q1.end(), w))
				++in_q1;
			else if (!std::binary_search(inst.q3.begin(), inst.q3.end(), w))
				throw Error(ErrorCode::MalformedInstance,
				            "Q2 vertex " + std::to_string(v) + " has a neighbour outside Q1 and Q3");
		}
		if (in_q1 != 1)
			throw Error(ErrorCode::MalformedInstance,
			            "Q2 vertex " + std::to_string(v) + " does not have exactly one Q1 neighbour");
	}
	NoTrailCertificate cert;
	cert.required = static_cast<std::int64_t>(inst.q2.size());
	cert.budget = 4 * static_cast<std::int64_t>(inst.q3.size());
	cert.q2 = inst.q2;
	cert.q3 = inst.q3;
	return cert;
}

bool check_certificate(const Graph& g, const NoTrailCertificate& cert) {
	VertexSet q2 = cert.q2, q3 = cert.q3;
	std::sort(q2.begin(), q2.end());
	std::sort(q3.begin(), q3.end());
	if (std::adjacent_find(q2.begin(), q2.end()) != q2.end() ||
	    std::adjacent_find(q3.begin(), q3.end()) != q3.end())
		return false;
	for (Vertex v : q2)
		if (!g.contains(v) || std::binary_search(q3.begin(), q3.end(), v))
			return false;
	for (Vertex v : q3)
		if (!g.contains(v))
			return false;
	if (cert.required != static_cast<std::int64_t>(q2.size()) ||
	    cert.budget != 4 * static_cast<std::int64_t>(q3.size()) || cert.required <= cert.budget)
		return false;
	for (Vertex v : q2) {
		int outside = 0;
		for (Vertex w : g.neighbors(v)) {
			if (std::binary_search(q2.begin(), q2.end(), w))
				return false;
			if (!std::binary_search(q3.begin(), q3.end(), w))
				++outside;
		}
		if (outside > 1)
			return false;
	}
	return true;
}

} // namespace spantrail
