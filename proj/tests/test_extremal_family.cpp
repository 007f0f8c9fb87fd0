#include "oracles.hpp"

#include "spantrail/spantrail.hpp"

#include <doctest.h>

using namespace spantrail;

namespace {

// min over S = Q3 + R of |S| / c(G - S), recomputed from the block sizes:
// with r = |R| < 4n the survivors are 4n - r matched pairs merged through
// the remaining clique vertices plus r isolated Q2 vertices.
Rational structured_by_hand(std::int64_t n) {
	Rational best = Rational(5 * n - 1, 4 * n);
	for (std::int64_t r = 1; r < 4 * n; ++r)
		best = std::min(best, Rational(n - 1 + r, r + 1));
	return best;
}

} // namespace

TEST_CASE("sizes and labels") {
	auto g2 = build_extremal(2);
	CHECK(g2.graph.vertex_count() == 17);
	CHECK(g2.graph.edge_count() == 52);
	CHECK(g2.q1.size() == 8);
	CHECK(g2.q2.size() == 8);
	CHECK(g2.q3 == VertexSet{16});
	CHECK(g2.matching.front() == std::pair<Vertex, Vertex>{0, 8});

	auto g3 = build_extremal(3);
	CHECK(g3.graph.vertex_count() == 26);
	CHECK(g3.graph.edge_count() == 127);

	for (int n = 2; n <= 12; ++n) {
		auto inst = build_extremal(n);
		const std::int64_t q1 = 4 * n, q3 = n - 1;
		const std::int64_t edges = q1 * (q1 - 1) / 2 + q1 + q3 * (q3 - 1) / 2 + q3 * 8 * n;
		CHECK(inst.graph.edge_count() == edges);
	}
}

TEST_CASE("small parameters are rejected") {
	for (int n : {1, 0, -4}) {
		try {
			build_extremal(n);
			FAIL("expected NTooSmall");
		} catch (const Error& e) {
			CHECK(e.code() == ErrorCode::NTooSmall);
		}
	}
}

TEST_CASE("the family is 2K2-free") {
	for (int n = 2; n <= 4; ++n) {
		auto g = build_extremal(n).graph;
		CHECK_FALSE(find_induced_2k2(g));
		CHECK_FALSE(oracle::has_induced_2k2(g));
	}
}

TEST_CASE("structured toughness") {
	auto t2 = structured_toughness(build_extremal(2));
	CHECK(t2.toughness == Rational(1));
	REQUIRE(t2.cut);
	CHECK(t2.cut->cutset.size() == 8);
	CHECK(t2.cut->component_count == 8);

	CHECK(structured_toughness(build_extremal(3)).toughness == Rational(13, 12));

	for (int n = 2; n <= 50; ++n) {
		CAPTURE(n);
		auto inst = build_extremal(n);
		auto t = structured_toughness(inst);
		CHECK(t.toughness == Rational(5 * n - 2, 4 * n));
		CHECK(t.toughness == structured_by_hand(n));
		CHECK(t.toughness == extremal_toughness_formula(n));
		REQUIRE(t.cut);
		std::vector<bool> alive(inst.graph.vertex_count(), true);
		for (Vertex v : t.cut->cutset)
			alive[v] = false;
		CHECK(oracle::count_components(inst.graph, alive) == t.cut->component_count);
		CHECK(Rational(static_cast<std::int64_t>(t.cut->cutset.size()), t.cut->component_count) == t.toughness);
	}
}

TEST_CASE("structured toughness matches the exact value on G_2") {
	auto g2 = build_extremal(2);
	CHECK(toughness_exact(g2.graph).toughness == Rational(1));
	auto brute = oracle::toughness(g2.graph);
	REQUIRE(brute.value);
	CHECK(brute.value->num == brute.value->den);
	CHECK(toughness_exact(build_extremal(3).graph, 26).toughness == Rational(13, 12));
}

TEST_CASE("the formula decreases towards 5/4") {
	for (std::int64_t n = 2; n < 200; ++n)
		CHECK(extremal_toughness_formula(n + 1) > extremal_toughness_formula(n));
	const Rational far = extremal_toughness_formula(1'000'000);
	CHECK(far < Rational(5, 4));
	CHECK(abs_diff(far, Rational(5, 4)) < Rational(1, 1'000'000));
	CHECK(far == Rational(4'999'998, 4'000'000));
}

TEST_CASE("certificates") {
	auto c2 = no_trail_certificate(build_extremal(2));
	CHECK(c2.required == 8);
	CHECK(c2.budget == 4);
	auto c5 = no_trail_certificate(build_extremal(5));
	CHECK(c5.required == 20);
	CHECK(c5.budget == 16);

	for (int n = 2; n <= 50; ++n) {
		auto inst = build_extremal(n);
		CHECK(check_certificate(inst.graph, no_trail_certificate(inst)));
	}

	// K5 has no independent Q2 and the counts do not separate.
	NoTrailCertificate fake{3, 4, {0, 1, 2}, {3}};
	CHECK_FALSE(check_certificate(Graph::complete(5), fake));
	NoTrailCertificate inflated{8, 4, {}, {16}};
	CHECK_FALSE(check_certificate(build_extremal(2).graph, inflated));
}

TEST_CASE("certificates need the family's shape") {
	auto inst = build_extremal(2);
	inst.graph = inst.graph.with_edge({8, 1}); // q2_0 gains a second Q1 neighbour
	try {
		no_trail_certificate(inst);
		FAIL("expected MalformedInstance");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::MalformedInstance);
	}
}

TEST_CASE("no spanning 2-trail in G_2") {
	auto g2 = build_extremal(2).graph;
	auto r = find_spanning_2trail(g2);
	REQUIRE_FALSE(r.ok());
	CHECK(witness_holds(g2, r.failure(), r.trace.cycle ? r.trace.cycle->length() : 0));

	OracleLimits raised;
	raised.max_vertices = 17;
	raised.max_edges = 52;
	CHECK_FALSE(oracle_exists_2trail(g2, raised).exists);
}
