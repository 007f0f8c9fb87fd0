#include "io.hpp"

#include "spantrail/spantrail.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace spantrail;
using namespace spantrail::io;

namespace {

std::set<std::pair<std::string, std::string>> named_edges(const NamedGraph& g) {
	std::set<std::pair<std::string, std::string>> out;
	for (const Edge& e : g.graph.edges()) {
		auto a = g.name(e.u), b = g.name(e.v);
		out.insert(a < b ? std::pair{a, b} : std::pair{b, a});
	}
	return out;
}

template <class F>
std::string parse_error_of(F&& f) {
	try {
		f();
	} catch (const Error& e) {
		if (e.code() == ErrorCode::ParseError)
			return e.what();
		return "wrong code";
	}
	return "no error";
}

} // namespace

TEST_SUITE("edge lists") {

TEST_CASE("labels follow first appearance") {
	auto g = parse_edge_list("# a five-cycle\n\nv0 v1\nv1 v2\n  v2 v3\nv3 v4\nv4 v0\n");
	CHECK(g.graph.vertex_count() == 5);
	CHECK(g.graph.edge_count() == 5);
	CHECK(g.names == std::vector<std::string>{"v0", "v1", "v2", "v3", "v4"});
	CHECK(g.label("v3") == 3);
	CHECK_FALSE(g.label("v9"));
	CHECK(g.graph.adjacent(4, 0));

	auto z = parse_edge_list("zeta alpha\nalpha mid\n");
	CHECK(z.name(0) == "zeta");
	CHECK(z.name(2) == "mid");
}

TEST_CASE("repeats collapse") {
	auto g = parse_edge_list("a b\nb a\na b\n\tb\tc \n");
	CHECK(g.graph.edge_count() == 2);
	CHECK(g.graph.vertex_count() == 3);
}

TEST_CASE("empty and comment-only inputs") {
	CHECK(parse_edge_list("").graph.vertex_count() == 0);
	CHECK(parse_edge_list("# nothing\n   \n#x y z\n").graph.vertex_count() == 0);
	CHECK(parse_edge_list("a b").graph.edge_count() == 1); // no trailing newline
	CHECK(parse_edge_list("a b\r\nb c\r\n").graph.edge_count() == 2);
}

TEST_CASE("errors carry the line and the token") {
	CHECK(parse_error_of([] { parse_edge_list("a b\na\n"); }) == "line 2: expected two vertex names near 'a'");
	CHECK(parse_error_of([] { parse_edge_list("a b c\n"); }) ==
	      "line 1: expected two vertex names, found more near 'c'");
	CHECK(parse_error_of([] { parse_edge_list("# c\n\nx x\n"); }) == "line 3: self-loop near 'x'");
	const std::string control = parse_error_of([] { parse_edge_list(std::string("a b\nc \x01\n")); });
	CHECK(control.find("line 2") != std::string::npos);
	CHECK(control.find("control character") != std::string::npos);
}

TEST_CASE("name limit") {
	std::string text;
	for (std::size_t i = 0; i < max_named_vertices / 2 + 1; ++i)
		text += "a" + std::to_string(i) + " b" + std::to_string(i) + "\n";
	CHECK_THROWS_AS(parse_edge_list(text), SizeLimitExceeded);
}

TEST_CASE("written lists parse back") {
	auto g = parse_edge_list("p q\nq r\nr p\nr s\n");
	const std::string text = write_edge_list(g, {"triangle with a tail"});
	CHECK(text == "# triangle with a tail\np q\np r\nq r\nr s\n");
	auto back = parse_edge_list(text);
	CHECK(named_edges(back) == named_edges(g));
}

TEST_CASE("arbitrary bytes parse or fail cleanly") {
	std::mt19937_64 rng(99);
	const std::string alphabet = "ab #\n\t\r\x01\x7fxy-";
	int parsed = 0, rejected = 0;
	for (int trial = 0; trial < 3000; ++trial) {
		std::string text;
		const int length = static_cast<int>(rng() % 40);
		for (int i = 0; i < length; ++i)
			text += trial % 3 == 0 ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
		try {
			auto g = parse_edge_list(text);
			CHECK(g.graph.vertex_count() == static_cast<int>(g.names.size()));
			++parsed;
		} catch (const Error& e) {
			CHECK(e.code() == ErrorCode::ParseError);
			CHECK(std::string(e.what()).rfind("line ", 0) == 0);
			++rejected;
		}
	}
	CHECK(parsed > 100);
	CHECK(rejected > 100);
}

}

TEST_SUITE("dot") {

TEST_CASE("five-cycle") {
	auto g = parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 0\n");
	const std::string dot = write_dot(g);
	CHECK(dot == "graph G {\n"
	             "  \"0\";\n  \"1\";\n  \"2\";\n  \"3\";\n  \"4\";\n"
	             "  \"0\" -- \"1\";\n  \"0\" -- \"4\";\n  \"1\" -- \"2\";\n  \"2\" -- \"3\";\n  \"3\" -- \"4\";\n"
	             "}\n");
}

TEST_CASE("empty graph is header only") {
	CHECK(write_dot(parse_edge_list("")) == "graph G {\n}\n");
	CHECK(parse_dot("graph G {\n}\n").graph.vertex_count() == 0);
}

TEST_CASE("round trip keeps the named edge set") {
	auto g = parse_edge_list("zed a\na \"q\"\nback\\slash zed\nlone x\n");
	auto back = parse_dot(write_dot(g));
	CHECK(named_edges(back) == named_edges(g));
	CHECK(back.graph.vertex_count() == g.graph.vertex_count());
	CHECK(write_dot(back) == write_dot(g));
}

TEST_CASE("malformed dot") {
	CHECK_THROWS_AS(parse_dot("digraph G {\n}\n"), Error);
	CHECK_THROWS_AS(parse_dot("graph G {\n  \"a\" -- ;\n}\n"), Error);
	const std::string open = parse_error_of([] { parse_dot("graph G {\n  \"a\";\n"); });
	CHECK(open.rfind("line 2", 0) == 0);
}

}

TEST_SUITE("documents") {

TEST_CASE("fnv-1a reference values") {
	CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
	CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
	CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
	CHECK(digest("") == "fnv1a64:cbf29ce484222325");
}

TEST_CASE("standard header") {
	ResultDocument doc("check 2k2", "a b\n");
	REQUIRE(doc.fields().size() == 3);
	CHECK(doc.get("command") == "check 2k2");
	CHECK(doc.get("digest") == digest("a b\n"));
	CHECK(doc.get("version"));
}

TEST_CASE("render and parse are inverse") {
	ResultDocument doc("trail build", "x");
	doc.add("edge", "a b");
	doc.add("edge", "b c");
	doc.add("cut", "");
	doc.add("note", "value: with colon");
	const std::string text = doc.render();
	CHECK(text.find("\ncut:\n") != std::string::npos);
	auto back = ResultDocument::parse(text);
	CHECK(back == doc);
	CHECK(back.render() == text);
	CHECK(back.get_all("edge") == std::vector<std::string>{"a b", "b c"});
	CHECK(back.get("cut") == "");
	CHECK_FALSE(back.get("missing"));
}

TEST_CASE("grammar violations") {
	CHECK_THROWS_AS(ResultDocument::parse("Key: v\n"), Error);
	CHECK_THROWS_AS(ResultDocument::parse("no colon here\n"), Error);
	CHECK_THROWS_AS(ResultDocument::parse(": v\n"), Error);
	CHECK(ResultDocument::parse("").fields().empty());
}

}
