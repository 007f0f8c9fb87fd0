#include "cli.hpp"
#include "io.hpp"

#include "spantrail/spantrail.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace spantrail;
using spantrail::io::ResultDocument;

namespace {

struct Run {
	int code;
	std::string out;
	std::string err;

	ResultDocument doc() const { return ResultDocument::parse(out); }
};

Run run(std::vector<std::string> args) {
	std::ostringstream out, err;
	const int code = cli::run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SPANTRAIL_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

std::string golden(const std::string& name) { return slurp(std::string(SPANTRAIL_TEST_GOLDEN) + "/" + name); }

// A scratch file removed when the test ends.
struct TempFile {
	std::filesystem::path path;

	explicit TempFile(const std::string& stem, const std::string& contents = "")
	    : path(std::filesystem::temp_directory_path() / ("spantrail-" + stem)) {
		if (!contents.empty())
			std::ofstream(path, std::ios::binary) << contents;
	}
	~TempFile() { std::filesystem::remove(path); }

	std::string str() const { return path.string(); }
};

} // namespace

TEST_SUITE("check") {

TEST_CASE("2k2") {
	auto c5 = run({"check", "2k2", data("c5.txt")});
	CHECK(c5.code == cli::Holds);
	CHECK(c5.doc().get("holds") == "true");
	CHECK(c5.out == golden("check_2k2_c5.out"));

	TempFile c6("c6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
	auto r = run({"check", "2k2", c6.str()});
	CHECK(r.code == cli::Witnessed);
	CHECK(r.doc().get("induced-2k2") == "0 1 3 4");
}

TEST_CASE("toughness against 3/2") {
	auto r = run({"check", "tough", "--t", "3/2", data("c5.txt")});
	CHECK(r.code == cli::Witnessed);
	CHECK(r.doc().get("cut") == "0 2");
	CHECK(r.doc().get("cut-ratio") == "1");
	CHECK(r.out == golden("check_tough_c5.out"));

	auto exact = run({"check", "tough", data("c5.txt")});
	CHECK(exact.code == cli::Witnessed);
	CHECK(exact.doc().get("toughness") == "1");

	auto k4 = run({"check", "tough", data("k4.txt")});
	CHECK(k4.code == cli::Holds);
	CHECK(k4.doc().get("toughness") == "inf");

	CHECK(run({"check", "tough", "--t", "1", data("c5.txt")}).code == cli::Holds);
	CHECK(run({"--jobs", "3", "check", "tough", data("g2.txt")}).out ==
	      run({"check", "tough", data("g2.txt")}).out);
}

TEST_CASE("minimum degree") {
	CHECK(run({"check", "mindeg", data("k4.txt")}).code == cli::Holds);
	auto c5 = run({"check", "mindeg", data("c5.txt")});
	CHECK(c5.code == cli::Witnessed);
	CHECK(c5.doc().get("min-degree") == "2");
	CHECK(run({"check", "mindeg", "--at-least", "2", data("c5.txt")}).code == cli::Holds);
}

TEST_CASE("input errors") {
	auto bad = run({"check", "2k2", data("malformed.txt")});
	CHECK(bad.code == cli::Failed);
	CHECK(bad.out.empty());
	CHECK(bad.err == "error: ParseError: line 3: expected two vertex names near 'a'\n");

	CHECK(run({"check", "2k2", data("missing.txt")}).code == cli::Failed);
	CHECK(run({"check", "tough", "--t", "abc", data("c5.txt")}).code == cli::Failed);
	auto capped = run({"--limit", "3", "check", "tough", data("c5.txt")});
	CHECK(capped.code == cli::Failed);
	CHECK(capped.err.find("SizeLimitExceeded") != std::string::npos);
	CHECK(run({"check", "planarity", data("c5.txt")}).code == cli::Failed);
	CHECK(run({}).code == cli::Failed);
	CHECK(run({"frob"}).code == cli::Failed);
}

}

TEST_SUITE("trail") {

TEST_CASE("build on K4") {
	auto r = run({"trail", "build", data("k4.txt")});
	CHECK(r.code == cli::Holds);
	auto doc = r.doc();
	CHECK(doc.get("result") == "trail");
	CHECK(doc.get_all("edge").size() == 4);
	for (const auto& d : doc.get_all("degree"))
		CHECK(d.substr(d.find(' ') + 1) == "2");
	CHECK(r.out == golden("trail_build_k4.out"));
}

TEST_CASE("build on G_2 fails with a toughness witness") {
	auto r = run({"trail", "build", data("g2.txt")});
	CHECK(r.code == cli::Witnessed);
	auto doc = r.doc();
	CHECK(doc.get("result") == "failure");
	CHECK(doc.get("failure") == "CoverDeficient");
	REQUIRE(doc.get("cut-ratio"));
	auto ratio = Rational::parse(*doc.get("cut-ratio"));
	REQUIRE(ratio);
	CHECK(*ratio < Rational(3, 2));
	CHECK(r.out == golden("trail_build_g2.out"));
}

TEST_CASE("build reports the case 2 branch") {
	// The rerooted fixture, ordered so names first appear in label order.
	TempFile f("reroot.txt",
	           "v0 v1\nv1 v2\nv2 v3\nv3 v4\nv4 v5\nv5 v6\nv2 v7\nv2 v8\nv0 v3\nv0 v6\nv0 v8\nv3 v7\nv3 v8\n");
	auto r = run({"trail", "build", f.str()});
	CHECK(r.code == cli::Holds);
	auto doc = r.doc();
	CHECK(doc.get("route") == "case2");
	CHECK(doc.get_all("branch") == std::vector<std::string>{"iii"});
	CHECK(doc.get_all("step").size() == 2);
}

TEST_CASE("oracle") {
	auto c5 = run({"trail", "oracle", data("c5.txt")});
	CHECK(c5.code == cli::Holds);
	CHECK(c5.doc().get("exists") == "true");

	TempFile tree("tree.txt", "a b\nb c\nc d\n");
	auto t = run({"trail", "oracle", tree.str()});
	CHECK(t.code == cli::Witnessed);
	CHECK(t.doc().get("exists") == "false");

	CHECK(run({"trail", "oracle", data("g2.txt")}).code == cli::Failed);
	auto raised = run({"--limit", "17", "trail", "oracle", data("g2.txt")});
	CHECK(raised.code == cli::Witnessed);
	CHECK(raised.doc().get("exists") == "false");
}

TEST_CASE("verify") {
	auto star = run({"trail", "verify", data("k4.txt"), data("k4_star_trail.txt")});
	CHECK(star.code == cli::Witnessed);
	CHECK(star.doc().get("reject") == "odd degree at 0");
	CHECK(star.out == golden("trail_verify_star.out"));

	TempFile cycle("k4-cycle.txt", "0 1\n1 2\n2 3\n3 0\n");
	auto ok = run({"trail", "verify", data("k4.txt"), cycle.str()});
	CHECK(ok.code == cli::Holds);
	CHECK(ok.doc().get("accepted") == "true");

	TempFile stranger("k4-stranger.txt", "0 1\n1 z\n");
	auto unknown = run({"trail", "verify", data("k4.txt"), stranger.str()});
	CHECK(unknown.code == cli::Failed);
	CHECK(unknown.err.find("ParseError") != std::string::npos);

	TempFile c5_chord("c5-chord.txt", "0 2\n");
	CHECK(run({"trail", "verify", data("c5.txt"), c5_chord.str()}).code == cli::Witnessed);
}

TEST_CASE("a built trail passes verification") {
	TempFile out("built.txt");
	for (const char* name : {"k4.txt", "c5.txt"}) {
		auto built = run({"trail", "build", data(name)});
		std::string edges;
		for (const auto& e : built.doc().get_all("edge"))
			edges += e + "\n";
		std::ofstream(out.path) << edges;
		CHECK(run({"trail", "verify", data(name), out.str()}).code == cli::Holds);
	}
}

}

TEST_SUITE("gen") {

TEST_CASE("extremal") {
	TempFile out("g2.txt");
	auto r = run({"gen", "extremal", "2", out.str()});
	CHECK(r.code == cli::Holds);
	auto doc = r.doc();
	CHECK(doc.get("vertices") == "17");
	CHECK(doc.get("edges") == "52");
	CHECK(doc.get("toughness") == "1");
	CHECK(r.out == golden("gen_extremal_2.out"));
	CHECK(slurp(out.str()) == golden("gen_extremal_2.edges"));
	CHECK(doc.get("digest") == io::digest(slurp(out.str())));

	auto g = io::parse_edge_list(slurp(out.str()));
	CHECK(g.label("q1_0") == 0);
	CHECK(g.label("q3_0"));

	auto g3 = run({"gen", "extremal", "3", out.str()});
	CHECK(g3.doc().get("toughness") == "13/12");
}

TEST_CASE("range errors") {
	TempFile out("never.txt");
	auto r = run({"gen", "extremal", "1", out.str()});
	CHECK(r.code == cli::Failed);
	CHECK(r.err.find("NTooSmall") != std::string::npos);
	CHECK_FALSE(std::filesystem::exists(out.path));
	CHECK(run({"gen", "tightness", "0", out.str()}).code == cli::Failed);
	CHECK(run({"gen", "petersen", "1", out.str()}).code == cli::Failed);
}

TEST_CASE("tightness") {
	TempFile out("t1.txt");
	auto r = run({"gen", "tightness", "1", out.str()});
	CHECK(r.code == cli::Holds);
	CHECK(r.doc().get("vertices") == "5");
	CHECK(r.doc().get("edges") == "4");
	auto g = io::parse_edge_list(slurp(out.str()));
	CHECK(g.graph.edge_count() == 4);
	for (const char* name : {"x0", "x1", "a0", "a1", "c0"})
		CHECK(g.label(name));
}

}

TEST_SUITE("export and sampling") {

TEST_CASE("dot to stdout and to a file") {
	auto r = run({"export-dot", data("c5.txt")});
	CHECK(r.code == cli::Holds);
	auto g = io::parse_dot(r.out);
	CHECK(g.graph.vertex_count() == 5);
	CHECK(g.graph.edge_count() == 5);

	TempFile out("c5.dot");
	auto doc_run = run({"export-dot", data("c5.txt"), out.str()});
	CHECK(doc_run.code == cli::Holds);
	CHECK(slurp(out.str()) == r.out);
	CHECK(doc_run.doc().get("dot-digest") == io::digest(r.out));

	TempFile empty("empty.txt", "# nothing here\n");
	CHECK(run({"export-dot", empty.str()}).out == "graph G {\n}\n");
}

TEST_CASE("sampling is reproducible") {
	auto a = run({"--seed", "11", "sample", "--count", "12"});
	auto b = run({"--seed", "11", "sample", "--count", "12"});
	CHECK(a.code == cli::Holds);
	CHECK(a.out == b.out);
	auto doc = a.doc();
	CHECK(doc.get("kept") == doc.get("verified"));
	CHECK(doc.get("oracle-runs") == doc.get("oracle-agreed"));
}

TEST_CASE("repeated runs are byte-identical") {
	for (const std::vector<std::string>& args :
	     {std::vector<std::string>{"trail", "build", data("g2.txt")},
	      std::vector<std::string>{"check", "tough", data("g2.txt")},
	      std::vector<std::string>{"trail", "oracle", data("k4.txt")}}) {
		auto first = run(args);
		CHECK(first.out == run(args).out);
		CHECK(ResultDocument::parse(first.out).render() == first.out);
	}
}

}
