#include "cli.hpp"

#include "io.hpp"

#include "spantrail/spantrail.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace spantrail::cli {

namespace {

struct Globals {
	std::optional<int> limit;
	int jobs = 1;
	std::uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
	return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
	std::ofstream out(path, std::ios::binary);
	if (!out || !(out << text))
		throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
}

std::string names_of(const io::NamedGraph& g, const std::vector<Vertex>& vs) {
	std::string out;
	for (Vertex v : vs) {
		if (!out.empty())
			out += ' ';
		out += g.name(v);
	}
	return out;
}

std::string edge_name(const io::NamedGraph& g, const Edge& e) {
	return g.name(e.u) + " " + g.name(e.v);
}

void describe_graph(io::ResultDocument& doc, const io::NamedGraph& g) {
	doc.add("vertices", std::to_string(g.graph.vertex_count()));
	doc.add("edges", std::to_string(g.graph.edge_count()));
}

void add_cut(io::ResultDocument& doc, const io::NamedGraph& g, const ToughnessCut& cut) {
	doc.add("cut", names_of(g, cut.cutset));
	doc.add("cut-components", std::to_string(cut.component_count));
	doc.add("cut-ratio", cut.ratio.to_string());
}

// Closed walk through every edge of an even, connected edge set, always
// leaving by the smallest unused edge.
std::vector<Vertex> euler_circuit(int n, const std::vector<Edge>& edges) {
	if (edges.empty())
		return {};
	std::vector<std::vector<std::pair<Vertex, int>>> inc(n);
	for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
		inc[edges[i].u].emplace_back(edges[i].v, i);
		inc[edges[i].v].emplace_back(edges[i].u, i);
	}
	for (auto& list : inc)
		std::sort(list.begin(), list.end(), std::greater<>());
	std::vector<bool> used(edges.size(), false);
	std::vector<Vertex> stack{edges.front().u}, walk;
	while (!stack.empty()) {
		const Vertex v = stack.back();
		auto& list = inc[v];
		while (!list.empty() && used[list.back().second])
			list.pop_back();
		if (list.empty()) {
			walk.push_back(v);
			stack.pop_back();
		} else {
			used[list.back().second] = true;
			stack.push_back(list.back().first);
			list.pop_back();
		}
	}
	std::reverse(walk.begin(), walk.end());
	return walk;
}

void add_trail(io::ResultDocument& doc, const io::NamedGraph& g, const TwoTrail& trail) {
	doc.add("trail-edges", std::to_string(trail.edges.size()));
	for (const Edge& e : trail.edges)
		doc.add("edge", edge_name(g, e));
	for (Vertex v = 0; v < g.graph.vertex_count(); ++v)
		doc.add("degree", g.name(v) + " " + std::to_string(trail.degrees[v]));
	doc.add("circuit", names_of(g, euler_circuit(g.graph.vertex_count(), trail.edges)));
}

void add_failure(io::ResultDocument& doc, const io::NamedGraph& g, const BuildFailure& f) {
	doc.add("failure", std::string(to_string(f.step)));
	doc.add("detail", f.detail);
	if (!f.vertices.empty())
		doc.add("witness-vertices", names_of(g, f.vertices));
	for (const Edge& e : f.edges)
		doc.add("witness-edge", edge_name(g, e));
	if (f.cut)
		add_cut(doc, g, *f.cut);
	if (f.induced_2k2) {
		const TwoK2Witness& w = *f.induced_2k2;
		doc.add("induced-2k2", names_of(g, {w.a, w.b, w.c, w.d}));
	}
	if (f.longer_cycle)
		doc.add("longer-cycle", names_of(g, *f.longer_cycle));
}

struct Input {
	std::string bytes;
	io::NamedGraph graph;
};

Input load(const std::string& path) {
	Input in{read_file(path), {}};
	in.graph = io::parse_edge_list(in.bytes);
	return in;
}

int emit(std::ostream& out, const io::ResultDocument& doc, bool holds) {
	out << doc.render();
	return holds ? Holds : Witnessed;
}

int cmd_check_2k2(const Globals&, const std::string& path, std::ostream& out) {
	Input in = load(path);
	io::ResultDocument doc("check 2k2", in.bytes);
	describe_graph(doc, in.graph);
	auto w = find_induced_2k2(in.graph.graph);
	doc.add("holds", w ? "false" : "true");
	if (w)
		doc.add("induced-2k2", names_of(in.graph, {w->a, w->b, w->c, w->d}));
	return emit(out, doc, !w);
}

int cmd_check_tough(const Globals& globals, const std::string& path, const std::string& t_text,
                    std::ostream& out) {
	const auto t = Rational::parse(t_text.empty() ? "3/2" : t_text);
	if (!t)
		throw Error(ErrorCode::InvalidArgument, "--t expects a rational such as 3/2, got '" + t_text + "'");
	Input in = load(path);
	const int limit = globals.limit.value_or(default_toughness_limit);
	io::ResultDocument doc("check tough", in.bytes);
	describe_graph(doc, in.graph);
	doc.add("t", t->to_string());

	if (!t_text.empty()) {
		auto verdict = is_t_tough(in.graph.graph, *t, limit);
		const auto* cut = std::get_if<ToughnessCut>(&verdict);
		doc.add("holds", cut ? "false" : "true");
		if (cut)
			add_cut(doc, in.graph, *cut);
		return emit(out, doc, !cut);
	}
	ToughnessResult r = toughness_exact(in.graph.graph, limit, globals.jobs);
	const bool holds = r.toughness >= *t;
	doc.add("toughness", r.toughness.to_string());
	doc.add("holds", holds ? "true" : "false");
	if (r.cut)
		add_cut(doc, in.graph, *r.cut);
	return emit(out, doc, holds);
}

int cmd_check_mindeg(const Globals&, const std::string& path, int at_least, std::ostream& out) {
	Input in = load(path);
	io::ResultDocument doc("check mindeg", in.bytes);
	describe_graph(doc, in.graph);
	const int d = min_degree(in.graph.graph);
	const bool holds = d >= at_least;
	doc.add("min-degree", std::to_string(d));
	doc.add("at-least", std::to_string(at_least));
	doc.add("holds", holds ? "true" : "false");
	if (!holds) {
		for (Vertex v = 0; v < in.graph.graph.vertex_count(); ++v)
			if (in.graph.graph.degree(v) == d) {
				doc.add("vertex", in.graph.name(v));
				break;
			}
	}
	return emit(out, doc, holds);
}

int cmd_trail_build(const Globals& globals, const std::string& path, std::ostream& out) {
	Input in = load(path);
	BuildOptions options;
	options.cycle_limit = globals.limit.value_or(default_cycle_limit);
	const BuildResult r = find_spanning_2trail(in.graph.graph, options);

	io::ResultDocument doc("trail build", in.bytes);
	describe_graph(doc, in.graph);
	doc.add("result", r.ok() ? "trail" : "failure");
	const BuildTrace& trace = r.trace;
	if (trace.cycle)
		doc.add("cycle", names_of(in.graph, trace.cycle->vertices()));
	if (trace.route)
		doc.add("route", std::string(to_string(*trace.route)));
	for (Case2Branch b : trace.case2_branches)
		doc.add("branch", std::string(to_string(b)));
	for (const std::string& step : trace.steps)
		doc.add("step", step);
	if (trace.route && *trace.route != Route::SpanningCycle) {
		doc.add("path-components", std::to_string(trace.path_components));
		doc.add("swaps", std::to_string(trace.swaps));
	}
	if (r.ok())
		add_trail(doc, in.graph, r.trail());
	else
		add_failure(doc, in.graph, r.failure());
	return emit(out, doc, r.ok());
}

int cmd_trail_oracle(const Globals& globals, const std::string& path, std::ostream& out) {
	Input in = load(path);
	OracleLimits limits;
	if (globals.limit)
		limits.max_vertices = *globals.limit;
	const OracleResult r = oracle_exists_2trail(in.graph.graph, limits);
	io::ResultDocument doc("trail oracle", in.bytes);
	describe_graph(doc, in.graph);
	doc.add("exists", r.exists ? "true" : "false");
	doc.add("search-nodes", std::to_string(r.nodes));
	if (r.witness)
		add_trail(doc, in.graph, *r.witness);
	return emit(out, doc, r.exists);
}

int cmd_trail_verify(const std::string& path, const std::string& trail_path, std::ostream& out) {
	Input in = load(path);
	const std::string trail_bytes = read_file(trail_path);
	std::vector<Edge> edges;
	for (const io::NamePair& p : io::parse_name_pairs(trail_bytes)) {
		auto a = in.graph.label(p.first), b = in.graph.label(p.second);
		if (!a)
			throw ParseError(p.line, p.first, "not a vertex of the graph");
		if (!b)
			throw ParseError(p.line, p.second, "not a vertex of the graph");
		if (*a == *b)
			throw ParseError(p.line, p.first, "self-loop");
		edges.emplace_back(*a, *b);
	}
	const TrailVerdict verdict = verify_2trail(in.graph.graph, edges);

	io::ResultDocument doc("trail verify", in.bytes);
	doc.add("trail-digest", io::digest(trail_bytes));
	describe_graph(doc, in.graph);
	doc.add("trail-edges", std::to_string(edges.size()));
	doc.add("accepted", verdict.accepted() ? "true" : "false");
	for (const TrailRejection& r : verdict.rejections)
		doc.add("reject", std::string(to_string(r.defect)) + " at " + in.graph.name(r.vertex));
	return emit(out, doc, verdict.accepted());
}

int cmd_gen_extremal(int n, const std::string& out_path, std::ostream& out) {
	const ExtremalInstance inst = build_extremal(n);
	io::NamedGraph named{inst.graph, std::vector<std::string>(inst.graph.vertex_count())};
	for (int i = 0; i < 4 * n; ++i) {
		named.names[inst.q1[i]] = "q1_" + std::to_string(i);
		named.names[inst.q2[i]] = "q2_" + std::to_string(i);
	}
	for (int i = 0; i < n - 1; ++i)
		named.names[inst.q3[i]] = "q3_" + std::to_string(i);
	const ToughnessResult tough = structured_toughness(inst);
	const std::string text = io::write_edge_list(
	    named, {"extremal graph G_" + std::to_string(n) + ": " + std::to_string(inst.graph.vertex_count()) +
	                " vertices, " + std::to_string(inst.graph.edge_count()) + " edges"});
	write_file(out_path, text);

	io::ResultDocument doc("gen extremal", text);
	doc.add("parameter", std::to_string(n));
	describe_graph(doc, named);
	doc.add("toughness", tough.toughness.to_string());
	doc.add("cut", names_of(named, tough.cut->cutset));
	doc.add("cut-components", std::to_string(tough.cut->component_count));
	return emit(out, doc, true);
}

int cmd_gen_tightness(int k, const std::string& out_path, std::ostream& out) {
	const BipartiteInstance inst = tightness_family(k);
	const int total = static_cast<int>(inst.X.size() + inst.Y.size());
	std::vector<std::string> names(total);
	for (std::size_t i = 0; i < inst.X.size(); ++i)
		names[inst.X[i]] = "x" + std::to_string(i);
	for (int i = 0; i < 2 * k; ++i)
		names[inst.Y[i]] = "a" + std::to_string(i);
	for (int i = 0; i < k; ++i)
		names[inst.Y[2 * k + i]] = "c" + std::to_string(i);
	io::NamedGraph named{Graph::from_edges(total, std::span(inst.edges)), std::move(names)};
	const std::string text = io::write_edge_list(
	    named, {"cover lemma tightness instance k = " + std::to_string(k) + ": |X| = " +
	                std::to_string(inst.X.size()) + ", |Y| = " + std::to_string(inst.Y.size())});
	write_file(out_path, text);

	io::ResultDocument doc("gen tightness", text);
	doc.add("parameter", std::to_string(k));
	describe_graph(doc, named);
	doc.add("x", std::to_string(inst.X.size()));
	doc.add("y", std::to_string(inst.Y.size()));
	return emit(out, doc, true);
}

int cmd_export_dot(const std::string& path, const std::string& out_path, std::ostream& out) {
	Input in = load(path);
	const std::string dot = io::write_dot(in.graph);
	if (out_path.empty() || out_path == "-") {
		out << dot;
		return Holds;
	}
	write_file(out_path, dot);
	io::ResultDocument doc("export-dot", in.bytes);
	describe_graph(doc, in.graph);
	doc.add("dot-digest", io::digest(dot));
	return emit(out, doc, true);
}

// Draws random connected 2K2-free graphs, keeps the 3/2-tough ones and runs
// the builder, the verifier and (when small enough) the oracle on each.
int cmd_sample(const Globals& globals, int count, int min_n, int max_n, std::ostream& out) {
	if (count < 1 || min_n < 3 || max_n < min_n)
		throw Error(ErrorCode::InvalidArgument, "sample needs count >= 1 and 3 <= min <= max");
	Rng rng(globals.seed);
	const Rational three_halves(3, 2);
	const int limit = globals.limit.value_or(default_toughness_limit);
	BuildOptions options;
	options.cycle_limit = globals.limit.value_or(default_cycle_limit);

	int drawn = 0, kept = 0, verified = 0, oracle_runs = 0, oracle_agreed = 0;
	std::map<std::string, int> routes;
	std::optional<Graph> first_failure;
	while (kept < count) {
		const int n = uniform_int(rng, min_n, max_n);
		const double q = 0.1 + 0.5 * uniform_unit(rng);
		Graph g = random_2k2_free_graph(n, q, rng);
		++drawn;
		if (component_count(g) != 1 || !std::holds_alternative<std::monostate>(is_t_tough(g, three_halves, limit)))
			continue;
		++kept;
		const BuildResult r = find_spanning_2trail(g, options);
		const bool ok = r.ok() && verify_2trail(g, r.trail().edges).accepted();
		if (ok) {
			++verified;
			++routes[std::string(to_string(*r.trace.route))];
		} else if (!first_failure) {
			first_failure = g;
		}
		if (g.vertex_count() <= OracleLimits{}.max_vertices) {
			++oracle_runs;
			if (oracle_exists_2trail(g).exists == ok)
				++oracle_agreed;
		}
	}

	std::ostringstream params;
	params << "seed=" << globals.seed << " count=" << count << " min=" << min_n << " max=" << max_n;
	io::ResultDocument doc("sample", params.str());
	doc.add("seed", std::to_string(globals.seed));
	doc.add("drawn", std::to_string(drawn));
	doc.add("kept", std::to_string(kept));
	doc.add("verified", std::to_string(verified));
	doc.add("oracle-runs", std::to_string(oracle_runs));
	doc.add("oracle-agreed", std::to_string(oracle_agreed));
	for (const auto& [route, hits] : routes)
		doc.add("route", route + " " + std::to_string(hits));
	if (first_failure)
		for (const Edge& e : first_failure->edges())
			doc.add("failing-edge", std::to_string(e.u) + " " + std::to_string(e.v));
	return emit(out, doc, verified == kept && oracle_agreed == oracle_runs);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Spanning 2-trails in 3/2-tough 2K2-free graphs", "spantrail"};
	app.require_subcommand(1);
	app.fallthrough();

	Globals globals;
	app.add_option("--limit", globals.limit, "Vertex cap for exponential searches (toughness, longest cycle, oracle)")
	    ->check(CLI::PositiveNumber);
	app.add_option("--jobs", globals.jobs, "Threads for exact toughness")->check(CLI::PositiveNumber);
	app.add_option("--seed", globals.seed, "Seed for sampling commands");
	app.set_version_flag("--version", SPANTRAIL_VERSION);

	std::string path, second_path, t_text;
	int at_least = 3, parameter = 0, count = 100, min_n = 8, max_n = 9;

	auto* check = app.add_subcommand("check", "Test a graph property; exit 1 prints a witness");
	check->require_subcommand(1);
	auto* check_2k2 = check->add_subcommand("2k2", "Is the graph 2K2-free?");
	auto* check_tough = check->add_subcommand("tough", "Toughness; exact unless --t is given");
	auto* check_mindeg = check->add_subcommand("mindeg", "Minimum degree against a threshold");
	for (auto* sub : {check_2k2, check_tough, check_mindeg})
		sub->add_option("graph", path, "Edge-list file")->required();
	check_tough->add_option("--t", t_text, "Threshold such as 3/2; without it the exact value is computed");
	check_mindeg->add_option("--at-least", at_least, "Required minimum degree")->capture_default_str();

	auto* trail = app.add_subcommand("trail", "Spanning 2-trails");
	trail->require_subcommand(1);
	auto* trail_build = trail->add_subcommand("build", "Run the constructive proof");
	auto* trail_oracle = trail->add_subcommand("oracle", "Exhaustive existence search");
	auto* trail_verify = trail->add_subcommand("verify", "Check an edge set is a spanning 2-trail");
	for (auto* sub : {trail_build, trail_oracle, trail_verify})
		sub->add_option("graph", path, "Edge-list file")->required();
	trail_verify->add_option("trail", second_path, "Edge list of the proposed trail")->required();

	auto* gen = app.add_subcommand("gen", "Write a named instance as an edge list");
	gen->require_subcommand(1);
	auto* gen_extremal = gen->add_subcommand("extremal", "G_n, the 5/4-tough family without a 2-trail");
	auto* gen_tightness = gen->add_subcommand("tightness", "Bipartite instance where the cover lemma is tight");
	for (auto* sub : {gen_extremal, gen_tightness}) {
		sub->add_option("parameter", parameter, "n for extremal, k for tightness")->required();
		sub->add_option("out", second_path, "Output file")->required();
	}

	auto* export_dot = app.add_subcommand("export-dot", "Graphviz DOT with sorted names");
	export_dot->add_option("graph", path, "Edge-list file")->required();
	export_dot->add_option("out", second_path, "Output file (default: standard output)");

	auto* sample = app.add_subcommand("sample", "Random 3/2-tough 2K2-free graphs through builder and oracle");
	sample->add_option("--count", count, "Graphs to keep")->capture_default_str();
	sample->add_option("--min-vertices", min_n)->capture_default_str();
	sample->add_option("--max-vertices", max_n)->capture_default_str();

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? Holds : Failed;
	}

	try {
		if (*check_2k2)
			return cmd_check_2k2(globals, path, out);
		if (*check_tough)
			return cmd_check_tough(globals, path, t_text, out);
		if (*check_mindeg)
			return cmd_check_mindeg(globals, path, at_least, out);
		if (*trail_build)
			return cmd_trail_build(globals, path, out);
		if (*trail_oracle)
			return cmd_trail_oracle(globals, path, out);
		if (*trail_verify)
			return cmd_trail_verify(path, second_path, out);
		if (*gen_extremal)
			return cmd_gen_extremal(parameter, second_path, out);
		if (*gen_tightness)
			return cmd_gen_tightness(parameter, second_path, out);
		if (*export_dot)
			return cmd_export_dot(path, second_path, out);
		if (*sample)
			return cmd_sample(globals, count, min_n, max_n, out);
	} catch (const Error& e) {
		err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
		return Failed;
	} catch (const std::exception& e) {
		err << "error: internal: " << e.what() << "\n";
		return Failed;
	}
	err << app.help();
	return Failed;
}

} // namespace spantrail::cli
