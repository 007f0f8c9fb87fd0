#include "spantrail/recognition.hpp"

#include "spantrail/error.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace spantrail {

std::optional<TwoK2Witness> find_induced_2k2(const Graph& g) {
	const auto edges = g.edges();
	for (std::size_t i = 0; i < edges.size(); ++i) {
		const Edge& e = edges[i];
		for (std::size_t j = i + 1; j < edges.size(); ++j) {
			const Edge& f = edges[j];
			if (e.has(f.u) || e.has(f.v))
				continue;
			if (g.adjacent(e.u, f.u) || g.adjacent(e.u, f.v) || g.adjacent(e.v, f.u) ||
			    g.adjacent(e.v, f.v))
				continue;
			return TwoK2Witness{e.u, e.v, f.u, f.v};
		}
	}
	return std::nullopt;
}

bool is_valid_2k2(const Graph& g, const TwoK2Witness& w) {
	const Vertex vs[] = {w.a, w.b, w.c, w.d};
	for (Vertex v : vs)
		if (!g.contains(v))
			return false;
	for (int i = 0; i < 4; ++i)
		for (int j = i + 1; j < 4; ++j)
			if (vs[i] == vs[j])
				return false;
	return g.adjacent(w.a, w.b) && g.adjacent(w.c, w.d) && !g.adjacent(w.a, w.c) &&
	       !g.adjacent(w.a, w.d) && !g.adjacent(w.b, w.c) && !g.adjacent(w.b, w.d);
}

ToughnessCut make_cut(const Graph& g, VertexSet cutset) {
	std::sort(cutset.begin(), cutset.end());
	int c = component_count(g, cutset);
	ToughnessCut cut;
	cut.component_count = c;
	cut.ratio = c > 0 ? Rational(static_cast<std::int64_t>(cutset.size()), c) : Rational::infinity();
	cut.cutset = std::move(cutset);
	return cut;
}

namespace {

void check_limit(const Graph& g, int limit, const char* op) {
	const int hard = 62;
	if (g.vertex_count() > std::min(limit, hard))
		throw SizeLimitExceeded(op, static_cast<std::size_t>(g.vertex_count()),
		                        static_cast<std::size_t>(std::min(limit, hard)));
}

// Candidate cut during the scan: ratio k/c, ties broken by |S| then lexicographically.
struct Candidate {
	std::uint64_t mask = 0;
	int size = 0;
	int comps = 0;
	bool valid = false;
};

// True when a is strictly preferable to b.
bool better(const Candidate& a, const Candidate& b) {
	if (!b.valid)
		return a.valid;
	if (!a.valid)
		return false;
	auto lhs = static_cast<std::int64_t>(a.size) * b.comps;
	auto rhs = static_cast<std::int64_t>(b.size) * a.comps;
	if (lhs != rhs)
		return lhs < rhs;
	if (a.size != b.size)
		return a.size < b.size;
	std::uint64_t diff = a.mask ^ b.mask;
	// The lowest differing vertex belongs to the lexicographically smaller set.
	return diff != 0 && (a.mask & (diff & -diff)) != 0;
}

Candidate scan_range(const Graph& g, std::uint64_t lo, std::uint64_t hi) {
	const int n = g.vertex_count();
	const std::uint64_t all = (std::uint64_t{1} << n) - 1;
	Candidate best;
	for (std::uint64_t mask = lo; mask < hi; ++mask) {
		int k = std::popcount(mask);
		int rest = n - k;
		if (rest < 2)
			continue;
		// c(G - S) <= n - |S|, so k / (n - k) bounds the ratio from below.
		if (best.valid && static_cast<std::int64_t>(k) * best.comps >
		                      static_cast<std::int64_t>(best.size) * rest)
			continue;
		int c = component_count_masked(g, all & ~mask);
		if (c < 2)
			continue;
		Candidate cand{mask, k, c, true};
		if (better(cand, best))
			best = cand;
	}
	return best;
}

// Visits k-subsets of {0..n-1} in lexicographic order until `visit` returns true.
template <typename Visit>
bool for_each_subset_lex(int n, int k, Visit&& visit) {
	std::vector<int> idx(k);
	for (int i = 0; i < k; ++i)
		idx[i] = i;
	while (true) {
		std::uint64_t mask = 0;
		for (int i : idx)
			mask |= std::uint64_t{1} << i;
		if (visit(mask))
			return true;
		int i = k - 1;
		while (i >= 0 && idx[i] == n - k + i)
			--i;
		if (i < 0)
			return false;
		++idx[i];
		for (int j = i + 1; j < k; ++j)
			idx[j] = idx[j - 1] + 1;
	}
}

} // namespace

ToughnessResult toughness_exact(const Graph& g, int limit, int jobs) {
	if (g.is_complete())
		return {Rational::infinity(), std::nullopt};
	check_limit(g, limit, "toughness_exact");
	const int n = g.vertex_count();
	const std::uint64_t total = std::uint64_t{1} << n;

	Candidate best;
	jobs = std::max(1, jobs);
	if (jobs == 1 || total < 4096) {
		best = scan_range(g, 0, total);
	} else {
		std::vector<Candidate> partial(jobs);
		std::vector<std::thread> workers;
		const std::uint64_t chunk = (total + jobs - 1) / jobs;
		for (int j = 0; j < jobs; ++j) {
			std::uint64_t lo = std::min(total, chunk * j);
			std::uint64_t hi = std::min(total, lo + chunk);
			workers.emplace_back([&, j, lo, hi] { partial[j] = scan_range(g, lo, hi); });
		}
		for (auto& w : workers)
			w.join();
		for (const auto& c : partial)
			if (better(c, best))
				best = c;
	}
	ToughnessCut cut;
	cut.cutset = mask_to_set(best.mask);
	cut.component_count = best.comps;
	cut.ratio = Rational(best.size, best.comps);
	return {cut.ratio, std::move(cut)};
}

std::variant<std::monostate, ToughnessCut> is_t_tough(const Graph& g, const Rational& t, int limit) {
	if (g.is_complete())
		return std::monostate{};
	check_limit(g, limit, "is_t_tough");
	const int n = g.vertex_count();
	const std::uint64_t all = (std::uint64_t{1} << n) - 1;

	auto violates = [&](int k, int c) {
		if (c < 2)
			return false;
		if (t.is_infinite())
			return true;
		return static_cast<__int128>(k) * t.denominator() < static_cast<__int128>(t.numerator()) * c;
	};

	for (int k = 0; k <= n - 2; ++k) {
		// Every larger |S| has an even larger lower bound |S| / (n - |S|).
		if (!violates(k, n - k))
			break;
		std::uint64_t hit = 0;
		int hit_comps = 0;
		bool found = for_each_subset_lex(n, k, [&](std::uint64_t mask) {
			int c = component_count_masked(g, all & ~mask);
			if (violates(k, c)) {
				hit = mask;
				hit_comps = c;
				return true;
			}
			return false;
		});
		if (found) {
			ToughnessCut cut;
			cut.cutset = mask_to_set(hit);
			cut.component_count = hit_comps;
			cut.ratio = Rational(k, hit_comps);
			return cut;
		}
	}
	return std::monostate{};
}

int min_degree(const Graph& g) {
	if (g.vertex_count() == 0)
		throw Error(ErrorCode::EmptyGraph, "min_degree of the empty graph");
	int best = g.degree(0);
	for (Vertex v = 1; v < g.vertex_count(); ++v)
		best = std::min(best, g.degree(v));
	return best;
}

} // namespace spantrail
