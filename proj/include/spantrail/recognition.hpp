#ifndef SPANTRAIL_RECOGNITION_HPP
#define SPANTRAIL_RECOGNITION_HPP

#include "spantrail/graph.hpp"
#include "spantrail/rational.hpp"

#include <optional>
#include <variant>

namespace spantrail {

/// ab and cd are edges; none of ac, ad, bc, bd is.
struct TwoK2Witness {
	Vertex a, b, c, d;

	friend bool operator==(const TwoK2Witness&, const TwoK2Witness&) = default;
};

/// A vertex set S whose removal leaves component_count >= 2 pieces.
struct ToughnessCut {
	VertexSet cutset;
	int component_count = 0;
	Rational ratio; // |S| / component_count

	friend bool operator==(const ToughnessCut&, const ToughnessCut&) = default;
};

struct ToughnessResult {
	Rational toughness;
	std::optional<ToughnessCut> cut; // empty iff the graph is complete
};

inline constexpr int default_toughness_limit = 24;

/// First induced 2K2 over ordered edge pairs (ab, cd) in lexicographic order,
/// or nullopt when g is 2K2-free.
std::optional<TwoK2Witness> find_induced_2k2(const Graph& g);

/// Checks the witness against g directly.
bool is_valid_2k2(const Graph& g, const TwoK2Witness& w);

/// Exact toughness by cutset enumeration. Complete graphs (including K0, K1)
/// get infinity; disconnected graphs get 0 with S empty. The reported cut is
/// the first minimiser in (|S|, lexicographic) order. `jobs` > 1 splits the
/// enumeration across threads without changing the result.
ToughnessResult toughness_exact(const Graph& g, int limit = default_toughness_limit, int jobs = 1);

/// std::monostate when g is t-tough, otherwise the first violating cut in
/// (|S|, lexicographic) order.
std::variant<std::monostate, ToughnessCut> is_t_tough(const Graph& g, const Rational& t,
                                                      int limit = default_toughness_limit);

/// Builds the cut record for S, computing c(g - S).
ToughnessCut make_cut(const Graph& g, VertexSet cutset);

int min_degree(const Graph& g);

} // namespace spantrail

#endif // SPANTRAIL_RECOGNITION_HPP
