#ifndef SPANTRAIL_TOOLS_IO_HPP
#define SPANTRAIL_TOOLS_IO_HPP

#include "spantrail/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spantrail::io {

// Files may not introduce more distinct names than this.
inline constexpr std::size_t max_named_vertices = 4096;

/// A graph whose vertices carry the names used in the input file. Label i is
/// the i-th distinct name in order of first appearance.
struct NamedGraph {
	Graph graph;
	std::vector<std::string> names;

	const std::string& name(Vertex v) const { return names[static_cast<std::size_t>(v)]; }
	std::optional<Vertex> label(std::string_view name) const;
};

struct NamePair {
	std::size_t line;
	std::string first;
	std::string second;
};

/// Splits an edge-list text into name pairs. Blank lines and lines whose
/// first non-blank byte is '#' are skipped. Any other line must hold exactly
/// two whitespace-separated names; otherwise ParseError with the 1-based
/// line number and the offending token.
std::vector<NamePair> parse_name_pairs(std::string_view text);

/// Edge-list document to graph. Self-loops are ParseErrors; repeated and
/// reversed edges collapse. Throws SizeLimitExceeded past max_named_vertices.
NamedGraph parse_edge_list(std::string_view text);

/// One "u v" line per edge in label order, preceded by `comment` lines
/// prefixed with "# ".
std::string write_edge_list(const NamedGraph& g, const std::vector<std::string>& comment = {});

/// Undirected DOT with nodes and edges sorted by name.
std::string write_dot(const NamedGraph& g);

/// Reads back what write_dot produces: quoted node statements and quoted
/// "a" -- "b" edge statements, one per line.
NamedGraph parse_dot(std::string_view text);

std::uint64_t fnv1a64(std::string_view bytes);

/// "fnv1a64:" followed by 16 lowercase hex digits.
std::string digest(std::string_view bytes);

/// Line-oriented output. Every line is `key: value` where key is a nonempty
/// run of [a-z0-9-] and value is any text without a newline; an empty value
/// is written as `key:`. Keys may repeat and order is significant.
class ResultDocument {
public:
	using Field = std::pair<std::string, std::string>;

	ResultDocument() = default;

	/// Starts with the command, version and digest fields.
	ResultDocument(std::string_view command, std::string_view input_bytes);

	void add(std::string key, std::string value);
	const std::vector<Field>& fields() const { return fields_; }

	/// First value for `key`.
	std::optional<std::string> get(std::string_view key) const;
	std::vector<std::string> get_all(std::string_view key) const;

	std::string render() const;

	/// Inverse of render; throws ParseError on a line outside the grammar.
	static ResultDocument parse(std::string_view text);

	friend bool operator==(const ResultDocument&, const ResultDocument&) = default;

private:
	std::vector<Field> fields_;
};

} // namespace spantrail::io

#endif // SPANTRAIL_TOOLS_IO_HPP
