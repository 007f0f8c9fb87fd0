#include "io.hpp"

#include "spantrail/error.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#ifndef SPANTRAIL_VERSION
#define SPANTRAIL_VERSION "0.0.0"
#endif

namespace spantrail::io {

namespace {

bool is_blank(char ch) {
	return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f';
}

bool is_control(char ch) {
	const auto u = static_cast<unsigned char>(ch);
	return (u < 0x20 && !is_blank(ch)) || u == 0x7f;
}

std::string show_byte(char ch) {
	char buf[8];
	std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(ch));
	return buf;
}

// Calls f(line_number, line) for every '\n'-separated line.
template <typename F>
void for_each_line(std::string_view text, F&& f) {
	std::size_t line = 0;
	while (!text.empty()) {
		++line;
		const std::size_t end = text.find('\n');
		f(line, text.substr(0, end));
		if (end == std::string_view::npos)
			break;
		text.remove_prefix(end + 1);
	}
}

std::string_view trim(std::string_view s) {
	while (!s.empty() && is_blank(s.front()))
		s.remove_prefix(1);
	while (!s.empty() && is_blank(s.back()))
		s.remove_suffix(1);
	return s;
}

class NameTable {
public:
	Vertex intern(const std::string& name, std::size_t line) {
		auto [it, inserted] = index_.try_emplace(name, static_cast<Vertex>(names_.size()));
		if (inserted) {
			if (names_.size() >= max_named_vertices)
				throw SizeLimitExceeded("vertex names (line " + std::to_string(line) + ")",
				                        names_.size() + 1, max_named_vertices);
			names_.push_back(name);
		}
		return it->second;
	}

	std::vector<std::string> release() { return std::move(names_); }

private:
	std::map<std::string, Vertex, std::less<>> index_;
	std::vector<std::string> names_;
};

std::string quote(std::string_view name) {
	std::string out = "\"";
	for (char ch : name) {
		if (ch == '"' || ch == '\\')
			out += '\\';
		out += ch;
	}
	out += '"';
	return out;
}

// Reads a quoted DOT identifier at the front of `s`, advancing past it.
std::string read_quoted(std::string_view& s, std::size_t line) {
	s = trim(s);
	if (s.empty() || s.front() != '"')
		throw ParseError(line, std::string(s.substr(0, 16)), "expected a quoted name");
	std::string out;
	std::size_t i = 1;
	for (; i < s.size() && s[i] != '"'; ++i) {
		if (s[i] == '\\' && i + 1 < s.size())
			++i;
		out += s[i];
	}
	if (i == s.size())
		throw ParseError(line, std::string(s.substr(0, 16)), "unterminated quoted name");
	if (out.empty())
		throw ParseError(line, "\"\"", "empty vertex name");
	s.remove_prefix(i + 1);
	return out;
}

} // namespace

std::optional<Vertex> NamedGraph::label(std::string_view name) const {
	auto it = std::find(names.begin(), names.end(), name);
	if (it == names.end())
		return std::nullopt;
	return static_cast<Vertex>(it - names.begin());
}

std::vector<NamePair> parse_name_pairs(std::string_view text) {
	std::vector<NamePair> out;
	for_each_line(text, [&](std::size_t line, std::string_view raw) {
		for (char ch : raw)
			if (is_control(ch))
				throw ParseError(line, show_byte(ch), "control character in input");
		std::string_view rest = trim(raw);
		if (rest.empty() || rest.front() == '#')
			return;
		std::vector<std::string> tokens;
		while (!rest.empty()) {
			std::size_t end = 0;
			while (end < rest.size() && !is_blank(rest[end]))
				++end;
			tokens.emplace_back(rest.substr(0, end));
			rest = trim(rest.substr(end));
		}
		if (tokens.size() == 1)
			throw ParseError(line, tokens[0], "expected two vertex names");
		if (tokens.size() > 2)
			throw ParseError(line, tokens[2], "expected two vertex names, found more");
		out.push_back({line, std::move(tokens[0]), std::move(tokens[1])});
	});
	return out;
}

NamedGraph parse_edge_list(std::string_view text) {
	NameTable table;
	std::vector<Edge> edges;
	for (const NamePair& p : parse_name_pairs(text)) {
		if (p.first == p.second)
			throw ParseError(p.line, p.first, "self-loop");
		const Vertex a = table.intern(p.first, p.line);
		const Vertex b = table.intern(p.second, p.line);
		edges.emplace_back(a, b);
	}
	NamedGraph out;
	out.names = table.release();
	out.graph = Graph::from_edges(static_cast<int>(out.names.size()), edges);
	return out;
}

std::string write_edge_list(const NamedGraph& g, const std::vector<std::string>& comment) {
	std::string out;
	for (const std::string& line : comment)
		out += "# " + line + "\n";
	for (const Edge& e : g.graph.edges())
		out += g.name(e.u) + " " + g.name(e.v) + "\n";
	return out;
}

std::string write_dot(const NamedGraph& g) {
	std::vector<std::string> names = g.names;
	std::sort(names.begin(), names.end());
	std::vector<std::pair<std::string, std::string>> edges;
	for (const Edge& e : g.graph.edges()) {
		std::string a = g.name(e.u), b = g.name(e.v);
		if (b < a)
			std::swap(a, b);
		edges.emplace_back(std::move(a), std::move(b));
	}
	std::sort(edges.begin(), edges.end());

	std::string out = "graph G {\n";
	for (const std::string& name : names)
		out += "  " + quote(name) + ";\n";
	for (const auto& [a, b] : edges)
		out += "  " + quote(a) + " -- " + quote(b) + ";\n";
	out += "}\n";
	return out;
}

NamedGraph parse_dot(std::string_view text) {
	NameTable table;
	std::vector<Edge> edges;
	enum { Header, Body, Done } state = Header;
	std::size_t last_line = 1;
	for_each_line(text, [&](std::size_t line, std::string_view raw) {
		last_line = line;
		std::string_view s = trim(raw);
		if (s.empty())
			return;
		switch (state) {
		case Header:
			if (s.substr(0, 5) != "graph" || s.back() != '{')
				throw ParseError(line, std::string(s.substr(0, 16)), "expected 'graph <name> {'");
			state = Body;
			return;
		case Done:
			throw ParseError(line, std::string(s.substr(0, 16)), "text after closing brace");
		case Body:
			break;
		}
		if (s == "}") {
			state = Done;
			return;
		}
		const Vertex a = table.intern(read_quoted(s, line), line);
		s = trim(s);
		if (s.substr(0, 2) == "--") {
			s.remove_prefix(2);
			const Vertex b = table.intern(read_quoted(s, line), line);
			if (a == b)
				throw ParseError(line, "--", "self-loop");
			edges.emplace_back(a, b);
			s = trim(s);
		}
		if (s != ";")
			throw ParseError(line, std::string(s.substr(0, 16)), "expected ';'");
	});
	if (state != Done)
		throw ParseError(last_line, "", "missing closing brace");
	NamedGraph out;
	out.names = table.release();
	out.graph = Graph::from_edges(static_cast<int>(out.names.size()), edges);
	return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (char ch : bytes) {
		h ^= static_cast<unsigned char>(ch);
		h *= 0x100000001b3ULL;
	}
	return h;
}

std::string digest(std::string_view bytes) {
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
	return std::string("fnv1a64:") + buf;
}

ResultDocument::ResultDocument(std::string_view command, std::string_view input_bytes) {
	add("command", std::string(command));
	add("version", SPANTRAIL_VERSION);
	add("digest", digest(input_bytes));
}

void ResultDocument::add(std::string key, std::string value) {
	fields_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> ResultDocument::get(std::string_view key) const {
	for (const auto& [k, v] : fields_)
		if (k == key)
			return v;
	return std::nullopt;
}

std::vector<std::string> ResultDocument::get_all(std::string_view key) const {
	std::vector<std::string> out;
	for (const auto& [k, v] : fields_)
		if (k == key)
			out.push_back(v);
	return out;
}

std::string ResultDocument::render() const {
	std::string out;
	for (const auto& [k, v] : fields_) {
		out += k;
		out += v.empty() ? ":" : ": " + v;
		out += '\n';
	}
	return out;
}

ResultDocument ResultDocument::parse(std::string_view text) {
	ResultDocument doc;
	for_each_line(text, [&](std::size_t line, std::string_view s) {
		const std::size_t colon = s.find(':');
		if (colon == 0 || colon == std::string_view::npos)
			throw ParseError(line, std::string(s.substr(0, 16)), "expected 'key: value'");
		const std::string_view key = s.substr(0, colon);
		for (char ch : key)
			if (!((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '-'))
				throw ParseError(line, std::string(key), "bad key");
		std::string_view value = s.substr(colon + 1);
		if (!value.empty()) {
			if (value.front() != ' ' || value.size() == 1)
				throw ParseError(line, std::string(key), "expected one space after ':'");
			value.remove_prefix(1);
		}
		doc.add(std::string(key), std::string(value));
	});
	return doc;
}

} // namespace spantrail::io
