#ifndef SPANTRAIL_ERROR_HPP
#define SPANTRAIL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spantrail {

enum class ErrorCode {
	OutOfRangeLabel,
	SelfLoop,
	SizeLimitExceeded,
	EmptyGraph,
	NonPositiveK,
	NoCycle,
	LemmaViolation,
	VertexNotOnCycle,
	NotDominating,
	NTooSmall,
	MalformedInstance,
	ParseError,
	InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Base for every error the library throws. Structured two-outcome results
// (Hall failure, build failure, rejected trails) are return values instead.
class Error : public std::runtime_error {
public:
	Error(ErrorCode code, const std::string& what)
	    : std::runtime_error(what), code_(code) {}

	ErrorCode code() const noexcept { return code_; }

private:
	ErrorCode code_;
};

class SizeLimitExceeded : public Error {
public:
	SizeLimitExceeded(std::string_view operation, std::size_t size, std::size_t limit);

	std::size_t size() const noexcept { return size_; }
	std::size_t limit() const noexcept { return limit_; }

private:
	std::size_t size_;
	std::size_t limit_;
};

class ParseError : public Error {
public:
	ParseError(std::size_t line, std::string token, const std::string& message);

	std::size_t line() const noexcept { return line_; }
	const std::string& token() const noexcept { return token_; }

private:
	std::size_t line_;
	std::string token_;
};

} // namespace spantrail

#endif // SPANTRAIL_ERROR_HPP
