#include "spantrail/error.hpp"

#include <sstream>

namespace spantrail {

std::string_view to_string(ErrorCode code) {
	switch (code) {
	case ErrorCode::OutOfRangeLabel: return "OutOfRangeLabel";
	case ErrorCode::SelfLoop: return "SelfLoop";
	case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
	case ErrorCode::EmptyGraph: return "EmptyGraph";
	case ErrorCode::NonPositiveK: return "NonPositiveK";
	case ErrorCode::NoCycle: return "NoCycle";
	case ErrorCode::LemmaViolation: return "LemmaViolation";
	case ErrorCode::VertexNotOnCycle: return "VertexNotOnCycle";
	case ErrorCode::NotDominating: return "NotDominating";
	case ErrorCode::NTooSmall: return "NTooSmall";
	case ErrorCode::MalformedInstance: return "MalformedInstance";
	case ErrorCode::ParseError: return "ParseError";
	case ErrorCode::InvalidArgument: return "InvalidArgument";
	}
	return "Unknown";
}

namespace {

std::string size_message(std::string_view operation, std::size_t size, std::size_t limit) {
	std::ostringstream os;
	os << operation << ": size " << size << " exceeds limit " << limit;
	return os.str();
}

std::string parse_message(std::size_t line, const std::string& token, const std::string& message) {
	std::ostringstream os;
	os << "line " << line << ": " << message;
	if (!token.empty())
		os << " near '" << token << "'";
	return os.str();
}

} // namespace

SizeLimitExceeded::SizeLimitExceeded(std::string_view operation, std::size_t size, std::size_t limit)
    : Error(ErrorCode::SizeLimitExceeded, size_message(operation, size, limit)),
      size_(size), limit_(limit) {}

ParseError::ParseError(std::size_t line, std::string token, const std::string& message)
    : Error(ErrorCode::ParseError, parse_message(line, token, message)),
      line_(line), token_(std::move(token)) {}

} // namespace spantrail
