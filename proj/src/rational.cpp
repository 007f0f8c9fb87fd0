#include "spantrail/rational.hpp"

#include "spantrail/error.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace spantrail {

namespace {

using Wide = __int128;

Rational reduce(Wide num, Wide den) {
	if (den == 0)
		throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
	Wide a = num < 0 ? -num : num;
	Wide b = den;
	while (b != 0) {
		Wide t = a % b;
		a = b;
		b = t;
	}
	if (a > 1) {
		num /= a;
		den /= a;
	}
	constexpr Wide max = INT64_MAX;
	if (num > max || den > max)
		throw Error(ErrorCode::InvalidArgument, "rational overflow");
	return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
	if (denominator <= 0)
		throw Error(ErrorCode::InvalidArgument, "rational denominator must be positive");
	if (numerator < 0)
		throw Error(ErrorCode::InvalidArgument, "rational must be nonnegative");
	std::int64_t g = std::gcd(numerator, denominator);
	num_ = numerator / g;
	den_ = denominator / g;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
	if (a.is_infinite() || b.is_infinite())
		return a.is_infinite() <=> b.is_infinite();
	Wide lhs = static_cast<Wide>(a.num_) * b.den_;
	Wide rhs = static_cast<Wide>(b.num_) * a.den_;
	return lhs < rhs ? std::strong_ordering::less
	     : lhs > rhs ? std::strong_ordering::greater
	                 : std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
	if (a.is_infinite() || b.is_infinite())
		return Rational::infinity();
	return reduce(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
	              static_cast<Wide>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
	if (a.is_infinite() || b.is_infinite()) {
		if (a.num_ == 0 || b.num_ == 0)
			throw Error(ErrorCode::InvalidArgument, "0 * infinity");
		return Rational::infinity();
	}
	return reduce(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
	if (a.is_infinite() || b.is_infinite() || b.num_ == 0)
		throw Error(ErrorCode::InvalidArgument, "rational division needs finite operands and a nonzero divisor");
	return reduce(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

Rational abs_diff(const Rational& a, const Rational& b) {
	if (a.is_infinite() || b.is_infinite())
		throw Error(ErrorCode::InvalidArgument, "abs_diff needs finite operands");
	Wide lhs = static_cast<Wide>(a.num_) * b.den_;
	Wide rhs = static_cast<Wide>(b.num_) * a.den_;
	return reduce(lhs > rhs ? lhs - rhs : rhs - lhs, static_cast<Wide>(a.den_) * b.den_);
}

std::string Rational::to_string() const {
	if (is_infinite())
		return "inf";
	if (den_ == 1)
		return std::to_string(num_);
	return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
	if (text == "inf")
		return infinity();
	auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
		std::int64_t value = 0;
		if (s.empty() || s.front() == '-' || s.front() == '+')
			return std::nullopt;
		auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
		if (ec != std::errc() || ptr != s.data() + s.size())
			return std::nullopt;
		return value;
	};
	auto slash = text.find('/');
	auto num = parse_int(text.substr(0, slash));
	if (!num)
		return std::nullopt;
	std::int64_t den = 1;
	if (slash != std::string_view::npos) {
		auto d = parse_int(text.substr(slash + 1));
		if (!d || *d == 0)
			return std::nullopt;
		den = *d;
	}
	return Rational(*num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
	return os << r.to_string();
}

} // namespace spantrail
