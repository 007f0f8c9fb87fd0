#ifndef SPANTRAIL_RATIONAL_HPP
#define SPANTRAIL_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace spantrail {

/// Exact nonnegative fraction in lowest terms, or the distinguished value
/// infinity (the toughness of a complete graph).
class Rational {
public:
	constexpr Rational() = default;
	Rational(std::int64_t numerator, std::int64_t denominator = 1);

	static Rational infinity() {
		Rational r;
		r.num_ = 1;
		r.den_ = 0;
		return r;
	}

	bool is_infinite() const noexcept { return den_ == 0; }
	std::int64_t numerator() const noexcept { return num_; }
	std::int64_t denominator() const noexcept { return den_; }

	friend bool operator==(const Rational&, const Rational&) = default;
	friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

	friend Rational operator+(const Rational& a, const Rational& b);
	friend Rational operator*(const Rational& a, const Rational& b);
	friend Rational operator/(const Rational& a, const Rational& b);

	/// |a - b|; both operands finite.
	friend Rational abs_diff(const Rational& a, const Rational& b);

	/// "p/q", "p" when q == 1, or "inf".
	std::string to_string() const;

	/// Inverse of to_string; returns nullopt on malformed text or a zero denominator.
	static std::optional<Rational> parse(std::string_view text);

private:
	std::int64_t num_ = 0;
	std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace spantrail

#endif // SPANTRAIL_RATIONAL_HPP
