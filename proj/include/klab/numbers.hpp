#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace klab {

using integer = boost::multiprecision::cpp_int;
using rational = boost::rational<std::int64_t>;

// An element of (1/2)Z, stored as twice its value.
class half_int {
public:
    constexpr half_int() = default;
    constexpr explicit half_int(int n) : twice_(2 * n) {}

    static constexpr half_int from_twice(int t) {
        half_int h;
        h.twice_ = t;
        return h;
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    // (-1)^{2r}
    constexpr int parity_sign() const { return is_integer() ? 1 : -1; }
    constexpr bool positive() const { return twice_ > 0; }

    int as_int() const {
        if (!is_integer()) throw std::domain_error("half_int: not an integer");
        return twice_ / 2;
    }

    rational value() const { return rational(twice_, 2); }

    constexpr half_int operator-() const { return from_twice(-twice_); }
    constexpr half_int operator+(half_int o) const { return from_twice(twice_ + o.twice_); }
    constexpr half_int operator-(half_int o) const { return from_twice(twice_ - o.twice_); }

    constexpr auto operator<=>(const half_int&) const = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    static half_int parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return half_int(std::stoi(s));
        if (s.substr(slash + 1) != "2") throw std::invalid_argument("half_int: bad denominator in '" + s + "'");
        int num = std::stoi(s.substr(0, slash));
        return from_twice(num);
    }

private:
    int twice_ = 0;
};

inline constexpr half_int half{half_int::from_twice(1)};

inline std::string to_string(const rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return rational(std::stoll(s));
    return rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

inline std::int64_t to_int(const rational& q) {
    if (q.denominator() != 1) throw std::domain_error("expected an integer, got " + to_string(q));
    return q.numerator();
}

}  // namespace klab
