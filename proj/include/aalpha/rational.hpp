#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aalpha {

/// Exact rational scalar used wherever equality must be decided without
/// floating-point error (average 2-outdegrees, energy values on rational
/// alpha grids).
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

/// An alpha value in [0, 1).  Carries an exact rational representation when
/// the value was given as one ("1/4"); plain decimals only get the double.
struct Alpha {
    double value = 0.0;
    bool has_exact = false;
    Rational exact{0};

    Alpha() = default;
    Alpha(double v) : value(v) { check_range(); }
    Alpha(const Rational& r) : value(to_double(r)), has_exact(true), exact(r) { check_range(); }

    void check_range() const {
        if (!(value >= 0.0 && value < 1.0))
            throw std::invalid_argument("alpha must lie in [0,1)");
    }
};

namespace detail {

inline long long parse_ll(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + s + "'");
    }
}

} // namespace detail

/// Parses "0.25", "1/4", or "0".  Rational and integer strings keep exact
/// arithmetic available; plain decimals carry only the double.
inline Alpha parse_alpha(std::string_view text) {
    std::string s(text);
    if (auto slash = s.find('/'); slash != std::string::npos) {
        long long num = detail::parse_ll(s.substr(0, slash), "alpha");
        long long den = detail::parse_ll(s.substr(slash + 1), "alpha");
        if (den <= 0) throw std::invalid_argument("alpha denominator must be positive");
        return Alpha(Rational(num, den));
    }
    if (s.find_first_not_of("0123456789") == std::string::npos && !s.empty())
        return Alpha(Rational(detail::parse_ll(s, "alpha")));
    double v = 0.0;
    try {
        size_t pos = 0;
        v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed alpha: '" + s + "'");
    }
    return Alpha(v);
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace aalpha
