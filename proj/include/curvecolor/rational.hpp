#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace curvecolor
{
    using Rational = boost::multiprecision::cpp_rational;
    using Integer = boost::multiprecision::cpp_int;

    /// "p/q", or "p" when the denominator is 1.
    auto to_string(const Rational & r) -> std::string;

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument otherwise.
    auto parse_rational(const std::string & text) -> Rational;
}
