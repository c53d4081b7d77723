#include <curvecolor/rational.hpp>

#include <regex>
#include <stdexcept>

namespace curvecolor
{
    auto to_string(const Rational & r) -> std::string
    {
        auto num = boost::multiprecision::numerator(r);
        auto den = boost::multiprecision::denominator(r);
        if (den == 1)
            return num.str();
        return num.str() + "/" + den.str();
    }

    auto parse_rational(const std::string & text) -> Rational
    {
        static const std::regex pattern(R"(\s*(-?\d+)\s*(?:/\s*(\d+))?\s*)");
        std::smatch m;
        if (! std::regex_match(text, m, pattern))
            throw std::invalid_argument("not a rational: '" + text + "'");
        Integer num(m[1].str());
        Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
        if (den == 0)
            throw std::invalid_argument("zero denominator: '" + text + "'");
        return Rational(num, den);
    }
}
