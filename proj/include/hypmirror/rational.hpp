#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypmirror {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

// Floor division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const Int& n) { return n.sign(); }

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Accepts "p", "p/q", and exact decimal strings like "-0.125".
inline Rational parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty())
        throw parse_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int p(s.substr(0, slash));
            Int q(s.substr(slash + 1));
            if (q == 0)
                throw parse_error("zero denominator in '" + text + "'");
            return Rational(p, q);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos)
            return Rational(Int(s));
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty())
            return Rational(Int(head));
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("bad decimal literal '" + text + "'");
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '-' || head[0] == '+'))
            head = head.substr(1);
        if (head.empty())
            head = "0";
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        Int whole(head);
        Int value = whole * scale + Int(frac);
        Rational r(value, scale);
        return neg ? -r : r;
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("bad rational literal '" + text + "'");
    }
}

inline std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1)
        os << "/" << den(r);
    return os.str();
}

inline std::string int_str(const Int& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

} // namespace hypmirror
