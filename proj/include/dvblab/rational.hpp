#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "dvblab/errors.hpp"

namespace dvblab {

/// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den >= 1,
/// sign carried by the numerator. Equality is structural.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

/// Serialize as "p/q", or plain "p" when q = 1.
inline std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parse "p" or "p/q" with optional leading sign. Throws ParseError.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!valid_int(s)) throw ParseError("bad rational literal: " + s);
            return Rat(Int(s));
        }
        const std::string p = s.substr(0, slash);
        const std::string q = s.substr(slash + 1);
        if (!valid_int(p) || !valid_int(q)) throw ParseError("bad rational literal: " + s);
        Int den(q);
        if (den == 0) throw ParseError("zero denominator: " + s);
        return Rat(Int(p), den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

} // namespace dvblab
