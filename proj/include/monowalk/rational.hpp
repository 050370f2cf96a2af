#ifndef MONOWALK_RATIONAL_HPP
#define MONOWALK_RATIONAL_HPP

// Exact arithmetic substrate: arbitrary-precision integers and rationals.
// Every quantity in the library flows through these types; there is no
// fixed-width arithmetic and no floating point anywhere in the core.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monowalk {

using Int = boost::multiprecision::cpp_int;
// cpp_rational keeps the canonical form invariant: gcd(num, den) = 1, den > 0.
using Rat = boost::multiprecision::cpp_rational;

using Vec = std::vector<Rat>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Precondition violated by the caller.
struct precondition_error : error {
    using error::error;
};
// An enumeration would exceed its configured budget.
struct budget_error : error {
    using error::error;
};
// Malformed input file or string.
struct parse_error : error {
    using error::error;
};
// An internal invariant failed; indicates a bug or an exceeded step limit.
struct internal_error : error {
    using error::error;
};

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline int sign(const Rat& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }
inline int sign(const Int& z) { return z < 0 ? -1 : (z > 0 ? 1 : 0); }

inline Int abs_int(const Int& z) { return z < 0 ? Int(-z) : z; }
inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Largest integer <= q; exact for negatives (C++ integer division truncates).
inline Int rat_floor(const Rat& q) {
    Int n = num(q), d = den(q);
    Int t = n / d;
    if (n % d != 0 && n < 0) --t;
    return t;
}

// Smallest integer >= q.
inline Int rat_ceil(const Rat& q) {
    Int n = num(q), d = den(q);
    Int t = n / d;
    if (n % d != 0 && n > 0) ++t;
    return t;
}

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Serialized form: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline bool valid_decimal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

// Int's own parser rejects a leading '+'.
inline Int decimal_to_int(const std::string& s) {
    return s[0] == '+' ? Int(s.substr(1)) : Int(s);
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_decimal(s)) throw parse_error("not a rational: '" + s + "'");
        return Rat(decimal_to_int(s));
    }
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!valid_decimal(p) || !valid_decimal(q)) throw parse_error("not a rational: '" + s + "'");
    Int np = decimal_to_int(p), d = decimal_to_int(q);
    if (d == 0) throw parse_error("zero denominator: '" + s + "'");
    if (d < 0) {  // liberal input, canonical value
        np = -np;
        d = -d;
    }
    return Rat(np, d);
}

inline Int int_from_string(const std::string& s) {
    if (!valid_decimal(s)) throw parse_error("not an integer: '" + s + "'");
    return decimal_to_int(s);
}

// --- vector helpers -------------------------------------------------------

inline std::vector<int> support(const Vec& v) {
    std::vector<int> s;
    for (int i = 0; i < (int)v.size(); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

inline bool is_zero(const Vec& v) {
    for (const auto& q : v)
        if (q != 0) return false;
    return true;
}

inline bool is_integral(const Vec& v) {
    for (const auto& q : v)
        if (!is_integer(q)) return false;
    return true;
}

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw precondition_error("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw precondition_error("add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw precondition_error("sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec neg(const Vec& a) { return scale(Rat(-1), a); }

inline Rat norm1(const Vec& a) {
    Rat s = 0;
    for (const auto& q : a) s += abs_rat(q);
    return s;
}

inline Vec vec_of_ints(const std::vector<long long>& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

// Writes v = alpha * p with p primitive integer (gcd of entries 1) and
// alpha > 0, preserving orientation. Pre: v != 0.
inline void primitive_direction(const Vec& v, Vec& p, Rat& alpha) {
    if (is_zero(v)) throw precondition_error("primitive_direction: zero vector");
    Int l = 1, g = 0;
    for (const auto& q : v)
        if (q != 0) l = lcm_int(l, den(q));
    for (const auto& q : v)
        if (q != 0) g = gcd_int(g, abs_int(num(q) * (l / den(q))));
    // v * l is integer with content g; p = v * l / g.
    p.assign(v.size(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] * l / g;
    alpha = Rat(g, l);
}

// c and h point the same way: c_i * h_i >= 0 and |c_i| <= |h_i| everywhere.
inline bool is_conformal(const Vec& c, const Vec& h) {
    if (c.size() != h.size()) throw precondition_error("is_conformal: size mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] * h[i] < 0) return false;
        if (abs_rat(c[i]) > abs_rat(h[i])) return false;
    }
    return true;
}

// supp(c) inside supp(h) with matching signs; magnitudes unconstrained.
inline bool is_dominated(const Vec& c, const Vec& h) {
    if (c.size() != h.size()) throw precondition_error("is_dominated: size mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0 && h[i] == 0) return false;
        if (c[i] * h[i] < 0) return false;
    }
    return true;
}

}  // namespace monowalk

#endif
