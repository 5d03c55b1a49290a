// Exact rational scalars (GMP-backed) shared by every module.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jkl {

using Rational = mpq_class;
using Integer = mpz_class;

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invariant violations that indicate a bug in the engine itself, never bad
// user input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational with_sign(int sign, const Rational& q) {
    return sign >= 0 ? q : Rational(-q);
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Canonical text form: "p" when integral, "p/q" otherwise.
inline std::string rat_to_string(const Rational& q) {
    return is_integer(q) ? q.get_num().get_str() : q.get_str();
}

inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw error("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

}  // namespace jkl
