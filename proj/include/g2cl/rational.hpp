#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace g2cl {

// Exact arbitrary-precision scalars. mpq_class keeps values canonical
// (lowest terms, positive denominator) as long as every constructor goes
// through make_rat or gmp's own operators.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline const Int& num(const Rat& q) { return q.get_num(); }
inline const Int& den(const Rat& q) { return q.get_den(); }

// max(|num|, den) -- the naive height of a rational.
inline Int height(const Rat& q) {
    Int n = abs(q.get_num());
    return n > q.get_den() ? n : Int(q.get_den());
}

inline std::string to_string(const Int& n) { return n.get_str(); }

// Serializes as "num/den", den omitted when 1.
inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

}  // namespace g2cl
