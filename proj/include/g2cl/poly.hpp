#pragma once

#include <utility>
#include <vector>

#include "g2cl/factor.hpp"
#include "g2cl/rational.hpp"

namespace g2cl {

// Dense univariate polynomial over Q.  coeffs[i] is the coefficient of x^i;
// trailing zeros are always trimmed, so the zero polynomial has an empty
// coefficient vector and degree -1.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit RatPoly(const Rat& constant) : c_{constant} { trim(); }

    static RatPoly x();  // the monomial x
    static RatPoly monomial(const Rat& coeff, size_t deg);
    static RatPoly from_roots(const std::vector<Rat>& roots);  // monic product of (x - r)

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lead() const;

    Rat operator()(const Rat& x) const;  // exact Horner evaluation

    RatPoly derivative() const;
    RatPoly reversed() const;  // x^deg * p(1/x)
    bool is_even() const;      // only even-degree terms present

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rat& s, const RatPoly& p);
    friend RatPoly operator-(const RatPoly& a);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    // Euclidean division: returns (quotient, remainder) with deg r < deg b.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

  private:
    void trim();
    std::vector<Rat> c_;
};

// Cleared-denominator form: content * primitive reconstructs the rational
// polynomial; the primitive part has integer coefficients of gcd 1 and a
// positive leading coefficient is NOT enforced (sign stays in the primitive
// part so that content is always positive).
struct IntPoly {
    std::vector<Int> coeffs;
    Rat content;  // positive rational

    static IntPoly from(const RatPoly& p);
    RatPoly to_rat() const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// gcd over Q, returned monic (or zero when both inputs are zero).
RatPoly poly_gcd(RatPoly a, RatPoly b);

// Determinant of the Sylvester matrix; rejects zero inputs.
Rat resultant(const RatPoly& p, const RatPoly& q);

// disc(p) = (-1)^{n(n-1)/2} resultant(p, p') / lead(p); requires deg >= 2.
Rat discriminant(const RatPoly& p);

// Discriminant of an even polynomial p(x) = g(x^2) of degree 2m, computed
// from disc(g): disc(p) = (-4)^m * g(0) * lead(g) * disc(g)^2 for m = 3.
// Kept as a fast path for the search pipeline; requires p even, deg = 6.
Rat discriminant_even_sextic(const RatPoly& p);

bool is_separable(const RatPoly& p);  // gcd(p, p') constant; p nonzero

// All rational roots with multiplicities, sorted ascending.  Exact: real
// root isolation via Sturm chains plus simplest-rational reconstruction,
// every candidate re-verified by substitution.
std::vector<std::pair<Rat, int>> rational_roots(const RatPoly& p);

// The rational with smallest denominator in the closed interval [lo, hi].
Rat simplest_between(const Rat& lo, const Rat& hi);

}  // namespace g2cl
