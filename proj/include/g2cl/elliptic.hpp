#pragma once

#include <optional>

#include "g2cl/rational.hpp"

namespace g2cl {

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// over Q.  Construction rejects singular models (disc = 0).
struct EllipticCurve {
    Rat a1, a2, a3, a4, a6;

    Rat b2() const { return a1 * a1 + 4 * a2; }
    Rat b4() const { return 2 * a4 + a1 * a3; }
    Rat b6() const { return a3 * a3 + 4 * a6; }
    Rat b8() const { return (b2() * b6() - b4() * b4()) / 4; }
    Rat c4() const { return b2() * b2() - 24 * b4(); }
    Rat c6() const;
    Rat disc() const { return (c4() * c4() * c4() - c6() * c6()) / 1728; }

    bool operator==(const EllipticCurve&) const = default;
};

struct ECPoint {
    bool infinity = true;
    Rat x, y;

    static ECPoint at_infinity() { return ECPoint{}; }
    static ECPoint affine(Rat x, Rat y) { return ECPoint{false, std::move(x), std::move(y)}; }

    bool operator==(const ECPoint&) const = default;
};

EllipticCurve make_curve(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6);

// Convenience for the y^2 = x^3 + A2 x^2 + A4 x + A6 shape this pipeline
// produces.
EllipticCurve curve_from_cubic(Rat A2, Rat A4, Rat A6);

bool on_curve(const EllipticCurve& e, const ECPoint& p);

ECPoint ec_neg(const EllipticCurve& e, const ECPoint& p);
ECPoint ec_add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q);
ECPoint ec_mul(const EllipticCurve& e, long n, const ECPoint& p);

// Least n <= cap with nP = infinity; absent if none.
std::optional<int> order_of_point(const EllipticCurve& e, const ECPoint& p, int cap = 16);

Rat j_invariant(const EllipticCurve& e);

// Q-isomorphism via the scaling test: exists rational u != 0 with
// c4' = u^4 c4 and c6' = u^6 c6 (c4 = 0 / c6 = 0 handled by 6th/4th-power
// ratio tests).
bool is_isomorphic_over_Q(const EllipticCurve& e, const EllipticCurve& f);

// y^2 = c3 x^3 + c2 x^2 + c1 x + c0 brought to the long Weierstrass model
// Y^2 = X^3 + c2 X^2 + c1 c3 X + c0 c3^2 via X = c3 x, Y = c3 y.  The scale
// field lets callers transport points both ways.
struct CubicModel {
    EllipticCurve curve;
    Rat scale;  // = c3

    ECPoint to_weierstrass(const ECPoint& p) const;
    ECPoint from_weierstrass(const ECPoint& p) const;
};

CubicModel from_nonmonic_cubic(const Rat& c3, const Rat& c2, const Rat& c1, const Rat& c0);

}  // namespace g2cl
