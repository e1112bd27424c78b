#include "g2cl/x1ten.hpp"

#include "g2cl/factor.hpp"

namespace g2cl {

bool excluded_parameter(const Rat& t) {
    return t == 0 || t == 1 || t == make_rat(1, 2);
}

Rat delta10(const Rat& t) { return (2 * t - 1) * (4 * t * t - 2 * t - 1); }

namespace {

// (2t-1)^5 (4t^2-2t-1): delta10 times the square (2t-1)^4.
Rat delta10_quintic(const Rat& t) {
    Rat m = 2 * t - 1;
    Rat m2 = m * m;
    return m * m2 * m2 * (4 * t * t - 2 * t - 1);
}

}  // namespace

FamilyMember universal_curve(const Rat& t) {
    if (excluded_parameter(t)) throw std::domain_error("universal_curve: t in {0, 1/2, 1}");
    Rat t2 = t * t, t3 = t2 * t, t5 = t3 * t2;
    Rat tm1 = t - 1;
    Rat tm1_5 = tm1 * tm1 * tm1 * tm1 * tm1;
    Rat q = t2 - 3 * t + 1;
    // y^2 = x (x^2 - A x + B)  =>  x^3 - A x^2 + B x
    Rat A = (2 * t2 - 2 * t + 1) * (4 * t2 * t2 - 12 * t3 + 6 * t2 + 2 * t - 1);
    Rat B = 16 * q * tm1_5 * t5;
    EllipticCurve curve = curve_from_cubic(-A, B, Rat(0));
    Rat px = 4 * tm1 * q * t3;
    ECPoint pt = ECPoint::affine(px, px * (2 * t - 1));
    if (!on_curve(curve, pt) || order_of_point(curve, pt) != std::optional<int>(10))
        throw std::domain_error("universal_curve: torsion verification failed");
    return FamilyMember{t, std::move(curve), std::move(pt)};
}

std::optional<Rat> solve_z(const Rat& t, const Rat& u) {
    if (excluded_parameter(t) || excluded_parameter(u))
        throw std::domain_error("solve_z: parameter in {0, 1/2, 1}");
    Rat ratio = delta10_quintic(u) / delta10_quintic(t);
    return rational_sqrt(ratio);
}

}  // namespace g2cl
