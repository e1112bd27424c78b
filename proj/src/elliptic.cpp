#include "g2cl/elliptic.hpp"

#include "g2cl/factor.hpp"

namespace g2cl {

Rat EllipticCurve::c6() const {
    Rat B2 = b2();
    return -B2 * B2 * B2 + 36 * B2 * b4() - 216 * b6();
}

EllipticCurve make_curve(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6) {
    EllipticCurve e{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)};
    if (e.disc() == 0) throw std::invalid_argument("make_curve: singular model");
    return e;
}

EllipticCurve curve_from_cubic(Rat A2, Rat A4, Rat A6) {
    return make_curve(Rat(0), std::move(A2), Rat(0), std::move(A4), std::move(A6));
}

bool on_curve(const EllipticCurve& e, const ECPoint& p) {
    if (p.infinity) return true;
    Rat lhs = p.y * p.y + e.a1 * p.x * p.y + e.a3 * p.y;
    Rat rhs = p.x * p.x * p.x + e.a2 * p.x * p.x + e.a4 * p.x + e.a6;
    return lhs == rhs;
}

namespace {

void require_on_curve(const EllipticCurve& e, const ECPoint& p) {
    if (!on_curve(e, p)) throw std::invalid_argument("point not on curve");
}

}  // namespace

ECPoint ec_neg(const EllipticCurve& e, const ECPoint& p) {
    require_on_curve(e, p);
    if (p.infinity) return p;
    return ECPoint::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

ECPoint ec_add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q) {
    require_on_curve(e, p);
    require_on_curve(e, q);
    if (p.infinity) return q;
    if (q.infinity) return p;
    Rat lambda, nu;
    if (p.x == q.x) {
        if (q.y == -p.y - e.a1 * p.x - e.a3) return ECPoint::at_infinity();
        // tangent line
        Rat denom = 2 * p.y + e.a1 * p.x + e.a3;
        lambda = (3 * p.x * p.x + 2 * e.a2 * p.x + e.a4 - e.a1 * p.y) / denom;
        nu = (-p.x * p.x * p.x + e.a4 * p.x + 2 * e.a6 - e.a3 * p.y) / denom;
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
        nu = p.y - lambda * p.x;
    }
    Rat x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
    Rat y3 = -(lambda + e.a1) * x3 - nu - e.a3;
    return ECPoint::affine(std::move(x3), std::move(y3));
}

ECPoint ec_mul(const EllipticCurve& e, long n, const ECPoint& p) {
    require_on_curve(e, p);
    ECPoint base = n < 0 ? ec_neg(e, p) : p;
    unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : n;
    ECPoint acc = ECPoint::at_infinity();
    while (k) {
        if (k & 1) acc = ec_add(e, acc, base);
        k >>= 1;
        if (k) base = ec_add(e, base, base);
    }
    return acc;
}

std::optional<int> order_of_point(const EllipticCurve& e, const ECPoint& p, int cap) {
    require_on_curve(e, p);
    ECPoint acc = p;
    for (int n = 1; n <= cap; ++n) {
        if (acc.infinity) return n;
        acc = ec_add(e, acc, p);
    }
    return std::nullopt;
}

Rat j_invariant(const EllipticCurve& e) {
    Rat d = e.disc();
    if (d == 0) throw std::invalid_argument("j_invariant: singular curve");
    Rat C4 = e.c4();
    return C4 * C4 * C4 / d;
}

bool is_isomorphic_over_Q(const EllipticCurve& e, const EllipticCurve& f) {
    Rat c4a = e.c4(), c6a = e.c6();
    Rat c4b = f.c4(), c6b = f.c6();
    if ((c4a == 0) != (c4b == 0)) return false;
    if ((c6a == 0) != (c6b == 0)) return false;
    if (c4a == 0) {
        // j = 0: need u^6 = c6'/c6
        return rational_kth_root(c6b / c6a, 6).has_value();
    }
    if (c6a == 0) {
        // j = 1728: need u^4 = c4'/c4
        return rational_kth_root(c4b / c4a, 4).has_value();
    }
    Rat r4 = c4b / c4a, r6 = c6b / c6a;
    Rat s = r6 / r4;  // candidate u^2
    if (s * s != r4 || s * s * s != r6) return false;
    return rational_sqrt(s).has_value();
}

ECPoint CubicModel::to_weierstrass(const ECPoint& p) const {
    if (p.infinity) return p;
    return ECPoint::affine(scale * p.x, scale * p.y);
}

ECPoint CubicModel::from_weierstrass(const ECPoint& p) const {
    if (p.infinity) return p;
    return ECPoint::affine(p.x / scale, p.y / scale);
}

CubicModel from_nonmonic_cubic(const Rat& c3, const Rat& c2, const Rat& c1, const Rat& c0) {
    if (c3 == 0) throw std::invalid_argument("from_nonmonic_cubic: degenerate leading coefficient");
    return CubicModel{curve_from_cubic(c2, c1 * c3, c0 * c3 * c3), c3};
}

}  // namespace g2cl
