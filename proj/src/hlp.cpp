#include "g2cl/hlp.hpp"

#include "g2cl/x1ten.hpp"

namespace g2cl {

HLPCoefficients hlp_coefficients(const Rat& t, const Rat& u, const Rat& z) {
    Rat t1 = t, t2 = t1 * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t, t6 = t5 * t, t7 = t6 * t,
        t8 = t7 * t, t9 = t8 * t, t10 = t9 * t, t11 = t10 * t, t12 = t11 * t;
    Rat u1 = u, u2 = u1 * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u, u6 = u5 * u, u7 = u6 * u,
        u8 = u7 * u, u9 = u8 * u, u10 = u9 * u, u11 = u10 * u, u12 = u11 * u;
    Rat z2 = z * z;

    HLPCoefficients c;
    c.t = t;
    c.u = u;
    c.z = z;

    c.a = 2 * (8 * t6 * z - 32 * t5 * z + 40 * t4 * z - 20 * t3 * z + 4 * t1 * z - 8 * u6 +
               32 * u5 - 40 * u4 + 20 * u3 - 4 * u1 - z + 1);

    Rat tm1 = t - 1;
    c.a0 = -64 * t5 * tm1 * tm1 * tm1 * tm1 * tm1 * (t2 - 3 * t1 + 1);

    c.a2 = 2 * (32 * t12 * z - 256 * t11 * z + 832 * t10 * z - 1440 * t9 * z + 1440 * t8 * z -
                960 * t7 * z + 64 * t6 * u6 - 256 * t6 * u5 + 320 * t6 * u4 - 160 * t6 * u3 +
                32 * t6 * u1 + 640 * t6 * z - 8 * t6 - 256 * t5 * u6 + 1024 * t5 * u5 -
                1280 * t5 * u4 + 640 * t5 * u3 - 128 * t5 * u1 - 480 * t5 * z + 32 * t5 +
                320 * t4 * u6 - 1280 * t4 * u5 + 1600 * t4 * u4 - 800 * t4 * u3 + 160 * t4 * u1 +
                240 * t4 * z - 40 * t4 - 160 * t3 * u6 + 640 * t3 * u5 - 800 * t3 * u4 +
                400 * t3 * u3 - 80 * t3 * u1 - 40 * t3 * z + 20 * t3 - 16 * t2 * z + 32 * t1 * u6 -
                128 * t1 * u5 + 160 * t1 * u4 - 80 * t1 * u3 + 16 * t1 * u1 + 8 * t1 * z - 4 * t1 -
                8 * u6 + 32 * u5 - 40 * u4 + 20 * u3 - 4 * u1 - z + 1);

    c.a4 = 384 * t7 * z2 - 128 * t6 * u6 * z + 512 * t6 * u5 * z - 640 * t6 * u4 * z +
           320 * t6 * u3 * z - 64 * t6 * u1 * z - 1152 * t6 * z2 + 16 * t6 * z + 512 * t5 * u6 * z -
           2048 * t5 * u5 * z + 2560 * t5 * u4 * z - 1280 * t5 * u3 * z + 256 * t5 * u1 * z +
           1344 * t5 * z2 - 64 * t5 * z - 640 * t4 * u6 * z + 2560 * t4 * u5 * z -
           3200 * t4 * u4 * z + 1600 * t4 * u3 * z - 320 * t4 * u1 * z - 720 * t4 * z2 +
           80 * t4 * z + 320 * t3 * u6 * z - 1280 * t3 * u5 * z + 1600 * t3 * u4 * z -
           800 * t3 * u3 * z + 160 * t3 * u1 * z + 120 * t3 * z2 - 40 * t3 * z + 48 * t2 * z2 -
           64 * t1 * u6 * z + 256 * t1 * u5 * z - 320 * t1 * u4 * z + 160 * t1 * u3 * z -
           32 * t1 * u1 * z - 24 * t1 * z2 + 8 * t1 * z - 64 * u12 + 512 * u11 - 1664 * u10 +
           2880 * u9 - 2880 * u8 + 1536 * u7 + 16 * u6 * z - 128 * u6 - 64 * u5 * z - 384 * u5 +
           80 * u4 * z + 240 * u4 - 40 * u3 * z - 40 * u3 - 16 * u2 + 8 * u1 * z + 8 * u1 +
           3 * z2 - 2 * z - 1;

    c.a6 = z * (-128 * t7 * z2 + 384 * t6 * z2 - 448 * t5 * z2 + 240 * t4 * z2 - 40 * t3 * z2 -
                16 * t2 * z2 + 8 * t1 * z2 + 64 * u12 - 512 * u11 + 1664 * u10 - 2880 * u9 +
                2880 * u8 - 1536 * u7 + 128 * u6 + 384 * u5 - 240 * u4 + 40 * u3 + 16 * u2 -
                8 * u1 - z2 + 1);

    return c;
}

bool matching_equation_holds(const Rat& t, const Rat& u, const Rat& z) {
    auto quintic = [](const Rat& x) -> Rat {
        Rat m = 2 * x - 1;
        Rat m2 = m * m;
        return m * m2 * m2 * (4 * x * x - 2 * x - 1);
    };
    return quintic(t) * z * z == quintic(u);
}

std::string hypothesis_failure(const Rat& t, const Rat& u, const Rat& z) {
    if (excluded_parameter(t)) return "t in {0, 1/2, 1}";
    if (excluded_parameter(u)) return "u in {0, 1/2, 1}";
    if (!matching_equation_holds(t, u, z)) return "matching equation violated";
    if (hlp_coefficients(t, u, z).a == 0) return "degenerate a = 0";
    return "";
}

bool hypotheses_ok(const Rat& t, const Rat& u, const Rat& z) {
    return hypothesis_failure(t, u, z).empty();
}

std::string VerifyFlags::first_failure() const {
    if (!quad_factor_divides) return "zx^2-1 does not divide the inner sextic";
    if (!et_isomorphic) return "E_t' not isomorphic to E_t";
    if (!eu_isomorphic) return "E_u' not isomorphic to E_u";
    if (!sextic_separable) return "sextic not separable";
    if (!bielliptic_eu) return "bielliptic identity for E_u' fails";
    if (!bielliptic_et) return "bielliptic identity for E_t' fails";
    return "";
}

namespace {

// p(x^2) as a polynomial in x
RatPoly substitute_square(const RatPoly& p) {
    if (p.is_zero()) return p;
    std::vector<Rat> c(2 * p.degree() + 1, Rat(0));
    for (int i = 0; i <= p.degree(); ++i) c[2 * i] = p.coeff(i);
    return RatPoly(std::move(c));
}

}  // namespace

VerifyFlags verify_record(const HLPCurveRecord& rec) {
    VerifyFlags f;
    const auto& c = rec.coeffs;

    RatPoly quad(std::vector<Rat>{Rat(-1), Rat(0), c.z});
    f.quad_factor_divides = RatPoly::divmod(rec.inner, quad).second.is_zero();

    f.et_isomorphic = is_isomorphic_over_Q(rec.et_prime, universal_curve(c.t).curve);
    f.eu_isomorphic = is_isomorphic_over_Q(rec.eu_prime, universal_curve(c.u).curve);

    f.sextic_separable =
        rec.inner.degree() == 6 && rec.inner.is_even() && discriminant_even_sextic(rec.inner) != 0;

    RatPoly et_cubic(std::vector<Rat>{c.a * c.a6, c.a * c.a4, c.a * c.a2, c.a * c.a0});
    RatPoly eu_cubic(std::vector<Rat>{c.a * c.a0, c.a * c.a2, c.a * c.a4, c.a * c.a6});
    f.bielliptic_eu = substitute_square(eu_cubic) == rec.sextic;
    // x^6 * cubic(1/x^2) reverses the even coefficient pattern
    f.bielliptic_et = substitute_square(et_cubic.reversed()) == rec.sextic;

    return f;
}

HLPCurveRecord build_curve(const Rat& t, const Rat& u, const Rat& z) {
    std::string fail = hypothesis_failure(t, u, z);
    if (!fail.empty()) throw HypothesisError(fail);

    HLPCurveRecord rec;
    rec.coeffs = hlp_coefficients(t, u, z);
    const auto& c = rec.coeffs;
    if (c.a6 == 0) throw HypothesisError("degenerate a6 = 0");

    rec.inner = RatPoly(std::vector<Rat>{c.a0, Rat(0), c.a2, Rat(0), c.a4, Rat(0), c.a6});
    rec.sextic = c.a * rec.inner;
    rec.et_prime = from_nonmonic_cubic(c.a * c.a0, c.a * c.a2, c.a * c.a4, c.a * c.a6).curve;
    rec.eu_prime = from_nonmonic_cubic(c.a * c.a6, c.a * c.a4, c.a * c.a2, c.a * c.a0).curve;
    rec.flags = verify_record(rec);
    return rec;
}

}  // namespace g2cl
