#include "g2cl/genus2.hpp"

#include <algorithm>

#include "g2cl/factor.hpp"

namespace g2cl {
namespace {

// Binary form of formal degree deg: sum c[i] x^i y^(deg-i).  The formal
// degree is kept even when leading coefficients vanish, which is what makes
// the root-at-infinity handling of degree-5 models uniform.
struct BinForm {
    int deg = 0;
    std::vector<Rat> c;  // size deg + 1

    static BinForm from_poly(const RatPoly& p, int formal_deg) {
        BinForm f;
        f.deg = formal_deg;
        f.c.assign(formal_deg + 1, Rat(0));
        for (int i = 0; i <= p.degree(); ++i) f.c[i] = p.coeff(i);
        return f;
    }

    BinForm dx() const {
        BinForm d;
        d.deg = deg - 1;
        d.c.assign(deg, Rat(0));
        for (int i = 1; i <= deg; ++i) d.c[i - 1] = i * c[i];
        return d;
    }

    BinForm dy() const {
        BinForm d;
        d.deg = deg - 1;
        d.c.assign(deg, Rat(0));
        for (int i = 0; i < deg; ++i) d.c[i] = (deg - i) * c[i];
        return d;
    }
};

BinForm operator*(const BinForm& a, const BinForm& b) {
    BinForm p;
    p.deg = a.deg + b.deg;
    p.c.assign(p.deg + 1, Rat(0));
    for (int i = 0; i <= a.deg; ++i)
        for (int j = 0; j <= b.deg; ++j) p.c[i + j] += a.c[i] * b.c[j];
    return p;
}

BinForm operator+(const BinForm& a, const BinForm& b) {
    BinForm s = a;
    for (int i = 0; i <= b.deg; ++i) s.c[i] += b.c[i];
    return s;
}

BinForm scale(const Rat& s, const BinForm& f) {
    BinForm g = f;
    for (Rat& x : g.c) x *= s;
    return g;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// k-th transvectant of binary forms of degrees m, n.
BinForm transvectant(const BinForm& f, const BinForm& g, int k) {
    const int m = f.deg, n = g.deg;
    Rat pref = make_rat(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n));
    BinForm acc;
    acc.deg = m + n - 2 * k;
    acc.c.assign(acc.deg + 1, Rat(0));
    for (int j = 0; j <= k; ++j) {
        BinForm df = f, dg = g;
        for (int s = 0; s < k - j; ++s) df = df.dx();
        for (int s = 0; s < j; ++s) df = df.dy();
        for (int s = 0; s < j; ++s) dg = dg.dx();
        for (int s = 0; s < k - j; ++s) dg = dg.dy();
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        acc = acc + scale(sign * Rat(binom(k, j)), df * dg);
    }
    return scale(pref, acc);
}

Rat binary_discriminant(const RatPoly& f) {
    if (f.degree() == 6) return discriminant(f);
    // root at infinity: disc of the binary sextic with vanishing leading
    // coefficient degenerates to lc^2 * disc of the quintic
    return f.lead() * f.lead() * discriminant(f);
}

}  // namespace

Genus2Curve make_genus2(RatPoly f) {
    int d = f.degree();
    if (d != 5 && d != 6) throw std::invalid_argument("make_genus2: degree must be 5 or 6");
    if (!is_separable(f)) throw std::invalid_argument("make_genus2: f has a repeated root");
    return Genus2Curve{std::move(f)};
}

WeierstrassPoints weierstrass_points(const Genus2Curve& c) {
    WeierstrassPoints w;
    for (const auto& [root, mult] : rational_roots(c.f)) w.finite.push_back(root);
    w.at_infinity = (c.f.degree() == 5);
    return w;
}

RatPoly square_normalize(const RatPoly& f) {
    if (f.is_zero()) return f;
    IntPoly ip = IntPoly::from(f);
    Rat s(squarefree_kernel(ip.content));
    std::vector<Rat> c(ip.coeffs.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = s * Rat(ip.coeffs[i]);
    return RatPoly(std::move(c));
}

Genus2Curve to_odd_model(const Genus2Curve& c, const Rat& root) {
    if (c.f(root) != 0) throw std::invalid_argument("to_odd_model: input is not a root of f");
    // g(x) = x^6 f(root + 1/x); with b_i the Taylor coefficients of f at
    // root, g = sum b_i x^(6-i) and b_0 = 0
    RatPoly shifted = c.f;
    {
        // Taylor shift via substitution x -> x + root
        RatPoly acc(Rat(0)), pow(Rat(1));
        RatPoly lin(std::vector<Rat>{root, Rat(1)});
        for (int i = 0; i <= c.f.degree(); ++i) {
            acc = acc + c.f.coeff(i) * pow;
            pow = pow * lin;
        }
        shifted = acc;
    }
    std::vector<Rat> g(7, Rat(0));
    for (int i = 0; i <= shifted.degree(); ++i) g[6 - i] = shifted.coeff(i);
    Genus2Curve odd = make_genus2(square_normalize(RatPoly(std::move(g))));
    if (!same_geometric_class(igusa_clebsch(c), igusa_clebsch(odd)))
        throw std::logic_error("to_odd_model: invariant mismatch");
    return odd;
}

IgusaClass igusa_clebsch(const Genus2Curve& curve) {
    BinForm f = BinForm::from_poly(curve.f, 6);
    BinForm i = transvectant(f, f, 4);
    BinForm delta = transvectant(i, i, 2);
    Rat A = transvectant(f, f, 6).c[0];
    Rat B = transvectant(i, i, 4).c[0];
    Rat C = transvectant(i, delta, 4).c[0];

    IgusaClass ic;
    ic.I2 = Rat(-120) * A;
    ic.I4 = Rat(-720) * A * A + Rat(6750) * B;
    ic.I6 = Rat(8640) * A * A * A - Rat(108000) * A * B + Rat(202500) * C;
    ic.I10 = binary_discriminant(curve.f);
    return ic;
}

bool same_geometric_class(const IgusaClass& A, const IgusaClass& B) {
    // Weighted equivalence B_i = lambda^{w_i} A_i with lambda over the
    // closure.  Writing s = lambda^2, the exponents halve to (1, 2, 3, 5)
    // and the test becomes exact pairwise cross-multiplication anchored at
    // I10 != 0.
    struct Coord {
        Rat a, b;
        int v;
    };
    std::vector<Coord> coords{{A.I2, B.I2, 1}, {A.I4, B.I4, 2}, {A.I6, B.I6, 3},
                              {A.I10, B.I10, 5}};
    std::vector<Coord> nz;
    for (const Coord& c : coords) {
        if ((c.a == 0) != (c.b == 0)) return false;
        if (c.a != 0) nz.push_back(c);
    }
    auto pw = [](const Rat& x, int e) {
        Rat r(1);
        for (int i = 0; i < e; ++i) r *= x;
        return r;
    };
    for (size_t i = 0; i < nz.size(); ++i)
        for (size_t j = i + 1; j < nz.size(); ++j)
            if (pw(nz[i].a, nz[j].v) * pw(nz[j].b, nz[i].v) !=
                pw(nz[j].a, nz[i].v) * pw(nz[i].b, nz[j].v))
                return false;
    return true;
}

std::string normalized_key(const IgusaClass& ic) {
    auto p5 = [](const Rat& x) -> Rat { return x * x * x * x * x; };
    Rat j1 = p5(ic.I2) / ic.I10;
    Rat j2 = p5(ic.I4) / (ic.I10 * ic.I10);
    Rat j3 = p5(ic.I6) / (ic.I10 * ic.I10 * ic.I10);
    return to_string(j1) + "|" + to_string(j2) + "|" + to_string(j3);
}

RatPoly sextic_substitution(const RatPoly& f, const Rat& a, const Rat& b, const Rat& c,
                            const Rat& d) {
    RatPoly num(std::vector<Rat>{b, a});   // ax + b
    RatPoly den(std::vector<Rat>{d, c});   // cx + d
    RatPoly acc;
    for (int i = 0; i <= 6; ++i) {
        RatPoly term(f.coeff(i));
        for (int k = 0; k < i; ++k) term = term * num;
        for (int k = i; k < 6; ++k) term = term * den;
        acc = acc + term;
    }
    return acc;
}

}  // namespace g2cl
