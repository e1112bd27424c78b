#include "g2cl/classgroup.hpp"

#include <chrono>

#include "g2cl/factor.hpp"

namespace g2cl {
namespace {

void check_disc(const Int& D) {
    if (D >= 0 || (D % 4 != 0 && ((D % 4) + 4) % 4 != 1))
        throw std::invalid_argument("discriminant must be negative and 0 or 1 mod 4");
}

}  // namespace

Int fundamental_discriminant(const Int& d) {
    if (d >= 0) throw std::invalid_argument("fundamental_discriminant: d must be negative");
    for (const auto& [p, e] : factorize(d).factors)
        if (e > 1) throw std::invalid_argument("fundamental_discriminant: d must be squarefree");
    Int m = ((d % 4) + 4) % 4;
    return m == 1 ? d : Int(4 * d);
}

bool is_reduced(const QuadForm& f) {
    Int ab = abs(f.b);
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

QuadForm identity_form(const Int& D) {
    check_disc(D);
    if (D % 4 == 0) return QuadForm{1, 0, -D / 4};
    return QuadForm{1, 1, (1 - D) / 4};
}

QuadForm inverse(const QuadForm& f) { return reduce(QuadForm{f.a, -f.b, f.c}); }

QuadForm reduce(QuadForm f) {
    const Int D = f.disc();
    for (;;) {
        if (f.b > f.a || f.b <= -f.a) {
            // normalize b into (-a, a]
            Int two_a = 2 * f.a;
            Int r = f.b % two_a;
            if (r > f.a) r -= two_a;
            if (r <= -f.a) r += two_a;
            f.b = r;
            f.c = (f.b * f.b - D) / (4 * f.a);
        }
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
}

namespace {

// Lattice {p + q sqrt(D)} spanned by integer rows (p, q); reduces to a
// Hermite basis [(x, 0), (y, g)].
struct Lattice {
    Int x = 0, y = 0, g = 0;

    void add_row(Int p, Int q) {
        if (q != 0) {
            if (g == 0) {
                y = std::move(p);
                g = std::move(q);
            } else {
                Int d, s, t;
                mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                           q.get_mpz_t());
                Int ny = s * y + t * p;
                Int px = (q / d) * y - (g / d) * p;  // row eliminated to (px, 0)
                y = ny;
                g = d;
                x = gcd(x, px);
            }
        } else {
            x = gcd(x, p);
        }
        if (g < 0) {
            g = -g;
            y = -y;
        }
        if (x != 0 && g != 0) y %= x;
    }
};

}  // namespace

QuadForm compose(const QuadForm& f1, const QuadForm& f2) {
    const Int D = f1.disc();
    if (D != f2.disc()) throw std::invalid_argument("compose: discriminant mismatch");
    // Ideal of (a,b,c): Z a + Z (b + sqrt(D))/2.  Doubled generators of the
    // product ideal, written as p + q sqrt(D):
    Lattice L;
    L.add_row(2 * f1.a * f2.a, Int(0));
    L.add_row(f1.a * f2.b, f1.a);
    L.add_row(f2.a * f1.b, f2.a);
    L.add_row((f1.b * f2.b + D) / 2, (f1.b + f2.b) / 2);
    // basis [(x, 0), (y, g)] of the doubled lattice; norm form over the
    // ideal norm x*g/2 gives the composed form
    QuadForm out{L.x / (2 * L.g), L.y / L.g, (L.y * L.y - D * L.g * L.g) / (2 * L.x * L.g)};
    return reduce(out);
}

QuadForm form_pow(const QuadForm& f, unsigned long n, const Int& D) {
    QuadForm acc = identity_form(D);
    QuadForm base = f;
    while (n) {
        if (n & 1) acc = compose(acc, base);
        n >>= 1;
        if (n) base = compose(base, base);
    }
    return acc;
}

std::vector<QuadForm> reduced_forms(const Int& D) {
    check_disc(D);
    std::vector<QuadForm> forms;
    Int absD = -D;
    for (Int b = (((D % 2) + 2) % 2); 3 * b * b <= absD; b += 2) {
        Int N = (b * b + absD) / 4;
        // divisors a of N with b <= a <= sqrt(N)
        FactoredInteger fact = factorize(N);
        std::vector<Int> divisors{Int(1)};
        for (const auto& [p, e] : fact.factors) {
            size_t count = divisors.size();
            Int pe(1);
            for (unsigned k = 1; k <= e; ++k) {
                pe *= p;
                for (size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pe);
            }
        }
        for (const Int& a : divisors) {
            if (a * a > N || (b == 0 ? a < 1 : a < b)) continue;
            Int c = N / a;
            QuadForm f{a, b, c};
            if (!is_reduced(f)) continue;
            if (gcd(gcd(f.a, f.b), f.c) != 1) continue;  // primitive only
            forms.push_back(f);
            if (b > 0 && a != b && a != c) forms.push_back(QuadForm{a, -b, c});
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

int five_rank(const Int& D) {
    std::vector<QuadForm> forms = reduced_forms(D);
    QuadForm id = identity_form(D);
    long count = 0;
    for (const QuadForm& f : forms)
        if (form_pow(f, 5, D) == id) ++count;
    int rank = 0;
    long c = count;
    while (c % 5 == 0) {
        c /= 5;
        ++rank;
    }
    if (c != 1) throw std::logic_error("five_rank: 5-torsion count is not a power of 5");
    return rank;
}

ClassGroupReport class_group_report(const Int& D) {
    auto start = std::chrono::steady_clock::now();
    ClassGroupReport rep;
    rep.D = D;
    std::vector<QuadForm> forms = reduced_forms(D);
    rep.h = static_cast<long>(forms.size());
    QuadForm id = identity_form(D);
    long count = 0;
    for (const QuadForm& f : forms)
        if (form_pow(f, 5, D) == id) ++count;
    rep.rank5 = 0;
    while (count % 5 == 0) {
        count /= 5;
        ++rep.rank5;
    }
    if (count != 1) throw std::logic_error("class_group_report: 5-torsion count not a power of 5");
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<HarvestRecord> harvest(const Genus2Curve& c, long n_lo, long n_hi,
                                   const Int& disc_cap) {
    std::vector<HarvestRecord> out;
    for (long n = n_lo; n <= n_hi; ++n) {
        Rat v = c.f(Rat(static_cast<long>(n)));
        if (v >= 0) continue;  // Weierstrass x-coordinates and real fields skipped
        Int d = squarefree_kernel(v);
        if (d >= -4) continue;  // extra-unit discriminants excluded
        Int D = fundamental_discriminant(d);
        if (-D > disc_cap) continue;
        HarvestRecord rec{n, v, d, class_group_report(D)};
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace g2cl
