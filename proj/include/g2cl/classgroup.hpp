#pragma once

#include <vector>

#include "g2cl/genus2.hpp"
#include "g2cl/rational.hpp"

namespace g2cl {

// Positive-definite integral binary quadratic form a x^2 + b xy + c y^2,
// a > 0, of negative discriminant b^2 - 4ac.
struct QuadForm {
    Int a, b, c;

    Int disc() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm&) const = default;
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// d if d = 1 mod 4 else 4d; rejects nonnegative or non-squarefree d.
Int fundamental_discriminant(const Int& d);

bool is_reduced(const QuadForm& f);
QuadForm reduce(QuadForm f);
QuadForm identity_form(const Int& D);
QuadForm inverse(const QuadForm& f);

// All reduced primitive forms of discriminant D < 0; length = h(D).
std::vector<QuadForm> reduced_forms(const Int& D);

// Gauss composition (through ideal-lattice multiplication), reduced output.
QuadForm compose(const QuadForm& f, const QuadForm& g);

QuadForm form_pow(const QuadForm& f, unsigned long n, const Int& D);

// log_5 of #{reduced g : g^5 = identity}; the count is checked to be a
// power of 5.
int five_rank(const Int& D);

struct ClassGroupReport {
    Int D;
    long h = 0;
    int rank5 = 0;
    double seconds = 0.0;
};

ClassGroupReport class_group_report(const Int& D);

struct HarvestRecord {
    long n;        // specialization point
    Rat value;     // f(n)
    Int d;         // squarefree kernel of f(n)
    ClassGroupReport report;
};

// Specializes x = n over [n_lo, n_hi], keeping imaginary quadratic kernels
// d < -4 whose fundamental discriminant is at most disc_cap in absolute
// value.
std::vector<HarvestRecord> harvest(const Genus2Curve& c, long n_lo, long n_hi,
                                   const Int& disc_cap);

}  // namespace g2cl
