#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2cl/poly.hpp"

namespace g2cl {

// Hyperelliptic model y^2 = f(x) with deg f in {5, 6} and f separable.
struct Genus2Curve {
    RatPoly f;
};

Genus2Curve make_genus2(RatPoly f);

// Weighted-projective invariant tuple of the associated binary sextic
// (degree-5 models are homogenized with a root at infinity).  Weights
// (2, 4, 6, 10); I10 is the discriminant of the binary form.
struct IgusaClass {
    Rat I2, I4, I6, I10;
};

struct WeierstrassPoints {
    std::vector<Rat> finite;  // rational roots of f, ascending
    bool at_infinity = false;
};

WeierstrassPoints weierstrass_points(const Genus2Curve& c);

// Degree-5 model exposing `root` at infinity: x -> root + 1/x, y -> y/x^3,
// then square-scaled to integral coefficients.  The result is verified to
// stay in the same geometric class.
Genus2Curve to_odd_model(const Genus2Curve& c, const Rat& root);

IgusaClass igusa_clebsch(const Genus2Curve& c);

// True iff the tuples agree in weighted projective space over the algebraic
// closure (pairwise cross-product test anchored at I10 != 0).
bool same_geometric_class(const IgusaClass& A, const IgusaClass& B);

// Class-invariant hash key: the absolute invariants I2^5/I10, I4^5/I10^2,
// I6^5/I10^3 serialized.  Equal key <=> same geometric class.
std::string normalized_key(const IgusaClass& ic);

// Divides out the largest square rational factor: returns s * primitive(f)
// with s the squarefree kernel of the content.  Canonical representative of
// the models {q^2 f : q rational}.
RatPoly square_normalize(const RatPoly& f);

// (cx + d)^6 f((ax + b)/(cx + d)), f treated as a binary sextic.
RatPoly sextic_substitution(const RatPoly& f, const Rat& a, const Rat& b, const Rat& c,
                            const Rat& d);

}  // namespace g2cl
