#pragma once

#include <optional>

#include "g2cl/elliptic.hpp"

namespace g2cl {

// Member of the 1-parameter family of elliptic curves with a marked
// 10-torsion point.  Construction always re-verifies the marked point.
struct FamilyMember {
    Rat t;
    EllipticCurve curve;
    ECPoint torsion_point;
};

// t outside {0, 1/2, 1}; throws std::domain_error otherwise.
FamilyMember universal_curve(const Rat& t);

// (2t - 1)(4t^2 - 2t - 1): the curve discriminant modulo squares.
Rat delta10(const Rat& t);

// Nonnegative z with (2t-1)^5 (4t^2-2t-1) z^2 = (2u-1)^5 (4u^2-2u-1),
// when the ratio is a rational square; absent otherwise.
std::optional<Rat> solve_z(const Rat& t, const Rat& u);

bool excluded_parameter(const Rat& t);  // t in {0, 1/2, 1}

}  // namespace g2cl
