#pragma once

#include <string>

#include "g2cl/elliptic.hpp"
#include "g2cl/poly.hpp"

namespace g2cl {

// The five coefficients attached to a solution (t, u, z) of the
// discriminant-matching equation, evaluated exactly.
struct HLPCoefficients {
    Rat a, a0, a2, a4, a6;
    Rat t, u, z;
};

HLPCoefficients hlp_coefficients(const Rat& t, const Rat& u, const Rat& z);

// The discriminant-matching equation (2t-1)^5(4t^2-2t-1) z^2 =
// (2u-1)^5(4u^2-2u-1), checked exactly.
bool matching_equation_holds(const Rat& t, const Rat& u, const Rat& z);

// Equation holds, a != 0, and t, u outside {0, 1/2, 1}.
bool hypotheses_ok(const Rat& t, const Rat& u, const Rat& z);

// Empty string when all hypotheses hold, otherwise the first failure.
std::string hypothesis_failure(const Rat& t, const Rat& u, const Rat& z);

struct VerifyFlags {
    bool quad_factor_divides = false;   // z x^2 - 1 divides the inner sextic
    bool et_isomorphic = false;         // E_t' ~ E_t over Q
    bool eu_isomorphic = false;         // E_u' ~ E_u over Q
    bool sextic_separable = false;      // disc of the sextic nonzero
    bool bielliptic_eu = false;         // inner(x) == (cubic of E_u') at x^2
    bool bielliptic_et = false;         // x^6 * (cubic of E_t' at 1/x^2) == inner

    bool all() const {
        return quad_factor_divides && et_isomorphic && eu_isomorphic && sextic_separable &&
               bielliptic_eu && bielliptic_et;
    }
    std::string first_failure() const;
};

struct HLPCurveRecord {
    HLPCoefficients coeffs;
    RatPoly inner;   // a6 x^6 + a4 x^4 + a2 x^2 + a0
    RatPoly sextic;  // a * inner
    EllipticCurve et_prime, eu_prime;
    VerifyFlags flags;
};

class HypothesisError : public std::runtime_error {
  public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// Builds and fully verifies the record; throws HypothesisError naming the
// failed hypothesis, or std::runtime_error if a verification flag fails.
HLPCurveRecord build_curve(const Rat& t, const Rat& u, const Rat& z);

VerifyFlags verify_record(const HLPCurveRecord& rec);

}  // namespace g2cl
