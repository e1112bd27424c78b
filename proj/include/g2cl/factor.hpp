#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "g2cl/rational.hpp"

namespace g2cl {

// Sign and sorted prime-power decomposition of a nonzero integer.
struct FactoredInteger {
    int sign = 1;  // +1 or -1
    std::vector<std::pair<Int, unsigned>> factors;  // primes strictly increasing

    Int value() const;
};

bool is_probable_prime(const Int& n);

// Trial division below 10^6, then Pollard-Brent rho on what remains.
// Rejects n = 0.
FactoredInteger factorize(const Int& n);

// The unique squarefree integer s with n/s a perfect square; sign(s) = sign(n).
Int squarefree_kernel(const Int& n);

// Kernel of a nonzero rational, computed as kernel(num * den).
Int squarefree_kernel(const Rat& q);

// Nonnegative exact square root when q is a square in Q, else absent.
std::optional<Rat> rational_sqrt(const Rat& q);

// Exact k-th root (k >= 1).  For even k the input must be >= 0; the
// nonnegative root is returned.  For odd k negative inputs are fine.
std::optional<Rat> rational_kth_root(const Rat& q, unsigned k);

}  // namespace g2cl
