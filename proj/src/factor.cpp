#include "g2cl/factor.hpp"

#include <algorithm>
#include <map>

namespace g2cl {
namespace {

constexpr unsigned long kTrialBound = 1000000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> sieve(kTrialBound + 1, true);
        std::vector<unsigned long> ps;
        for (unsigned long p = 2; p <= kTrialBound; ++p) {
            if (!sieve[p]) continue;
            ps.push_back(p);
            for (unsigned long q = p * p; q <= kTrialBound; q += p) sieve[q] = false;
        }
        return ps;
    }();
    return primes;
}

// Pollard-Brent rho; n must be odd, composite, not a prime power guard is
// handled by the caller loop.
Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xb5297a4dULL);
    for (;;) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 2) + 1;
        Int x = y, ys = y, q = 1, g = 1;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(Int(x - y)) % n;
                }
                g = gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(Int(x - ys)), n);
            }
        }
        if (g != n) return g;
        // cycle degenerated; retry with fresh parameters
    }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(Int(n / d), out);
}

}  // namespace

Int FactoredInteger::value() const {
    Int v = sign;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

FactoredInteger factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
    FactoredInteger out;
    out.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);
    std::map<Int, unsigned> found;
    if (m > 1 && !is_probable_prime(m)) {
        for (unsigned long p : small_primes()) {
            if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                unsigned e = 0;
                do {
                    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                    ++e;
                } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
                found[Int(p)] = e;
                if (m == 1) break;
                if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0 || is_probable_prime(m)) break;
            }
        }
    }
    factor_rec(m, found);
    out.factors.assign(found.begin(), found.end());
    return out;
}

Int squarefree_kernel(const Int& n) {
    if (n == 0) throw std::invalid_argument("squarefree_kernel: zero input");
    FactoredInteger f = factorize(n);
    Int s = f.sign;
    for (const auto& [p, e] : f.factors)
        if (e % 2 == 1) s *= p;
    return s;
}

Int squarefree_kernel(const Rat& q) {
    if (q == 0) throw std::invalid_argument("squarefree_kernel: zero input");
    return squarefree_kernel(Int(q.get_num() * q.get_den()));
}

std::optional<Rat> rational_sqrt(const Rat& q) { return rational_kth_root(q, 2); }

std::optional<Rat> rational_kth_root(const Rat& q, unsigned k) {
    if (k == 0) throw std::invalid_argument("rational_kth_root: k must be >= 1");
    if (k == 1) return q;
    if (q == 0) return Rat(0);
    if (q < 0 && k % 2 == 0) return std::nullopt;
    Int n = abs(q.get_num()), d = q.get_den();
    Int rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return std::nullopt;
    if (q < 0) rn = -rn;
    return make_rat(rn, rd);
}

}  // namespace g2cl
