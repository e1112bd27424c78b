#include "g2cl/poly.hpp"

#include <algorithm>
#include <cassert>

namespace g2cl {

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::x() { return RatPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

RatPoly RatPoly::monomial(const Rat& coeff, size_t deg) {
    std::vector<Rat> c(deg + 1, Rat(0));
    c[deg] = coeff;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::from_roots(const std::vector<Rat>& roots) {
    RatPoly p(Rat(1));
    for (const Rat& r : roots) p = p * RatPoly(std::vector<Rat>{-r, Rat(1)});
    return p;
}

const Rat& RatPoly::lead() const {
    if (c_.empty()) throw std::invalid_argument("lead of zero polynomial");
    return c_.back();
}

Rat RatPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::reversed() const {
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return RatPoly(std::move(r));
}

bool RatPoly::is_even() const {
    for (size_t i = 1; i < c_.size(); i += 2)
        if (c_[i] != 0) return false;
    return true;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a) {
    std::vector<Rat> c(a.c_);
    for (Rat& x : c) x = -x;
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& p) {
    std::vector<Rat> c(p.c_);
    for (Rat& x : c) x *= s;
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    RatPoly r = a;
    if (a.degree() < b.degree()) return {RatPoly(), r};
    std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rat f = r.lead() / b.lead();
        q[shift] = f;
        std::vector<Rat> rc = r.c_;
        for (size_t i = 0; i < b.c_.size(); ++i) rc[i + shift] -= f * b.c_[i];
        rc.back() = 0;  // exact cancellation of the leading term
        r = RatPoly(std::move(rc));
    }
    return {RatPoly(std::move(q)), r};
}

IntPoly IntPoly::from(const RatPoly& p) {
    IntPoly out;
    if (p.is_zero()) {
        out.content = Rat(0);
        return out;
    }
    Int den_lcm = 1;
    for (const Rat& c : p.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<Int> ints(p.coeffs().size());
    Int g = 0;
    for (size_t i = 0; i < ints.size(); ++i) {
        ints[i] = p.coeffs()[i].get_num() * (den_lcm / p.coeffs()[i].get_den());
        g = gcd(g, ints[i]);
    }
    for (Int& v : ints) v /= g;
    out.coeffs = std::move(ints);
    out.content = make_rat(g, den_lcm);
    return out;
}

RatPoly IntPoly::to_rat() const {
    std::vector<Rat> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = content * Rat(coeffs[i]);
    return RatPoly(std::move(c));
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = RatPoly::divmod(a, b).second;
        // renormalize to primitive integer form to keep coefficients small
        if (!r.is_zero()) r = (Rat(1) / IntPoly::from(r).content) * r;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rat(1) / a.lead()) * a;
}

namespace {

// Bareiss fraction-free determinant; destroys its argument.
Int bareiss_det(std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Int int_resultant(const std::vector<Int>& p, const std::vector<Int>& q) {
    const int m = static_cast<int>(p.size()) - 1;
    const int n = static_cast<int>(q.size()) - 1;
    if (m == 0 && n == 0) return Int(1);
    if (m == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), p[0].get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), q[0].get_mpz_t(), m);
        return r;
    }
    const size_t size = m + n;
    std::vector<std::vector<Int>> s(size, std::vector<Int>(size, Int(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[row][row + (m - j)] = p[j];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s[n + row][row + (n - j)] = q[j];
    return bareiss_det(s);
}

}  // namespace

Rat resultant(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    IntPoly ip = IntPoly::from(p), iq = IntPoly::from(q);
    // Res(p, q) = cont(p)^{deg q} * cont(q)^{deg p} * Res(pp(p), pp(q)),
    // oriented so that res(x - a, x - b) = b - a
    Rat scale(1);
    if ((p.degree() & 1) && (q.degree() & 1)) scale = -scale;
    for (int i = 0; i < q.degree(); ++i) scale *= ip.content;
    for (int i = 0; i < p.degree(); ++i) scale *= iq.content;
    return scale * Rat(int_resultant(ip.coeffs, iq.coeffs));
}

Rat discriminant(const RatPoly& p) {
    const int n = p.degree();
    if (n < 2) throw std::invalid_argument("discriminant: degree must be >= 2");
    Rat r = resultant(p, p.derivative()) / p.lead();
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

Rat discriminant_even_sextic(const RatPoly& p) {
    if (p.degree() != 6 || !p.is_even())
        throw std::invalid_argument("discriminant_even_sextic: need an even sextic");
    RatPoly g(std::vector<Rat>{p.coeff(0), p.coeff(2), p.coeff(4), p.coeff(6)});
    Rat dg = discriminant(g);
    return Rat(-64) * p.coeff(0) * p.coeff(6) * dg * dg;
}

bool is_separable(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("is_separable: zero polynomial");
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_between: empty interval");
    if (lo == hi) return lo;
    if (lo <= 0 && hi >= 0) return Rat(0);
    if (hi < 0) return -simplest_between(-hi, -lo);
    // now 0 < lo < hi
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    if (lo == Rat(fl)) return lo;
    if (hi >= Rat(fl) + 1) return Rat(fl) + 1;
    Rat inner = simplest_between(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
    return Rat(fl) + Rat(1) / inner;
}

namespace {

int sgn_rat(const Rat& q) { return sgn(q); }

struct SturmChain {
    std::vector<RatPoly> seq;

    explicit SturmChain(const RatPoly& p) {
        seq.push_back(p);
        seq.push_back(p.derivative());
        while (!seq.back().is_zero()) {
            RatPoly r = -RatPoly::divmod(seq[seq.size() - 2], seq.back()).second;
            if (r.is_zero()) break;
            // divide by positive content to keep numbers small (sign preserved)
            IntPoly ir = IntPoly::from(r);
            r = (Rat(1) / ir.content) * r;
            seq.push_back(std::move(r));
        }
    }

    int variations(const Rat& x) const {
        int v = 0, last = 0;
        for (const RatPoly& f : seq) {
            int s = sgn_rat(f(x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }

    // number of distinct real roots in (a, b]
    int count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }
};

void roots_of_squarefree(const RatPoly& s, std::vector<Rat>& out);

// p nonzero with p(0) != 0; appends distinct rational roots of p (ignoring
// multiplicity) to out.
void distinct_roots(const RatPoly& p, std::vector<Rat>& out) {
    if (p.degree() < 1) return;
    if (p.degree() == 1) {
        out.push_back(-p.coeff(0) / p.coeff(1));
        return;
    }
    if (p.is_even()) {
        // p(x) = g(x^2): lift rational square roots of the roots of g
        std::vector<Rat> gc;
        for (int i = 0; i <= p.degree(); i += 2) gc.push_back(p.coeff(i));
        std::vector<Rat> wroots;
        distinct_roots(RatPoly(std::move(gc)), wroots);
        for (const Rat& w : wroots) {
            if (w <= 0) continue;
            if (auto s = rational_sqrt(w)) {
                out.push_back(*s);
                out.push_back(-*s);
            }
        }
        return;
    }
    RatPoly sf = RatPoly::divmod(p, poly_gcd(p, p.derivative())).first;
    roots_of_squarefree(sf, out);
}

void roots_of_squarefree(const RatPoly& s, std::vector<Rat>& out) {
    IntPoly ip = IntPoly::from(s);
    RatPoly S = RatPoly(std::vector<Rat>(ip.coeffs.begin(), ip.coeffs.end()));
    const Int L = abs(ip.coeffs.back());

    // Cauchy bound: all roots lie strictly inside (-B, B)
    Rat maxratio(0);
    for (int i = 0; i < S.degree(); ++i) {
        Rat r = abs(Rat(ip.coeffs[i])) / Rat(L);
        if (r > maxratio) maxratio = r;
    }
    Rat B = maxratio + 1;

    SturmChain chain(S);
    Rat eps = Rat(1) / Rat(Int(2 * L * L + 1));

    std::vector<std::pair<Rat, Rat>> stack{{-B, B}};
    std::vector<std::pair<Rat, Rat>> isolated;
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int n = chain.count(lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            isolated.emplace_back(lo, hi);
            continue;
        }
        // split at a non-root of S: a root landing exactly on the split
        // point would be excluded from both halves by the half-open
        // (a, b] Sturm counting convention
        Rat mid = (lo + hi) / 2;
        for (long j = 1; S(mid) == 0; ++j) mid = lo + Rat(j) / Rat(2 * j + 1) * (hi - lo);
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }

    for (auto& [lo, hi] : isolated) {
        // the single root lies in (lo, hi]; narrow by sign bisection
        bool found = false;
        if (S(hi) == 0) {
            out.push_back(hi);
            continue;
        }
        int slo = sgn_rat(S(lo));
        while (hi - lo > eps) {
            Rat mid = (lo + hi) / 2;
            int sm = sgn_rat(S(mid));
            if (sm == 0) {
                out.push_back(mid);
                found = true;
                break;
            }
            if (sm == slo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if (found) continue;
        Rat cand = simplest_between(lo, hi);
        if (S(cand) == 0) out.push_back(cand);
    }
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<std::pair<Rat, int>> result;
    RatPoly q = p;
    // strip x^k
    int zero_mult = 0;
    while (!q.is_zero() && q.coeff(0) == 0) {
        std::vector<Rat> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = RatPoly(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) result.emplace_back(Rat(0), zero_mult);

    std::vector<Rat> roots;
    distinct_roots(q, roots);
    for (const Rat& r : roots) {
        if (p(r) != 0) throw std::logic_error("rational_roots: candidate failed verification");
        int mult = 0;
        RatPoly rem = q;
        RatPoly lin(std::vector<Rat>{-r, Rat(1)});
        for (;;) {
            auto [quo, rest] = RatPoly::divmod(rem, lin);
            if (!rest.is_zero()) break;
            rem = quo;
            ++mult;
            if (rem.is_zero()) break;
        }
        result.emplace_back(r, mult);
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

}  // namespace g2cl
