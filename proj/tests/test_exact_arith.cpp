#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "g2cl/factor.hpp"
#include "g2cl/poly.hpp"
#include "helpers.hpp"

using namespace g2cl;
using g2cl::testing::random_long;
using g2cl::testing::random_rational;

TEST_CASE("make_rat canonicalizes and rejects zero denominators") {
    Rat q = make_rat(6, -4);
    CHECK(num(q) == -3);
    CHECK(den(q) == 2);
    CHECK(make_rat(0, 7) == 0);
    CHECK(den(make_rat(0, 7)) == 1);
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("height and string round trips") {
    CHECK(height(make_rat(-7, 5)) == 7);
    CHECK(height(make_rat(2, 9)) == 9);
    CHECK(to_string(make_rat(-7, 5)) == "-7/5");
    CHECK(to_string(make_rat(12, 4)) == "3");
    for (int i = 0; i < 1000; ++i) {
        Rat q = random_rational(1000, true);
        CHECK(parse_rat(to_string(q)) == q);
    }
    CHECK(parse_int("-123456789123456789123") == Int("-123456789123456789123"));
    CHECK_THROWS(parse_rat("7/"));
    CHECK_THROWS(parse_rat("abc"));
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_int("12x"));
}

namespace {

// independent factorization oracle: plain trial division
std::vector<std::pair<Int, unsigned>> trial_division_oracle(Int n) {
    std::vector<std::pair<Int, unsigned>> out;
    n = abs(n);
    for (Int p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) n /= p, ++e;
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

TEST_CASE("factorize examples") {
    auto f1 = factorize(Int(1));
    CHECK(f1.sign == 1);
    CHECK(f1.factors.empty());

    auto f12 = factorize(Int(12));
    CHECK(f12.sign == 1);
    CHECK(f12.factors == std::vector<std::pair<Int, unsigned>>{{2, 2}, {3, 1}});

    auto fm135 = factorize(Int(-135));
    CHECK(fm135.sign == -1);
    CHECK(fm135.factors == std::vector<std::pair<Int, unsigned>>{{3, 3}, {5, 1}});

    CHECK_THROWS(factorize(Int(0)));
}

TEST_CASE("factorize agrees with a trial-division oracle and reconstructs") {
    for (int i = 0; i < 1000; ++i) {
        Int n(random_long(1, 2000000));
        if (random_long(0, 1)) n = -n;
        auto f = factorize(n);
        CHECK(f.value() == n);
        CHECK(f.sign == (n < 0 ? -1 : 1));
        CHECK(f.factors == trial_division_oracle(n));
        for (size_t k = 0; k < f.factors.size(); ++k) {
            CHECK(is_probable_prime(f.factors[k].first));
            if (k) CHECK(f.factors[k - 1].first < f.factors[k].first);
        }
    }
}

TEST_CASE("factorize handles semiprimes past the trial-division bound") {
    Int p("1000003"), q("2000029");
    auto f = factorize(p * q);
    CHECK(f.factors == std::vector<std::pair<Int, unsigned>>{{p, 1}, {q, 1}});
    // coefficient-scale input: ~30 digits with a large square factor
    Int big = p * p * q * 1024;
    CHECK(factorize(big).value() == big);
    CHECK(squarefree_kernel(big) == q);
}

TEST_CASE("squarefree_kernel examples") {
    CHECK(squarefree_kernel(Rat(1)) == 1);
    CHECK(squarefree_kernel(make_rat(4, 9)) == 1);
    CHECK(squarefree_kernel(make_rat(-5, 27)) == -15);
    CHECK(squarefree_kernel(Int(-135)) == -15);
    CHECK_THROWS(squarefree_kernel(Rat(0)));
}

TEST_CASE("kernel square-quotient and square-invariance properties") {
    for (int i = 0; i < 1000; ++i) {
        Rat q = random_rational(300);
        Int s = squarefree_kernel(q);
        CHECK(sgn(s) == sgn(q));
        // q / kernel(q) is a perfect rational square
        auto root = rational_sqrt(q / Rat(s));
        REQUIRE(root.has_value());
        CHECK((*root) * (*root) == q / Rat(s));
        // multiplying by any square leaves the kernel unchanged
        Rat r = random_rational(300);
        CHECK(squarefree_kernel(q * r * r) == s);
    }
}

TEST_CASE("rational_sqrt examples and properties") {
    CHECK(rational_sqrt(Rat(625)) == Rat(25));
    CHECK(rational_sqrt(make_rat(4, 9)) == make_rat(2, 3));
    CHECK(!rational_sqrt(Rat(2)).has_value());
    CHECK(!rational_sqrt(Rat(-4)).has_value());
    CHECK(rational_sqrt(Rat(0)) == Rat(0));
    for (int i = 0; i < 1000; ++i) {
        Rat q = random_rational(500, true);
        auto r = rational_sqrt(q);
        if (r) CHECK((*r) * (*r) == q);
        if (q >= 0) {
            auto s = rational_sqrt(q * q);
            REQUIRE(s.has_value());
            CHECK(*s == abs(q));
        }
    }
}

TEST_CASE("rational_kth_root") {
    CHECK(rational_kth_root(make_rat(-27, 8), 3) == make_rat(-3, 2));
    CHECK(rational_kth_root(Rat(32), 5) == Rat(2));
    CHECK(!rational_kth_root(Rat(-4), 2).has_value());
    CHECK(!rational_kth_root(Rat(10), 3).has_value());
    for (int i = 0; i < 500; ++i) {
        Rat q = random_rational(40);
        for (unsigned k = 2; k <= 5; ++k) {
            Rat pw = q;
            for (unsigned j = 1; j < k; ++j) pw *= q;
            auto r = rational_kth_root(pw, k);
            if (k % 2 == 0 && q < 0) {
                REQUIRE(r.has_value());
                CHECK(*r == -q);
            } else {
                REQUIRE(r.has_value());
                CHECK(*r == q);
            }
        }
    }
}

TEST_CASE("rational_roots examples") {
    RatPoly x = RatPoly::x();
    auto r1 = rational_roots(x * x - RatPoly(Rat(1)));
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] == std::pair<Rat, int>{Rat(-1), 1});
    CHECK(r1[1] == std::pair<Rat, int>{Rat(1), 1});

    auto r2 = rational_roots(Rat(5) * x + RatPoly(Rat(7)));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].first == make_rat(-7, 5));

    CHECK(rational_roots(x * x + RatPoly(Rat(1))).empty());
    CHECK_THROWS(rational_roots(RatPoly{}));
}

TEST_CASE("rational_roots recovers constructed root sets exactly") {
    for (int i = 0; i < 400; ++i) {
        int k = static_cast<int>(random_long(1, 4));
        std::vector<Rat> roots;
        for (int j = 0; j < k; ++j) roots.push_back(random_rational(30, true));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        RatPoly p = random_rational(20) * RatPoly::from_roots(roots);
        if (random_long(0, 1)) {
            // tack on an irreducible quadratic so the degree exceeds the root count
            RatPoly x = RatPoly::x();
            p = p * (x * x + RatPoly(Rat(random_long(1, 9))));
        }
        auto found = rational_roots(p);
        REQUIRE(found.size() == roots.size());
        for (size_t j = 0; j < roots.size(); ++j) {
            CHECK(found[j].first == roots[j]);
            CHECK(found[j].second == 1);
            CHECK(p(found[j].first) == 0);
        }
    }
}
