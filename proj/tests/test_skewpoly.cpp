#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skewcode/skewpoly.hpp"

#include <random>
#include <string>
#include <vector>

using namespace skewcode;

namespace {

SkewPoly SP(const std::shared_ptr<const Field>& f, uint32_t t, const std::string& csv) {
    return SkewPoly::parse(f, t, csv);
}

// Ascending coefficients following a repeating block, truncated to `count`.
SkewPoly periodic(const std::shared_ptr<const Field>& f, uint32_t t,
                  const std::vector<std::string>& block, size_t count) {
    std::vector<uint16_t> vals(count);
    for (size_t i = 0; i < count; ++i) vals[i] = f->element(block[i % block.size()]).value();
    return {f, t, std::move(vals)};
}

SkewPoly random_poly(const std::shared_ptr<const Field>& f, uint32_t t, int max_deg,
                     std::mt19937& rng) {
    std::uniform_int_distribution<int> degd(0, max_deg);
    std::uniform_int_distribution<uint32_t> vd(0, f->q() - 1);
    std::vector<uint16_t> vals(size_t(degd(rng)) + 1);
    for (auto& v : vals) v = uint16_t(vd(rng));
    return {f, t, std::move(vals)};
}

}  // namespace

TEST_CASE("multiplication twists coefficients moved across x") {
    auto F = Field::make_q(9);
    auto w = F->generator();
    auto x = SkewPoly::monomial(F, 1, F->one(), 1);

    // x w = TH(w) x = w^3 x, while w x stays w x.
    CHECK(x * SkewPoly::constant(F, 1, w) == SP(F, 1, "0,w^3"));
    CHECK(SkewPoly::constant(F, 1, w) * x == SP(F, 1, "0,w"));
    // (w x)(w x) = w TH(w) x^2 = w^4 x^2 = 2 x^2.
    auto wx = SP(F, 1, "0,w");
    CHECK(wx * wx == SP(F, 1, "0,0,2"));
    // Right scalar twists per degree, left scalar never does.
    CHECK(x * w == SP(F, 1, "0,w^3"));
    CHECK(w * x == SP(F, 1, "0,w"));
    // General rule x^k c = TH^k(c) x^k.
    for (uint32_t k = 0; k < 5; ++k) {
        auto xk = SkewPoly::monomial(F, 1, F->one(), k);
        auto lhs = xk * SkewPoly::constant(F, 1, w);
        auto rhs = SkewPoly::monomial(F, 1, F->frobenius(w, k), k);
        CHECK(lhs == rhs);
    }
    CHECK(SP(F, 1, "1,1").theta_order() == 2);
    CHECK(SP(F, 0, "1,1").theta_order() == 1);
    CHECK(SP(F, 2, "1,1").theta_exp() == 0);  // exponent reduced mod m
}

TEST_CASE("dagger is the twisted reversal, reciprocal the plain one") {
    auto F = Field::make_q(9);
    // h = 2 + w x: dagger = w + TH(2) x = w + 2 x.
    CHECK(SP(F, 1, "2,w").dagger() == SP(F, 1, "w,2"));
    CHECK(SP(F, 1, "2,w").reciprocal() == SP(F, 1, "w,2"));
    // f = w + x: the two reversals differ, TH(w) = w^3.
    CHECK(SP(F, 1, "w,1").reciprocal() == SP(F, 1, "1,w"));
    CHECK(SP(F, 1, "w,1").dagger() == SP(F, 1, "1,w^3"));
    // Zero constant term: the twisted reversal drops degree.
    CHECK(SP(F, 1, "0,w^3,w^7").dagger() == SP(F, 1, "w^7,w"));
    CHECK(SkewPoly(F, 1).dagger().is_zero());

    // With the identity twist both reversals agree.
    std::mt19937 rng(20260817);
    for (int i = 0; i < 50; ++i) {
        auto p = random_poly(F, 0, 7, rng);
        CHECK(p.dagger() == p.reciprocal());
    }
}

TEST_CASE("quotients match the known twisted factorizations over GF(9)") {
    auto F = Field::make_q(9);
    const uint32_t t = 1;

    // x^18 - 1 = (x^15 + w^5x^14 + x^13 + 2x^12 + x^9 + w^5x^8 + x^7 + 2x^6
    //             + x^3 + w^5x^2 + x + 2)(x^3 + w^3x^2 + x + 1).
    auto f4 = SP(F, t, "1,1,w^3,1");
    auto h4 = periodic(F, t, {"2", "1", "w^5", "1", "0", "0"}, 16);
    auto lhs18 = SkewPoly::x_pow_minus_one(F, t, 18);
    CHECK(h4 * f4 == lhs18);
    auto dm18 = right_divmod(lhs18, f4);
    CHECK(dm18.rem.is_zero());
    CHECK(dm18.quot == h4);
    CHECK(right_divides(f4, lhs18));

    // x^36 - 1 = (x^35 + w^2x^34 + ... + x + w^2)(x + w^2): the quotient
    // alternates w^2 at even and 1 at odd degrees.
    auto g14 = SP(F, t, "w^2,1");
    auto halt = periodic(F, t, {"w^2", "1"}, 36);
    auto lhs36 = SkewPoly::x_pow_minus_one(F, t, 36);
    CHECK(halt * g14 == lhs36);
    auto dmalt = right_divmod(lhs36, g14);
    CHECK(dmalt.rem.is_zero());
    CHECK(dmalt.quot == halt);

    // Non-monic right divisor w^2x^2 + x + 1; quotient repeats a 12-block.
    auto g2 = SP(F, t, "1,1,w^2");
    auto h2 = periodic(F, t, {"2", "1", "w", "1", "w^2", "0", "1", "2", "w^5", "2", "w^6", "0"}, 35);
    CHECK(h2 * g2 == lhs36);
    auto dm2 = right_divmod(lhs36, g2);
    CHECK(dm2.rem.is_zero());
    CHECK(dm2.quot == h2);

    // w^6x^2 + x + 1, the other known degree-2 right divisor of x^36 - 1.
    auto g1 = SP(F, t, "1,1,w^6");
    auto h1 = periodic(F, t, {"2", "1", "w^3", "1", "w^6", "0", "1", "2", "w^7", "2", "w^2", "0"}, 35);
    CHECK(h1 * g1 == lhs36);
    CHECK(right_divmod(lhs36, g1).quot == h1);

    // x^7 - 1 is not right-divisible by either degree-3 twisted factor of
    // x^18 - 1's companion cubics; spot the remainder is nonzero for f4.
    CHECK_FALSE(right_divides(f4, SkewPoly::x_pow_minus_one(F, t, 7)));
}

TEST_CASE("dagger products land in the left ideal of x^36 - 1") {
    auto F = Field::make_q(9);
    const uint32_t t = 1;
    auto lhs36 = SkewPoly::x_pow_minus_one(F, t, 36);

    auto h1 = periodic(F, t, {"2", "1", "w^3", "1", "w^6", "0", "1", "2", "w^7", "2", "w^2", "0"}, 35);
    auto h1d = periodic(F, t, {"w^2", "2", "w^7", "2", "1", "0", "w^6", "1", "w^3", "1", "2", "0"}, 35);
    CHECK(h1.dagger() == h1d);
    auto s1 = SP(F, t,
                 "w^2,w^3,w^5,w^6,w^3,w^2,1,1,1,w^6,w^3,w^2,w^5,w,w^2,0,0,0,"
                 "w^6,w^7,w,w^2,w^7,w^6,2,2,2,w^2,w^7,w^6,w,w^5,w^6");
    CHECK(h1d * h1 == s1 * lhs36);
    auto dm1 = right_divmod(h1d * h1, lhs36);
    CHECK(dm1.rem.is_zero());
    CHECK(dm1.quot == s1);

    auto h2 = periodic(F, t, {"2", "1", "w", "1", "w^2", "0", "1", "2", "w^5", "2", "w^6", "0"}, 35);
    auto h2d = periodic(F, t, {"w^6", "2", "w^5", "2", "1", "0", "w^2", "1", "w", "1", "2", "0"}, 35);
    CHECK(h2.dagger() == h2d);
    auto s2 = SP(F, t,
                 "w^6,w,w^7,w^2,w,w^6,1,1,1,w^2,w,w^6,w^7,w^3,w^6,0,0,0,"
                 "w^2,w^5,w^3,w^6,w^5,w^2,2,2,2,w^6,w^5,w^2,w^3,w^7,w^2");
    CHECK(h2d * h2 == s2 * lhs36);
    auto dm2 = right_divmod(h2d * h2, lhs36);
    CHECK(dm2.rem.is_zero());
    CHECK(dm2.quot == s2);
}

TEST_CASE("plain operations recover the commutative factorization of x^49 - 1") {
    auto F = Field::make_q(9);
    const uint32_t t = 1;  // twist tag is ignored by plain_* operations

    auto lin = SP(F, t, "2,1");                      // x + 2
    auto c1 = SP(F, t, "2,w^7,w,1");                 // x^3 + wx^2 + w^7x + 2
    auto c2 = SP(F, t, "2,w^5,w^3,1");               // x^3 + w^3x^2 + w^5x + 2
    std::vector<uint16_t> t1v(22, 0), t2v(22, 0);
    t1v[0] = F->element("2").value();
    t1v[7] = F->element("w^7").value();
    t1v[14] = F->element("w").value();
    t1v[21] = 1;
    t2v[0] = F->element("2").value();
    t2v[7] = F->element("w^5").value();
    t2v[14] = F->element("w^3").value();
    t2v[21] = 1;
    SkewPoly t1(F, t, t1v), t2(F, t, t2v);

    auto prod = plain_mul(plain_mul(plain_mul(plain_mul(lin, c1), c2), t1), t2);
    auto x49 = SkewPoly::x_pow_minus_one(F, t, 49);
    CHECK(prod == x49);

    // The reciprocal of one cubic is (up to a unit) the other cubic, so the
    // product of a cubic with its reciprocal divides x^49 - 1.
    CHECK(c2.reciprocal().monic() == c1);
    CHECK(plain_divmod(x49, plain_mul(c2, c2.reciprocal())).rem.is_zero());

    // gcd of two multiples sharing c2 recovers c2.
    CHECK(plain_gcd(plain_mul(c2, c1), plain_mul(c2, t1)) == c2);
    CHECK(plain_gcd(SkewPoly(F, t), SkewPoly(F, t)).is_zero());

    // Roots of an irreducible cubic live in GF(9^3): x^(9^3) = x mod c1.
    auto x = SkewPoly::monomial(F, t, F->one(), 1);
    CHECK(plain_powmod(x, 729, c1) == x);
    CHECK(plain_powmod(x, 9, c1) != x);
    CHECK(plain_powmod(x, 81, lin) == SP(F, t, "1"));  // x = -2 = 1 mod (x+2)
}

TEST_CASE("compact strings read as printed") {
    auto f9 = Field::make_q(9);
    auto f25 = Field::make_q(25);
    auto f49 = Field::make_q(49);

    struct Case {
        std::shared_ptr<const Field> F;
        const char* text;
        const char* expect;  // ascending canonical form
        bool warn;
    };
    const std::vector<Case> cases = {
        {f9, "1ww^72", "2,w^7,w,1", false},
        {f9, "w^61", "1,w^6", false},
        {f9, "1w^2", "w^2,1", false},
        {f9, "1w^3w^52", "2,w^5,w^3,1", false},
        {f9, "w^611", "1,1,w^6", false},
        {f9, "w^211", "1,1,w^2", false},
        {f9, "1w^31", "1,w^3,1", false},
        {f9, "w^7w^30", "0,w^3,w^7", false},
        {f9, "12021", "1,2,0,2,1", false},
        {f9, "w1", "1,w", false},
        {f9, "w^5w^31", "1,w^3,w^5", false},
        {f25, "1ww^174", "4,w^17,w,1", false},
        {f25, "w^150w^3", "w^3,0,w^15", false},
        {f25, "w^81", "1,w^8", false},
        {f25, "131", "1,3,1", false},
        {f25, "w^91", "1,w^9", false},
        {f25, "1w^211", "1,w^21,1", true},
        {f49, "1ww^96", "6,w^9,w,1", false},
        {f49, "w^2151", "1,5,w^21", true},
        {f49, "w^3941", "1,4,w^39", false},
    };
    for (const auto& c : cases) {
        auto r = parse_compact(c.F, 1, c.text);
        CHECK_MESSAGE(r.poly.canonical_str() == c.expect,
                      "\"" << c.text << "\" read as " << r.poly.canonical_str());
        CHECK_MESSAGE(r.warnings.size() == (c.warn ? 1u : 0u),
                      "\"" << c.text << "\" produced " << r.warnings.size() << " warnings");
    }

    // The two ambiguous strings choose the longer exponent.
    auto amb = parse_compact(f25, 1, "1w^211");
    REQUIRE(amb.warnings.size() == 1);
    CHECK(amb.warnings[0].find("2 readings") != std::string::npos);
    CHECK(parse_compact(f49, 1, "w^2151").poly.degree() == 2);

    // Whitespace is ignored; invalid content is rejected.
    CHECK(parse_compact(f9, 1, " 1 2 ").poly == SP(f9, 1, "2,1"));
    CHECK_THROWS_AS(parse_compact(f9, 1, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_compact(f9, 1, "3"), std::invalid_argument);    // digit >= p
    CHECK_THROWS_AS(parse_compact(f9, 1, "w^"), std::invalid_argument);   // missing exponent
    CHECK_THROWS_AS(parse_compact(f9, 1, "w^13"), std::invalid_argument); // forced digit 3
    CHECK_THROWS_AS(parse_compact(f9, 1, "x+1"), std::invalid_argument);
    // A compact leading zero trims away.
    CHECK(parse_compact(f9, 1, "0w1").poly == SP(f9, 1, "1,w"));
}

TEST_CASE("either text syntax parses with clash warnings") {
    auto f9 = Field::make_q(9);
    auto f25 = Field::make_q(25);

    CHECK(parse_any(f9, 1, "2,w^5,w^3,1").poly == SP(f9, 1, "2,w^5,w^3,1"));
    CHECK(parse_any(f9, 1, "1w^3w^52").poly == SP(f9, 1, "2,w^5,w^3,1"));
    // Lone canonical tokens are constants under both readings.
    CHECK(parse_any(f9, 1, "w^5").poly == SP(f9, 1, "w^5"));
    CHECK(parse_any(f9, 1, "2").poly == SP(f9, 1, "2"));
    // Not compact (digit over p), but a fine element token.
    CHECK(parse_any(f9, 1, "5").poly == SP(f9, 1, "2"));
    CHECK(parse_any(f9, 1, "w^9").poly == SP(f9, 1, "w"));
    // Clash: compact w^3x + 1 vs element w^31 = w^7; compact wins, warned.
    auto clash = parse_any(f25, 1, "w^31");
    CHECK(clash.poly == SP(f25, 1, "1,w^3"));
    REQUIRE(clash.warnings.size() == 1);
    CHECK(clash.warnings[0].find("single element") != std::string::npos);
    CHECK_THROWS_AS(parse_any(f9, 1, "x+1"), std::invalid_argument);

    // Canonical round trip.
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        auto p = random_poly(f25, 1, 6, rng);
        CHECK(SkewPoly::parse(f25, 1, p.canonical_str()) == p);
    }
}

TEST_CASE("right division reconstructs and respects degree bounds") {
    std::mt19937 rng(20260817);
    struct Ring {
        uint64_t q;
        uint32_t t;
    };
    for (auto [q, t] : {Ring{9, 1}, Ring{25, 1}, Ring{49, 1}, Ring{81, 2}, Ring{9, 0}}) {
        auto F = Field::make_q(q);
        for (int i = 0; i < 250; ++i) {
            auto a = random_poly(F, t, 9, rng);
            SkewPoly b = random_poly(F, t, 4, rng);
            if (b.is_zero()) b = SkewPoly::constant(F, t, F->one());
            auto dm = right_divmod(a, b);
            CHECK(dm.quot * b + dm.rem == a);
            CHECK(dm.rem.degree() < b.degree());
            // Left multiples divide exactly, also after normalizing b.
            auto prod = dm.quot * b;
            CHECK(right_divides(b, prod));
            CHECK(right_divides(b.monic(), prod));
            // Plain division agrees with the twist-free ring.
            if (t == 0) {
                auto pm = plain_divmod(a, b);
                CHECK(pm.quot == dm.quot);
                CHECK(pm.rem == dm.rem);
            }
        }
    }
}

TEST_CASE("ring axioms hold on random inputs") {
    std::mt19937 rng(99);
    struct Ring {
        uint64_t q;
        uint32_t t;
    };
    for (auto [q, t] : {Ring{9, 1}, Ring{25, 1}, Ring{729, 2}}) {
        auto F = Field::make_q(q);
        for (int i = 0; i < 150; ++i) {
            auto a = random_poly(F, t, 5, rng);
            auto b = random_poly(F, t, 5, rng);
            auto c = random_poly(F, t, 5, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a + b == b + a);
            CHECK(a - a == SkewPoly(F, t));
            CHECK(a.shifted(3) == SkewPoly::monomial(F, t, F->one(), 3) * a);
        }
        // Twist-free multiplication is the plain one and commutes.
        for (int i = 0; i < 100; ++i) {
            auto a = random_poly(F, 0, 6, rng);
            auto b = random_poly(F, 0, 6, rng);
            CHECK(a * b == plain_mul(a, b));
            CHECK(a * b == b * a);
            CHECK(plain_mul(a, b) == plain_mul(b, a));
        }
    }
}

TEST_CASE("operations reject mixed rings and degenerate inputs") {
    auto f9 = Field::make_q(9);
    auto f25 = Field::make_q(25);
    auto a = SP(f9, 1, "1,1");
    auto b = SP(f25, 1, "1,1");
    auto c = SP(f9, 0, "1,1");

    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_THROWS_AS((void)(a == b), std::invalid_argument);
    CHECK(a != c);  // same field, different twist: comparable, unequal
    CHECK_THROWS_AS(right_divmod(a, c), std::invalid_argument);
    CHECK_THROWS_AS(right_divmod(a, SkewPoly(f9, 1)), std::invalid_argument);
    CHECK_THROWS_AS(plain_divmod(a, SkewPoly(f9, 1)), std::invalid_argument);
    CHECK_THROWS_AS(plain_mul(a, b), std::invalid_argument);
    CHECK_THROWS_AS(SkewPoly(f9, 1).monic(), std::invalid_argument);
    CHECK_THROWS_AS(SkewPoly(f9, 1).lead(), std::invalid_argument);
    CHECK_THROWS_AS(SkewPoly::x_pow_minus_one(f9, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(SkewPoly(f9, 1, {1, 200}), std::invalid_argument);
    CHECK_THROWS_AS(SkewPoly::constant(f9, 1, f25->one()), std::invalid_argument);

    CHECK(SkewPoly(f9, 1).degree() == -1);
    CHECK(SP(f9, 1, "0").is_zero());
    CHECK(SP(f9, 1, "2,1").monic() == SP(f9, 1, "2,1"));
    CHECK(SP(f9, 1, "1,w").monic().is_monic());
    CHECK(SP(f9, 1, "1,1,w^3,1").str() == "x^3 + w^3x^2 + x + 1");
    CHECK(SP(f9, 1, "0,w^3,w^7").str() == "w^7x^2 + w^3x");
    CHECK(SP(f9, 1, "2").str() == "2");
    CHECK(SkewPoly(f9, 1).str() == "0");
    CHECK(SkewPoly(f9, 1).canonical_str() == "0");
}
