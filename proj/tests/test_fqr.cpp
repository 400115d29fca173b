#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewcode/fqr.hpp"

#include <random>
#include <string>
#include <vector>

using namespace skewcode;

namespace {

std::shared_ptr<const Field> f9() { return Field::make_q(9); }

SkewPoly sp(const std::shared_ptr<const Field>& f, const std::string& asc) {
    return SkewPoly::parse(f, 1, asc);
}

/// First worked configuration: alpha = 18, beta = 36 over GF(9), twist a -> a^3.
CodeSpec spec_18_36() {
    auto f = f9();
    CodeSpec s;
    s.field = f;
    s.alpha = 18;
    s.beta = 36;
    s.theta_exp = 1;
    s.generators = SeparableGenerators{sp(f, "1,1,w^3,1"), sp(f, "w^2,1"), sp(f, "1,1,w^2")};
    return s;
}

/// Second worked configuration: alpha = 49, beta = 36 over GF(9), twist a -> a^3.
CodeSpec spec_49_36() {
    auto f = f9();
    CodeSpec s;
    s.field = f;
    s.alpha = 49;
    s.beta = 36;
    s.theta_exp = 1;
    s.generators =
        SeparableGenerators{sp(f, "2,w^5,w^3,1"), sp(f, "1,1,w^6"), sp(f, "1,1,w^2")};
    return s;
}

uint32_t hamming(const std::vector<uint16_t>& v) {
    uint32_t w = 0;
    for (uint16_t x : v) w += (x != 0);
    return w;
}

std::vector<SkewPoly> monic_right_divisors(const std::shared_ptr<const Field>& f,
                                           uint32_t theta_exp, uint32_t n, uint32_t max_deg) {
    const SkewPoly target = SkewPoly::x_pow_minus_one(f, theta_exp, n);
    std::vector<SkewPoly> out;
    std::vector<uint16_t> coeffs;
    for (uint32_t d = 0; d <= max_deg; ++d) {
        coeffs.assign(d + 1, 0);
        coeffs[d] = 1;
        uint64_t combos = 1;
        for (uint32_t i = 0; i < d; ++i) combos *= f->q();
        for (uint64_t c = 0; c < combos; ++c) {
            uint64_t rest = c;
            for (uint32_t i = 0; i < d; ++i) {
                coeffs[i] = uint16_t(rest % f->q());
                rest /= f->q();
            }
            SkewPoly cand(f, theta_exp, coeffs);
            if (right_divides(cand, target)) out.push_back(cand);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("gray matrices validate the gamma-orthogonality invariant") {
    auto f = f9();
    const GrayMatrix had = GrayMatrix::hadamard(f);
    CHECK(had.gamma == f->from_int(2));
    CHECK(had.m11 == -f->one());
    const GrayMatrix id = GrayMatrix::identity(f);
    CHECK(id.gamma == f->one());

    // Scaled identity: M*M^T = w^2 * I.
    const FieldElement w = f->generator();
    const GrayMatrix scaled = GrayMatrix::make(f, w, f->zero(), f->zero(), w);
    CHECK(scaled.gamma == w * w);

    CHECK_THROWS_AS(GrayMatrix::make(f, f->one(), f->one(), f->one(), f->one()), verify_error);
    CHECK_THROWS_AS(GrayMatrix::make(f, f->one(), f->zero(), f->one(), f->one()),
                    verify_error);
    CHECK_THROWS_AS(GrayMatrix::hadamard(Field::make_q(4)), verify_error);

    CHECK(GrayMatrix::parse(f, "identity").m01 == f->zero());
    const GrayMatrix parsed = GrayMatrix::parse(f, " 1, 1, 1, 2 ");
    CHECK(parsed.m10 == f->one());
    CHECK(parsed.m11 == f->from_int(2));
    CHECK(parsed.gamma == had.gamma);
    CHECK(GrayMatrix::parse(f, "hadamard").str() == had.str());
    CHECK_THROWS_AS(GrayMatrix::parse(f, "1,1,1"), std::invalid_argument);
    CHECK_THROWS_AS(GrayMatrix::parse(f, "frobenius"), std::invalid_argument);
}

TEST_CASE("mixed words store split coordinates and round-trip accessors") {
    auto f = f9();
    const FieldElement w = f->generator();
    MixedWord l(f, {f->one(), w}, {RElement(f->zero(), f->one())});
    CHECK(l.alpha() == 2);
    CHECK(l.beta() == 1);
    CHECK(l.split() == std::vector<uint16_t>{1, w.value(), 0, 1});
    CHECK(l.x(1) == w);
    CHECK(l.y(0) == RElement(f->zero(), f->one()));
    CHECK(l.str() == "(1,w | (0|1))");
    CHECK_FALSE(l.is_zero());
    CHECK(MixedWord(f, 3, 2).is_zero());

    const MixedWord copy = MixedWord::from_split(f, 2, 1, l.split());
    CHECK(copy == l);
    MixedWord sum = l + copy;
    CHECK(sum.x(0) == f->from_int(2));
    CHECK((l - copy).is_zero());

    sum.set_y(0, RElement::u(f));
    CHECK(sum.y(0) == RElement(f->zero(), f->one()));
    CHECK_THROWS_AS(l.x(2), std::invalid_argument);
    CHECK_THROWS_AS(MixedWord::from_split(f, 2, 1, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(MixedWord::from_split(f, 1, 1, {9, 0, 0}), std::invalid_argument);
    auto f25 = Field::make_q(25);
    CHECK_THROWS_AS(l + MixedWord(f25, 2, 1), std::invalid_argument);
}

TEST_CASE("scalar action multiplies the x block through eta") {
    auto f = f9();
    const FieldElement w = f->generator();
    const MixedWord l(f, {f->one(), w}, {RElement(w, f->from_int(2)), RElement::one(f)});

    const MixedWord by_u = scalar_action(RElement::u(f), l);
    CHECK(by_u.x(0).is_zero());
    CHECK(by_u.x(1).is_zero());
    CHECK(by_u.y(0) == RElement(f->zero(), f->from_int(2)));
    CHECK(by_u.y(1) == RElement(f->zero(), f->one()));

    const MixedWord by_xi1 = scalar_action(RElement::xi1(f), l);
    CHECK(by_xi1.x(0) == f->one());
    CHECK(by_xi1.x(1) == w);
    CHECK(by_xi1.y(0) == RElement(w, f->zero()));

    CHECK(scalar_action(RElement::one(f), l) == l);
    // u * (1-u) = 0 annihilates every word.
    CHECK(scalar_action(RElement::u(f), by_xi1).is_zero());

    // A plain field scalar acts coordinatewise on the split vector.
    const RElement ws = RElement::from_ab(w, f->zero());
    const MixedWord by_w = scalar_action(ws, l);
    for (size_t i = 0; i < l.split().size(); ++i)
        CHECK(by_w.split()[i] == f->mul_raw(w.value(), l.split()[i]));
}

TEST_CASE("sigma shift rotates both blocks with the twist applied") {
    auto f = f9();
    const FieldElement w = f->generator();
    const MixedWord l(f, {w * w, f->one(), f->zero()},
                      {RElement(f->one(), w), RElement(f->zero(), f->from_int(2))});
    const MixedWord s = sigma_shift(l, 1);
    CHECK(s.x(0) == f->zero());
    CHECK(s.x(1) == f->from_power(6));
    CHECK(s.x(2) == f->one());
    CHECK(s.y(0) == RElement(f->zero(), f->from_int(2)));
    CHECK(s.y(1) == RElement(f->one(), f->from_power(3)));

    // Smallest case where the twist delays the return: one slot per block.
    const MixedWord tiny(f, {w}, {RElement(f->one(), w)});
    const MixedWord once = sigma_shift(tiny, 1);
    CHECK(once.x(0) == f->from_power(3));
    CHECK(once != tiny);
    CHECK(sigma_shift(once, 1) == tiny);

    // lcm(alpha, beta) * |twist| applications restore any word.
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 8);
    MixedWord word(f, 2, 4);
    std::vector<uint16_t> vals(2 + 2 * 4);
    for (auto& v : vals) v = uint16_t(pick(rng));
    word = MixedWord::from_split(f, 2, 4, vals);
    MixedWord walked = word;
    for (int i = 0; i < 4 * 2; ++i) walked = sigma_shift(walked, 1);
    CHECK(walked == word);
}

TEST_CASE("mixed inner products take values in the coordinate ring") {
    auto f = f9();
    const MixedWord ones(f, {f->one()}, {RElement::one(f)});
    CHECK(mixed_inner_product(ones, ones) == RElement(f->one(), f->from_int(2)));

    const MixedWord lx1(f, {f->zero()}, {RElement::xi1(f)});
    const MixedWord lx2(f, {f->zero()}, {RElement::xi2(f)});
    CHECK(mixed_inner_product(lx1, lx2).is_zero());

    // A pure x overlap lands in the ideal uR.
    const MixedWord ex(f, {f->one()}, {RElement::zero(f)});
    CHECK(mixed_inner_product(ex, ex) == RElement::u(f));

    CHECK_THROWS_AS(mixed_inner_product(ones, MixedWord(f, 2, 1)), std::invalid_argument);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(0, 8);
    size_t asym = 0;
    for (int t = 0; t < 200; ++t) {
        std::vector<uint16_t> a(3 + 2 * 2), b(3 + 2 * 2);
        for (auto& v : a) v = uint16_t(pick(rng));
        for (auto& v : b) v = uint16_t(pick(rng));
        const MixedWord la = MixedWord::from_split(f, 3, 2, a);
        const MixedWord lb = MixedWord::from_split(f, 3, 2, b);
        if (mixed_inner_product(la, lb) != mixed_inner_product(lb, la)) ++asym;
    }
    CHECK(asym == 0);
}

TEST_CASE("the first worked configuration spans 84 dimensions and is shift-closed") {
    const CodeSpec spec = spec_18_36();
    const GeneratorMatrix code = module_span(spec);
    CHECK(code.n() == 90);
    CHECK(code.k() == 84);

    size_t escaped = 0;
    for (const auto& row : code.canonical()) {
        const MixedWord word = MixedWord::from_split(spec.field, 18, 36, row);
        if (!code.contains_word(sigma_shift(word, spec.theta_exp).split())) ++escaped;
        if (!code.contains_word(scalar_action(RElement::u(spec.field), word).split()))
            ++escaped;
        if (!code.contains_word(scalar_action(RElement::xi1(spec.field), word).split()))
            ++escaped;
    }
    CHECK(escaped == 0);

    // The same module generated one pair at a time closes to the same space.
    const auto& gen = std::get<SeparableGenerators>(spec.generators);
    const SkewPoly zero(spec.field, spec.theta_exp);
    CodeSpec general = spec;
    general.generators = std::vector<GeneralGeneratorPair>{
        {gen.f, zero, zero}, {zero, gen.g1, zero}, {zero, zero, gen.g2}};
    const GeneratorMatrix closed = module_span(general);
    CHECK(closed.same_row_space(code));

    // The annihilator is shift-closed as well.
    const GeneratorMatrix dual = mixed_dual(spec);
    CHECK(dual.k() == 6);
    size_t dual_escaped = 0;
    for (const auto& row : dual.canonical()) {
        const MixedWord word = MixedWord::from_split(spec.field, 18, 36, row);
        if (!dual.contains_word(sigma_shift(word, spec.theta_exp).split())) ++dual_escaped;
    }
    CHECK(dual_escaped == 0);
    CHECK(duality_warning(spec).empty());
}

TEST_CASE("the second worked configuration spans 114 dimensions via the commutative route") {
    const CodeSpec spec = spec_49_36();
    const auto& gen = std::get<SeparableGenerators>(spec.generators);
    const SkewPoly xa = SkewPoly::x_pow_minus_one(spec.field, 1, 49);

    // The cubic divides x^49 - 1 only commutatively; the twisted division
    // leaves a remainder, so the block construction rests on the plain route.
    CHECK(plain_divmod(xa, gen.f).rem.is_zero());
    CHECK_FALSE(right_divides(gen.f, xa));

    const GeneratorMatrix code = module_span(spec);
    CHECK(code.n() == 121);
    CHECK(code.k() == 114);
    CHECK(module_span_unchecked(spec).same_row_space(code));

    const GeneratorMatrix dual = mixed_dual(spec);
    CHECK(dual.k() == 7);

    size_t nonzero = 0;
    for (const auto& crow : code.canonical())
        for (const auto& drow : dual.rows()) {
            const MixedWord cw = MixedWord::from_split(spec.field, 49, 36, crow);
            const MixedWord dw = MixedWord::from_split(spec.field, 49, 36, drow);
            if (!mixed_inner_product(cw, dw).is_zero()) ++nonzero;
        }
    CHECK(nonzero == 0);
    CHECK(duality_warning(spec).empty());
}

TEST_CASE("separable generators that fail the divisor checks are rejected") {
    auto f = f9();
    const FieldElement w = f->generator();

    // Commutative route (gcd(alpha, |twist|) = 1): x + w misses the plain roots.
    CodeSpec bad_f = spec_49_36();
    std::get<SeparableGenerators>(bad_f.generators).f =
        SkewPoly::from_elements(f, 1, {w, f->one()});
    CHECK_THROWS_WITH_AS(module_span(bad_f),
                         "f = x + w does not divide x^49 - 1 in the commutative ring",
                         verify_error);

    // Twisted route (gcd(18, 2) = 2): the same binomial fails the skew check.
    CodeSpec bad_fx = spec_18_36();
    std::get<SeparableGenerators>(bad_fx.generators).f =
        SkewPoly::from_elements(f, 1, {w, f->one()});
    CHECK_THROWS_WITH_AS(module_span(bad_fx),
                         "f = x + w does not right-divide x^18 - 1", verify_error);

    // Find a quadratic that is genuinely not a right divisor of x^36 - 1.
    const SkewPoly xb = SkewPoly::x_pow_minus_one(f, 1, 36);
    SkewPoly bad_g(f, 1);
    for (uint16_t c0 = 0; c0 < 9 && bad_g.is_zero(); ++c0)
        for (uint16_t c1 = 0; c1 < 9 && bad_g.is_zero(); ++c1) {
            const SkewPoly cand(f, 1, {c0, c1, 1});
            if (!right_divides(cand, xb)) bad_g = cand;
        }
    REQUIRE_FALSE(bad_g.is_zero());
    CodeSpec bad_g1 = spec_18_36();
    std::get<SeparableGenerators>(bad_g1.generators).g1 = bad_g;
    CHECK_THROWS_AS(module_span(bad_g1), verify_error);
    // The unchecked constructor accepts the same data.
    CHECK(module_span_unchecked(bad_g1).n() == 90);

    CodeSpec zero_gen = spec_18_36();
    std::get<SeparableGenerators>(zero_gen.generators).g2 = SkewPoly(f, 1);
    CHECK_THROWS_AS(module_span(zero_gen), std::invalid_argument);

    CodeSpec too_big = spec_18_36();
    std::get<SeparableGenerators>(too_big.generators).f =
        SkewPoly::monomial(f, 1, f->one(), 19);
    CHECK_THROWS_AS(module_span(too_big), std::invalid_argument);

    CodeSpec wrong_twist = spec_18_36();
    std::get<SeparableGenerators>(wrong_twist.generators).g1 = SkewPoly::parse(f, 0, "w^2,1");
    CHECK_THROWS_AS(module_span(wrong_twist), std::invalid_argument);

    CodeSpec no_alpha = spec_18_36();
    no_alpha.alpha = 0;
    CHECK_THROWS_AS(module_span(no_alpha), std::invalid_argument);
}

TEST_CASE("general closure grows beyond the staircase when the x generator is not twist-stable") {
    auto f = f9();
    const FieldElement w = f->generator();
    const SkewPoly fx = SkewPoly::from_elements(f, 1, {-w, f->one()});
    // x - w spans a 6-row staircase at length 7, but its coefficients move
    // under the twist, so the smallest shift-closed space is everything.
    CHECK(twisted_shift_matrix(fx, 7).k() == 6);

    CodeSpec spec;
    spec.field = f;
    spec.alpha = 7;
    spec.beta = 2;
    spec.theta_exp = 1;
    const SkewPoly zero(f, 1);
    spec.generators = std::vector<GeneralGeneratorPair>{{fx, zero, zero}};
    const GeneratorMatrix closed = module_span(spec);
    CHECK(closed.k() == 7);
    size_t ybad = 0;
    for (const auto& row : closed.canonical())
        for (uint32_t j = 7; j < 11; ++j)
            if (row[j] != 0) ++ybad;
    CHECK(ybad == 0);
}

TEST_CASE("gray map applies the pair transform and the lee weight counts its support") {
    auto f = f9();
    const FieldElement w = f->generator();
    const GrayMatrix had = GrayMatrix::hadamard(f);

    // Pair (1, 2) maps to (1+2, 1-2) = (0, 2).
    const MixedWord l(f, {f->zero()}, {RElement(f->one(), f->from_int(2))});
    CHECK(gray_map(l, had) == std::vector<uint16_t>{0, 0, 2});
    CHECK(lee_weight(l, had) == 1);

    // The identity matrix interleaves the coordinate pairs verbatim.
    const GrayMatrix id = GrayMatrix::identity(f);
    const MixedWord l2(f, {f->from_int(2)},
                       {RElement(f->one(), w), RElement(f->zero(), w * w)});
    CHECK(gray_map(l2, id) ==
          std::vector<uint16_t>{2, 1, w.value(), 0, (w * w).value()});
    CHECK(lee_weight(l2, id) == 4);
    CHECK(lee_weight(MixedWord(f, 3, 3), had) == 0);

    // Scaled identity scales every interleaved pair.
    const GrayMatrix scaled = GrayMatrix::make(f, w, f->zero(), f->zero(), w);
    const std::vector<uint16_t> img = gray_map(l2, scaled);
    CHECK(img[1] == w.value());
    CHECK(img[2] == (w * w).value());

    CHECK_THROWS_AS(gray_map(l2, GrayMatrix::hadamard(Field::make_q(25))),
                    std::invalid_argument);

    // The map is a weight isometry: the image weight of a difference equals
    // the Hamming distance between the images.
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, 8);
    size_t broken = 0;
    for (int t = 0; t < 10000; ++t) {
        std::vector<uint16_t> a(5 + 2 * 6), b(5 + 2 * 6);
        for (auto& v : a) v = uint16_t(pick(rng));
        for (auto& v : b) v = uint16_t(pick(rng));
        const MixedWord la = MixedWord::from_split(f, 5, 6, a);
        const MixedWord lb = MixedWord::from_split(f, 5, 6, b);
        const std::vector<uint16_t> ia = gray_map(la, had);
        const std::vector<uint16_t> ib = gray_map(lb, had);
        uint32_t dist = 0;
        for (size_t i = 0; i < ia.size(); ++i) dist += (ia[i] != ib[i]);
        if (lee_weight(la - lb, had) != dist) ++broken;
    }
    CHECK(broken == 0);
}

TEST_CASE("gray images of the worked configurations compute to distance 2") {
    const CodeSpec first = spec_18_36();
    const GrayMatrix had = GrayMatrix::hadamard(first.field);
    const GeneratorMatrix g1 = gray_image_matrix(first, had);
    CHECK(g1.n() == 90);
    CHECK(g1.k() == 84);

    // Weight-2 witness: x^6 - 1 is a left multiple of the x-block generator,
    // and the x block passes through the gray map unchanged.
    std::vector<uint16_t> witness(90, 0);
    witness[0] = 2;
    witness[6] = 1;
    CHECK(g1.contains_word(witness));
    CHECK(min_distance(g1, DistanceStrategy::ColumnDependence) == 2);

    const CodeSpec second = spec_49_36();
    const GeneratorMatrix g2 = gray_image_matrix(second, had);
    CHECK(g2.n() == 121);
    CHECK(g2.k() == 114);
    CHECK(min_distance(g2, DistanceStrategy::ColumnDependence) == 2);

    // With M = I the image is exactly the three staircases interleaved.
    const GeneratorMatrix gi = gray_image_matrix(first, GrayMatrix::identity(first.field));
    CHECK(gi.k() == 84);
    const auto& gen = std::get<SeparableGenerators>(first.generators);
    std::vector<std::vector<uint16_t>> rows;
    const GeneratorMatrix mx = twisted_shift_matrix(gen.f, 18);
    const GeneratorMatrix m1 = twisted_shift_matrix(gen.g1, 36);
    const GeneratorMatrix m2 = twisted_shift_matrix(gen.g2, 36);
    for (const auto& r : mx.rows()) {
        std::vector<uint16_t> wide(90, 0);
        std::copy(r.begin(), r.end(), wide.begin());
        rows.push_back(std::move(wide));
    }
    for (const auto& r : m1.rows()) {
        std::vector<uint16_t> wide(90, 0);
        for (uint32_t j = 0; j < 36; ++j) wide[18 + 2 * j] = r[j];
        rows.push_back(std::move(wide));
    }
    for (const auto& r : m2.rows()) {
        std::vector<uint16_t> wide(90, 0);
        for (uint32_t j = 0; j < 36; ++j) wide[18 + 2 * j + 1] = r[j];
        rows.push_back(std::move(wide));
    }
    CHECK(gi.same_row_space(GeneratorMatrix(first.field, 90, std::move(rows))));
    CHECK(min_distance(gi, DistanceStrategy::ColumnDependence) == 2);
}

TEST_CASE("gray duality commutes for gamma-orthogonal matrices") {
    auto f = f9();
    const uint32_t alpha = 2, beta = 4;
    const std::vector<SkewPoly> fs = monic_right_divisors(f, 1, alpha, 2);
    const std::vector<SkewPoly> gs = monic_right_divisors(f, 1, beta, 2);
    CHECK(fs.size() == 6);
    CHECK(gs.size() == 27);

    const GrayMatrix had = GrayMatrix::hadamard(f);
    const GrayMatrix id = GrayMatrix::identity(f);
    size_t law_broken = 0, dual_broken = 0, checked = 0;
    for (const auto& fx : fs)
        for (const auto& ga : gs)
            for (const auto& gb : gs) {
                CodeSpec spec;
                spec.field = f;
                spec.alpha = alpha;
                spec.beta = beta;
                spec.theta_exp = 1;
                spec.generators = SeparableGenerators{fx, ga, gb};
                const GeneratorMatrix code = module_span(spec);
                const GeneratorMatrix dual = mixed_dual(spec);
                if (code.k() + dual.k() != alpha + 2 * beta) ++law_broken;
                for (const GrayMatrix& m : {had, id}) {
                    const GeneratorMatrix gray_code = gray_transform(code, alpha, m);
                    const GeneratorMatrix gray_dual = gray_transform(dual, alpha, m);
                    if (gray_code.k() != code.k()) ++dual_broken;
                    if (!gray_dual.same_row_space(gray_code.dual())) ++dual_broken;
                }
                ++checked;
            }
    CHECK(checked == 6 * 27 * 27);
    CHECK(law_broken == 0);
    CHECK(dual_broken == 0);
}

TEST_CASE("duality warnings flag beta outside the twist order") {
    auto f = f9();
    CHECK(duality_warning(spec_18_36()).empty());

    CodeSpec odd;
    odd.field = f;
    odd.alpha = 2;
    odd.beta = 5;
    odd.theta_exp = 1;
    const SkewPoly lin = SkewPoly::parse(f, 1, "2,1");  // x - 1
    odd.generators = SeparableGenerators{lin, lin, lin};
    const std::string warning = duality_warning(odd);
    CHECK(warning.find("does not divide beta = 5") != std::string::npos);

    // The annihilator computation itself still runs and fills the dimension.
    const GeneratorMatrix code = module_span(odd);
    CHECK(code.k() == 9);
    CHECK(mixed_dual(odd).k() == 3);

    // An untwisted ring never warns.
    CodeSpec plain = odd;
    plain.theta_exp = 0;
    plain.generators = SeparableGenerators{SkewPoly::parse(f, 0, "2,1"),
                                           SkewPoly::parse(f, 0, "2,1"),
                                           SkewPoly::parse(f, 0, "2,1")};
    CHECK(duality_warning(plain).empty());

    // Degenerate full staircases: the zero module against the whole space.
    CodeSpec empty = spec_18_36();
    auto& gen = std::get<SeparableGenerators>(empty.generators);
    gen.f = SkewPoly::x_pow_minus_one(f, 1, 18);
    gen.g1 = SkewPoly::x_pow_minus_one(f, 1, 36);
    gen.g2 = SkewPoly::x_pow_minus_one(f, 1, 36);
    const GeneratorMatrix nothing = module_span(empty);
    CHECK(nothing.k() == 0);
    CHECK(mixed_dual(empty).k() == 90);
}

TEST_CASE("code specs parse and serialize JSON") {
    std::vector<std::string> warnings;
    const CodeSpec spec = CodeSpec::parse_json(
        R"({"q":9,"theta_exp":1,"alpha":18,"beta":36,"f":"1,1,w^3,1","g1":"w^2,1","g2":"1,1,w^2"})",
        &warnings);
    CHECK(spec.field->q() == 9);
    CHECK(spec.alpha == 18);
    CHECK(spec.separable());
    const GeneratorMatrix direct = module_span(spec_18_36());
    CHECK(module_span(spec).same_row_space(direct));

    const CodeSpec reparsed = CodeSpec::parse_json(spec.json());
    CHECK(module_span(reparsed).same_row_space(direct));

    // Compact descending strings are accepted too.
    const CodeSpec compact = CodeSpec::parse_json(
        R"({"q":9,"theta_exp":1,"alpha":18,"beta":36,"f":"1w^311","g1":"1w^2","g2":"w^211"})");
    CHECK(module_span(compact).same_row_space(direct));

    // General-form pairs round-trip and close to the separable span.
    const CodeSpec pairs = CodeSpec::parse_json(
        R"({"q":9,"theta_exp":1,"alpha":18,"beta":36,"pairs":[
            {"k":"1,1,w^3,1","t1":"0","t2":"0"},
            {"k":"0","t1":"w^2,1","t2":"0"},
            {"k":"0","t1":"0","t2":"1,1,w^2"}]})");
    CHECK_FALSE(pairs.separable());
    CHECK(module_span(pairs).same_row_space(direct));
    const CodeSpec pairs2 = CodeSpec::parse_json(pairs.json());
    CHECK(module_span(pairs2).same_row_space(direct));

    CHECK_THROWS_AS(CodeSpec::parse_json("{\"alpha\":2}"), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::parse_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::parse_json(R"({"q":6,"alpha":2,"beta":2,"f":"1","g1":"1","g2":"1"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::parse_json(R"({"q":9,"alpha":2,"beta":2,"f":7,"g1":"1","g2":"1"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::parse_json(R"({"q":9,"alpha":2,"beta":2,"pairs":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        CodeSpec::parse_json(R"({"q":9,"alpha":2,"beta":2,"pairs":[{"k":"1","t1":"1"}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::parse_json(R"({"q":9,"alpha":0,"beta":2,"f":"1","g1":"1","g2":"1"})"),
                    std::invalid_argument);
}

TEST_CASE("gray transform rejects mismatched shapes") {
    auto f = f9();
    const GeneratorMatrix m(f, 5, {{1, 0, 0, 0, 0}});
    CHECK_THROWS_AS(gray_transform(m, 2, GrayMatrix::hadamard(f)), std::invalid_argument);
    CHECK(gray_transform(m, 1, GrayMatrix::hadamard(f)).n() == 5);
    CHECK(gray_transform(m, 1, GrayMatrix::hadamard(f)).k() == 1);
}
