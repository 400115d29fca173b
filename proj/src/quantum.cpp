#include "skewcode/quantum.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

namespace skewcode {

std::string route_name(DualRoute route) {
    return route == DualRoute::Coprime ? "coprime" : "divides";
}

DivCheck dagger_product_check(const SkewPoly& g, uint32_t len) {
    const SkewPoly xn = SkewPoly::x_pow_minus_one(g.field(), g.theta_exp(), len);
    const SkewDivMod cof = right_divmod(xn, g);
    if (!cof.rem.is_zero())
        throw verify_error(g.str() + " does not right-divide x^" + std::to_string(len) +
                           " - 1");
    DivCheck check;
    check.h = cof.quot;
    const SkewDivMod test = right_divmod(check.h.dagger() * check.h, xn);
    check.ok = test.rem.is_zero();
    check.quotient = check.ok ? test.quot : SkewPoly(g.field(), g.theta_exp());
    return check;
}

DivCheck reciprocal_product_check(const SkewPoly& f, uint32_t alpha) {
    const SkewPoly xa = SkewPoly::x_pow_minus_one(f.field(), f.theta_exp(), alpha);
    const SkewDivMod cof = plain_divmod(xa, f);
    if (!cof.rem.is_zero())
        throw verify_error("f = " + f.str() + " does not divide x^" + std::to_string(alpha) +
                           " - 1 in the commutative ring");
    DivCheck check;
    check.h = cof.quot;
    const SkewDivMod test = plain_divmod(xa, plain_mul(f, f.reciprocal()));
    check.ok = test.rem.is_zero();
    check.quotient = check.ok ? test.quot : SkewPoly(f.field(), f.theta_exp());
    return check;
}

namespace {

nlohmann::json check_json(const DivCheck& c) {
    return {{"ok", c.ok}, {"h", c.h.canonical_str()}, {"quotient", c.quotient.canonical_str()}};
}

}  // namespace

DualContainCertificate check_dual_containing(const CodeSpec& spec) {
    if (!spec.separable())
        throw verify_error("dual containment criteria apply to separable generators only");
    const uint32_t order = spec.theta_order();
    if (spec.beta % order != 0)
        throw verify_error("automorphism order " + std::to_string(order) +
                           " must divide beta = " + std::to_string(spec.beta));
    const auto& gen = std::get<SeparableGenerators>(spec.generators);

    DualContainCertificate cert;
    if (std::gcd(spec.alpha, order) == 1) {
        cert.route = DualRoute::Coprime;
        cert.f_check = reciprocal_product_check(gen.f, spec.alpha);
    } else if (spec.alpha % order == 0) {
        cert.route = DualRoute::Divides;
        cert.f_check = dagger_product_check(gen.f, spec.alpha);
    } else {
        throw verify_error(
            "no applicable criterion for the x block: alpha = " + std::to_string(spec.alpha) +
            " neither is coprime to nor divisible by the automorphism order " +
            std::to_string(order));
    }
    cert.g1_check = dagger_product_check(gen.g1, spec.beta);
    cert.g2_check = dagger_product_check(gen.g2, spec.beta);
    return cert;
}

std::string DualContainCertificate::json() const {
    nlohmann::json j;
    j["dual_containing"] = valid();
    j["route"] = route_name(route);
    j["witnesses"] = {{"f", check_json(f_check)},
                      {"g1", check_json(g1_check)},
                      {"g2", check_json(g2_check)}};
    return j.dump();
}

std::string QuantumParams::str() const {
    std::ostringstream os;
    os << "[[" << n << "," << k << "," << d << "]]_" << q;
    return os.str();
}

std::string QuantumParams::json() const {
    nlohmann::json j{{"n", n}, {"k", k}, {"d", d}, {"q", q}};
    if (!source.empty()) j["source"] = source;
    return j.dump();
}

QuantumParams css_params(uint32_t q, uint32_t n, uint32_t k_classical, uint32_t d,
                         std::string source) {
    if (n == 0 || d == 0) throw std::invalid_argument("css parameters need n >= 1, d >= 1");
    if (k_classical > n)
        throw std::invalid_argument("classical dimension exceeds the length");
    if (2 * uint64_t(k_classical) < n)
        throw verify_error("[" + std::to_string(n) + "," + std::to_string(k_classical) +
                           "] is not dual-containing: 2k < n");
    QuantumParams p;
    p.q = q;
    p.n = n;
    p.k = 2 * k_classical - n;
    p.d = d;
    p.source = std::move(source);
    return p;
}

uint32_t singleton_defect(const QuantumParams& p) {
    const int64_t defect = int64_t(p.n) + 2 - int64_t(p.k) - 2 * int64_t(p.d);
    if (defect < 0)
        throw verify_error(p.str() + " violates the quantum singleton bound k + 2d <= n + 2");
    return uint32_t(defect);
}

std::string comparison_name(CodeComparison c) {
    switch (c) {
        case CodeComparison::Better: return "better";
        case CodeComparison::Worse: return "worse";
        case CodeComparison::Equal: return "equal";
        default: return "incomparable";
    }
}

CodeComparison compare_codes(const QuantumParams& a, const QuantumParams& b) {
    if (a.q != b.q)
        throw std::invalid_argument("codes over different fields are not comparable");
    // Rates k/n compared exactly by cross-multiplication.
    const uint64_t lhs = uint64_t(a.k) * b.n;
    const uint64_t rhs = uint64_t(b.k) * a.n;
    const bool rate_gt = lhs > rhs, rate_eq = lhs == rhs;
    const bool d_gt = a.d > b.d, d_eq = a.d == b.d;
    if (d_eq && rate_eq) return CodeComparison::Equal;
    if ((d_gt || d_eq) && (rate_gt || rate_eq)) return CodeComparison::Better;
    if ((!d_gt) && (!rate_gt)) return CodeComparison::Worse;
    return CodeComparison::Incomparable;
}

QuantumBuild build_quantum_code(const CodeSpec& spec, const GrayMatrix& m,
                                DistanceStrategy strategy, uint64_t budget, uint32_t jobs) {
    const DualContainCertificate cert = check_dual_containing(spec);
    GeneratorMatrix gray = gray_image_matrix(spec, m);
    const uint32_t n = gray.n(), k = gray.k();
    const uint32_t d = min_distance(gray, strategy, budget, jobs);
    QuantumBuild build{std::move(gray), d, cert, std::nullopt};
    if (cert.valid())
        build.params = css_params(spec.field->q(), n, k, d, spec.json());
    return build;
}

uint32_t relative_min_distance(const GeneratorMatrix& code, const GeneratorMatrix& excluded,
                               uint64_t budget) {
    if (code.k() == 0) throw std::invalid_argument("zero code has no distance");
    if (excluded.n() != code.n() || excluded.field() != code.field())
        throw std::invalid_argument("excluded space must live in the same ambient space");
    if (budget == 0) budget = default_work_budget();
    const Field& f = *code.field();
    const uint32_t n = code.n(), k = code.k();
    uint64_t words = 1;
    for (uint32_t i = 0; i < k && words != UINT64_MAX; ++i)
        words = words > UINT64_MAX / f.q() ? UINT64_MAX : words * f.q();
    const uint64_t required = words > UINT64_MAX / n ? UINT64_MAX : words * n;
    if (required > budget)
        throw budget_error("coset enumeration needs q^k*n = " +
                               (required == UINT64_MAX ? std::string(">2^64")
                                                       : std::to_string(required)) +
                               " work, budget is " + std::to_string(budget),
                           required, budget);

    const auto& basis = code.canonical();
    uint32_t best = 0;
    // Message counter in base q; scalar classes are not deduplicated because
    // the excluded-space test already costs a row reduction per word.
    std::vector<uint16_t> msg(k, 0);
    std::vector<uint16_t> word(n, 0);
    for (uint64_t step = 1; step < words; ++step) {
        uint32_t pos = 0;
        while (true) {
            msg[pos] = uint16_t((msg[pos] + 1) % f.q());
            if (msg[pos] != 0) break;
            ++pos;
        }
        word.assign(n, 0);
        for (uint32_t i = 0; i < k; ++i) {
            if (msg[i] == 0) continue;
            for (uint32_t j = 0; j < n; ++j)
                word[j] = f.add_raw(word[j], f.mul_raw(msg[i], basis[i][j]));
        }
        uint32_t wt = 0;
        for (uint16_t v : word) wt += (v != 0);
        if (wt == 0) continue;
        if (best != 0 && wt >= best) continue;
        if (excluded.contains_word(word)) continue;
        best = wt;
        if (best == 1) break;
    }
    return best;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("SKEWCODE_DATA_DIR"); env && *env) return env;
    return "data";
}

std::optional<KnownCode> find_reference_code(uint32_t q, uint32_t n, uint32_t d,
                                             const std::string& data_dir) {
    const std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
    const std::string path = dir + "/existing_codes.json";
    std::ifstream in(path);
    if (!in) throw verify_error("reference data file not found: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw verify_error("reference data file " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_array()) throw verify_error("reference data file must hold an array");
    for (const auto& row : j) {
        try {
            if (!row.is_object() || row.value("q", 0u) != q || row.value("n", 0u) != n ||
                row.value("d", 0u) != d)
                continue;
            KnownCode known;
            known.params.q = q;
            known.params.n = row.at("ref_n").get<uint32_t>();
            known.params.k = row.at("ref_k").get<uint32_t>();
            known.params.d = row.at("ref_d").get<uint32_t>();
            known.source = row.value("source", "");
            known.params.source = known.source;
            return known;
        } catch (const nlohmann::json::exception& e) {
            throw verify_error("reference data file " + path + " has a malformed row: " +
                               e.what());
        }
    }
    return std::nullopt;
}

}  // namespace skewcode
