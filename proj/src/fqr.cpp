#include "skewcode/fqr.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewcode {

namespace {

void check_gray_invariants(const GrayMatrix& g) {
    const FieldElement det = g.m00 * g.m11 - g.m01 * g.m10;
    if (det.is_zero()) throw verify_error("gray matrix is singular");
    const FieldElement d0 = g.m00 * g.m00 + g.m01 * g.m01;
    const FieldElement d1 = g.m10 * g.m10 + g.m11 * g.m11;
    const FieldElement off = g.m00 * g.m10 + g.m01 * g.m11;
    if (!off.is_zero() || d0 != d1)
        throw verify_error("gray matrix does not satisfy M*M^T = gamma*I");
    if (d0.is_zero())
        throw verify_error("gray matrix has gamma = 0 (M*M^T vanishes)");
}

std::shared_ptr<const Field> require_same_shape(const MixedWord& a, const MixedWord& b,
                                                const char* what) {
    if (a.field().get() != b.field().get() || a.alpha() != b.alpha() || b.beta() != a.beta())
        throw std::invalid_argument(std::string(what) + ": shape mismatch");
    return a.field();
}

}  // namespace

GrayMatrix GrayMatrix::identity(const std::shared_ptr<const Field>& f) {
    return make(f, f->one(), f->zero(), f->zero(), f->one());
}

GrayMatrix GrayMatrix::hadamard(const std::shared_ptr<const Field>& f) {
    if (f->p() == 2)
        throw verify_error("hadamard gray matrix is singular in characteristic 2");
    return make(f, f->one(), f->one(), f->one(), -f->one());
}

GrayMatrix GrayMatrix::make(const std::shared_ptr<const Field>& f, FieldElement a,
                            FieldElement b, FieldElement c, FieldElement d) {
    GrayMatrix g{a, b, c, d, f->zero()};
    check_gray_invariants(g);
    g.gamma = a * a + b * b;
    return g;
}

GrayMatrix GrayMatrix::parse(const std::shared_ptr<const Field>& f, const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "identity") return identity(f);
    if (t == "hadamard") return hadamard(f);
    std::vector<FieldElement> entries;
    size_t pos = 0;
    while (pos <= t.size()) {
        size_t comma = t.find(',', pos);
        std::string token = t.substr(pos, comma == std::string::npos ? comma : comma - pos);
        entries.push_back(f->element(token));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (entries.size() != 4)
        throw std::invalid_argument(
            "gray matrix text must be \"identity\", \"hadamard\", or four comma-separated "
            "entries (row-major)");
    return make(f, entries[0], entries[1], entries[2], entries[3]);
}

std::string GrayMatrix::str() const {
    std::ostringstream os;
    os << "[[" << m00.str() << "," << m01.str() << "],[" << m10.str() << "," << m11.str()
       << "]]";
    return os.str();
}

MixedWord::MixedWord(std::shared_ptr<const Field> field, uint32_t alpha, uint32_t beta)
    : field_(std::move(field)), alpha_(alpha), beta_(beta), split_(alpha + 2 * beta, 0) {
    if (!field_) throw std::invalid_argument("mixed word needs a field");
}

MixedWord::MixedWord(std::shared_ptr<const Field> field, std::vector<FieldElement> x_part,
                     std::vector<RElement> y_part)
    : MixedWord(std::move(field), uint32_t(x_part.size()), uint32_t(y_part.size())) {
    for (uint32_t i = 0; i < alpha_; ++i) set_x(i, x_part[i]);
    for (uint32_t j = 0; j < beta_; ++j) set_y(j, y_part[j]);
}

MixedWord MixedWord::from_split(std::shared_ptr<const Field> field, uint32_t alpha,
                                uint32_t beta, const std::vector<uint16_t>& split) {
    MixedWord w(std::move(field), alpha, beta);
    if (split.size() != w.split_.size())
        throw std::invalid_argument("split vector length " + std::to_string(split.size()) +
                                    " != alpha + 2*beta = " + std::to_string(w.split_.size()));
    for (uint16_t v : split)
        if (v >= w.field_->q()) throw std::invalid_argument("split value out of range");
    w.split_ = split;
    return w;
}

FieldElement MixedWord::x(uint32_t i) const {
    if (i >= alpha_) throw std::invalid_argument("x index out of range");
    return field_->from_value(split_[i]);
}

RElement MixedWord::y(uint32_t j) const {
    if (j >= beta_) throw std::invalid_argument("y index out of range");
    return {field_->from_value(split_[alpha_ + j]),
            field_->from_value(split_[alpha_ + beta_ + j])};
}

void MixedWord::set_x(uint32_t i, FieldElement v) {
    if (i >= alpha_) throw std::invalid_argument("x index out of range");
    if (v.field() != field_.get()) throw std::invalid_argument("element from a different field");
    split_[i] = v.value();
}

void MixedWord::set_y(uint32_t j, RElement v) {
    if (j >= beta_) throw std::invalid_argument("y index out of range");
    if (v.field() != field_.get()) throw std::invalid_argument("element from a different field");
    split_[alpha_ + j] = v.c1().value();
    split_[alpha_ + beta_ + j] = v.c2().value();
}

bool MixedWord::is_zero() const {
    return std::all_of(split_.begin(), split_.end(), [](uint16_t v) { return v == 0; });
}

MixedWord operator+(const MixedWord& a, const MixedWord& b) {
    require_same_shape(a, b, "mixed word sum");
    MixedWord out(a.field_, a.alpha_, a.beta_);
    for (size_t i = 0; i < out.split_.size(); ++i)
        out.split_[i] = a.field_->add_raw(a.split_[i], b.split_[i]);
    return out;
}

MixedWord operator-(const MixedWord& a, const MixedWord& b) {
    require_same_shape(a, b, "mixed word difference");
    MixedWord out(a.field_, a.alpha_, a.beta_);
    for (size_t i = 0; i < out.split_.size(); ++i)
        out.split_[i] = a.field_->sub_raw(a.split_[i], b.split_[i]);
    return out;
}

bool operator==(const MixedWord& a, const MixedWord& b) {
    return a.field_.get() == b.field_.get() && a.alpha_ == b.alpha_ && a.beta_ == b.beta_ &&
           a.split_ == b.split_;
}

std::string MixedWord::str() const {
    std::ostringstream os;
    os << "(";
    for (uint32_t i = 0; i < alpha_; ++i) {
        if (i) os << ",";
        os << x(i).str();
    }
    os << " | ";
    for (uint32_t j = 0; j < beta_; ++j) {
        if (j) os << ",";
        os << y(j).str();
    }
    os << ")";
    return os.str();
}

MixedWord scalar_action(const RElement& s, const MixedWord& l) {
    if (s.field() != l.field().get())
        throw std::invalid_argument("scalar from a different field");
    MixedWord out(l.field(), l.alpha(), l.beta());
    const FieldElement e = s.eta();
    for (uint32_t i = 0; i < l.alpha(); ++i) out.set_x(i, e * l.x(i));
    for (uint32_t j = 0; j < l.beta(); ++j) out.set_y(j, s * l.y(j));
    return out;
}

MixedWord sigma_shift(const MixedWord& l, uint32_t theta_exp) {
    const Field& f = *l.field();
    std::vector<uint16_t> x(l.split().begin(), l.split().begin() + l.alpha());
    std::vector<uint16_t> c1(l.split().begin() + l.alpha(),
                             l.split().begin() + l.alpha() + l.beta());
    std::vector<uint16_t> c2(l.split().begin() + l.alpha() + l.beta(), l.split().end());
    x = twisted_cyclic_shift(f, theta_exp, x);
    c1 = twisted_cyclic_shift(f, theta_exp, c1);
    c2 = twisted_cyclic_shift(f, theta_exp, c2);
    x.insert(x.end(), c1.begin(), c1.end());
    x.insert(x.end(), c2.begin(), c2.end());
    return MixedWord::from_split(l.field(), l.alpha(), l.beta(), x);
}

RElement mixed_inner_product(const MixedWord& l, const MixedWord& l2) {
    auto field = require_same_shape(l, l2, "mixed inner product");
    FieldElement xdot = field->zero();
    for (uint32_t i = 0; i < l.alpha(); ++i) xdot = xdot + l.x(i) * l2.x(i);
    RElement acc = RElement::u(field) * RElement::from_ab(xdot, field->zero());
    for (uint32_t j = 0; j < l.beta(); ++j) acc = acc + l.y(j) * l2.y(j);
    return acc;
}

std::string duality_warning(const CodeSpec& spec) {
    const uint32_t order = spec.theta_order();
    if (spec.beta % order == 0) return {};
    return "automorphism order " + std::to_string(order) + " does not divide beta = " +
           std::to_string(spec.beta) +
           "; x^beta - 1 is not central, so duality statements are not guaranteed";
}

namespace {

void validate_spec(const CodeSpec& spec) {
    if (!spec.field) throw std::invalid_argument("code spec needs a field");
    if (spec.alpha == 0 || spec.beta == 0)
        throw std::invalid_argument("code spec needs alpha >= 1 and beta >= 1");
    auto check_poly = [&](const SkewPoly& p, const char* name) {
        if (!p.field()) throw std::invalid_argument(std::string(name) + " is unset");
        if (p.field().get() != spec.field.get())
            throw std::invalid_argument(std::string(name) + " is over a different field");
        if (p.theta_exp() != spec.theta_exp % spec.field->m())
            throw std::invalid_argument(std::string(name) +
                                        " carries a different twist exponent");
    };
    if (spec.separable()) {
        const auto& g = std::get<SeparableGenerators>(spec.generators);
        check_poly(g.f, "f");
        check_poly(g.g1, "g1");
        check_poly(g.g2, "g2");
        if (g.f.is_zero() || g.g1.is_zero() || g.g2.is_zero())
            throw std::invalid_argument("separable generators must be nonzero");
        if (g.f.degree() > int(spec.alpha))
            throw std::invalid_argument("deg f exceeds alpha");
        if (g.g1.degree() > int(spec.beta) || g.g2.degree() > int(spec.beta))
            throw std::invalid_argument("deg g1/g2 exceeds beta");
    } else {
        const auto& pairs = std::get<std::vector<GeneralGeneratorPair>>(spec.generators);
        if (pairs.empty()) throw std::invalid_argument("general spec needs at least one pair");
        for (const auto& pr : pairs) {
            check_poly(pr.k, "k");
            check_poly(pr.t1, "t1");
            check_poly(pr.t2, "t2");
        }
    }
}

/// Places the rows of a length-`len` staircase into split coordinates
/// starting at column `offset`.
void emit_block(std::vector<std::vector<uint16_t>>& out, const GeneratorMatrix& block,
                uint32_t total, uint32_t offset) {
    for (const auto& row : block.rows()) {
        std::vector<uint16_t> wide(total, 0);
        std::copy(row.begin(), row.end(), wide.begin() + offset);
        out.push_back(std::move(wide));
    }
}

/// Staircase of the plain shifts x^j f (coefficients untouched): a basis of
/// the commutative cyclic code <f> when f divides x^n - 1.
GeneratorMatrix plain_shift_matrix(const SkewPoly& f, uint32_t n) {
    const auto& c = f.coeffs();
    std::vector<std::vector<uint16_t>> rows;
    for (uint32_t j = 0; uint32_t(f.degree()) + j < n; ++j) {
        std::vector<uint16_t> row(n, 0);
        std::copy(c.begin(), c.end(), row.begin() + j);
        rows.push_back(std::move(row));
    }
    return {f.field(), n, std::move(rows)};
}

GeneratorMatrix separable_span(const CodeSpec& spec, bool checked) {
    const auto& g = std::get<SeparableGenerators>(spec.generators);
    const uint32_t total = spec.alpha + 2 * spec.beta;
    if (checked) {
        const SkewPoly xb = SkewPoly::x_pow_minus_one(spec.field, spec.theta_exp, spec.beta);
        if (!right_divides(g.g1, xb))
            throw verify_error("g1 = " + g.g1.str() + " does not right-divide x^" +
                               std::to_string(spec.beta) + " - 1");
        if (!right_divides(g.g2, xb))
            throw verify_error("g2 = " + g.g2.str() + " does not right-divide x^" +
                               std::to_string(spec.beta) + " - 1");
        const SkewPoly xa = SkewPoly::x_pow_minus_one(spec.field, spec.theta_exp, spec.alpha);
        if (std::gcd(spec.alpha, spec.theta_order()) == 1) {
            if (!plain_divmod(xa, g.f).rem.is_zero())
                throw verify_error("f = " + g.f.str() + " does not divide x^" +
                                   std::to_string(spec.alpha) +
                                   " - 1 in the commutative ring");
        } else if (!right_divides(g.f, xa)) {
            throw verify_error("f = " + g.f.str() + " does not right-divide x^" +
                               std::to_string(spec.alpha) + " - 1");
        }
    }
    std::vector<std::vector<uint16_t>> rows;
    // When gcd(alpha, |Θ|) = 1 the shift-closed subspaces of length alpha are
    // exactly the commutative cyclic codes (a power of the twisted shift is
    // the plain shift), so the x-block is the plain staircase of f — the only
    // reading whose dimension and duality match the worked configurations. A
    // raw twisted staircase of a non-fixed f would be closed under neither
    // shift. When |Θ| divides alpha, f right-divides the central x^alpha - 1
    // and the twisted staircase is the genuine skew cyclic block.
    if (std::gcd(spec.alpha, spec.theta_order()) == 1)
        emit_block(rows, plain_shift_matrix(g.f, spec.alpha), total, 0);
    else
        emit_block(rows, twisted_shift_matrix(g.f, spec.alpha), total, 0);
    emit_block(rows, twisted_shift_matrix(g.g1, spec.beta), total, spec.alpha);
    emit_block(rows, twisted_shift_matrix(g.g2, spec.beta), total, spec.alpha + spec.beta);
    return {spec.field, total, std::move(rows)};
}

GeneratorMatrix general_span(const CodeSpec& spec) {
    const auto& pairs = std::get<std::vector<GeneralGeneratorPair>>(spec.generators);
    const uint32_t total = spec.alpha + 2 * spec.beta;
    const SkewPoly xa = SkewPoly::x_pow_minus_one(spec.field, spec.theta_exp, spec.alpha);
    const SkewPoly xb = SkewPoly::x_pow_minus_one(spec.field, spec.theta_exp, spec.beta);
    std::vector<std::vector<uint16_t>> rows;
    auto put = [&](std::vector<uint16_t>& row, const SkewPoly& reduced, uint32_t offset) {
        for (size_t i = 0; i < reduced.coeffs().size(); ++i)
            row[offset + i] = reduced.coeffs()[i];
    };
    for (const auto& pr : pairs) {
        std::vector<uint16_t> row(total, 0);
        put(row, right_divmod(pr.k, xa).rem, 0);
        put(row, right_divmod(pr.t1, xb).rem, spec.alpha);
        put(row, right_divmod(pr.t2, xb).rem, spec.alpha + spec.beta);
        rows.push_back(std::move(row));
    }
    const RElement su = RElement::u(spec.field);
    const RElement sx1 = RElement::xi1(spec.field);
    const uint64_t cap = uint64_t(total) * spec.theta_order() * 4;
    GeneratorMatrix current(spec.field, total, std::move(rows));
    for (uint64_t pass = 0;; ++pass) {
        if (pass > cap)
            throw verify_error("module closure did not stabilize within " +
                               std::to_string(cap) + " passes");
        std::vector<std::vector<uint16_t>> next = current.canonical();
        bool grew = false;
        for (const auto& row : current.canonical()) {
            const MixedWord w =
                MixedWord::from_split(spec.field, spec.alpha, spec.beta, row);
            for (const MixedWord& image :
                 {sigma_shift(w, spec.theta_exp), scalar_action(su, w), scalar_action(sx1, w)}) {
                if (!current.contains_word(image.split())) {
                    next.push_back(image.split());
                    grew = true;
                }
            }
        }
        if (!grew) return current;
        current = GeneratorMatrix(spec.field, total, std::move(next));
    }
}

}  // namespace

GeneratorMatrix module_span(const CodeSpec& spec) {
    validate_spec(spec);
    return spec.separable() ? separable_span(spec, true) : general_span(spec);
}

GeneratorMatrix module_span_unchecked(const CodeSpec& spec) {
    validate_spec(spec);
    return spec.separable() ? separable_span(spec, false) : general_span(spec);
}

GeneratorMatrix mixed_dual(const CodeSpec& spec) {
    validate_spec(spec);
    const GeneratorMatrix code = module_span(spec);
    const uint32_t a = spec.alpha, b = spec.beta, total = a + 2 * b;
    // l'·l = 0 in R means both CRT coordinates vanish: the c1 coordinate ties
    // the unknown's c1-block to the basis row's c1-block, the c2 coordinate
    // ties the unknown's x- and c2-blocks to the row's x- and c2-blocks.
    std::vector<std::vector<uint16_t>> constraints;
    for (const auto& row : code.canonical()) {
        std::vector<uint16_t> r1(total, 0), r2(total, 0);
        for (uint32_t j = 0; j < b; ++j) r1[a + j] = row[a + j];
        for (uint32_t i = 0; i < a; ++i) r2[i] = row[i];
        for (uint32_t j = 0; j < b; ++j) r2[a + b + j] = row[a + b + j];
        constraints.push_back(std::move(r1));
        constraints.push_back(std::move(r2));
    }
    return GeneratorMatrix(spec.field, total, std::move(constraints)).dual();
}

std::vector<uint16_t> gray_map(const MixedWord& l, const GrayMatrix& m) {
    if (m.m00.field() != l.field().get())
        throw std::invalid_argument("gray matrix over a different field");
    const Field& f = *l.field();
    std::vector<uint16_t> out(l.alpha() + 2 * l.beta(), 0);
    for (uint32_t i = 0; i < l.alpha(); ++i) out[i] = l.split()[i];
    for (uint32_t j = 0; j < l.beta(); ++j) {
        const FieldElement c1 = f.from_value(l.split()[l.alpha() + j]);
        const FieldElement c2 = f.from_value(l.split()[l.alpha() + l.beta() + j]);
        out[l.alpha() + 2 * j] = (c1 * m.m00 + c2 * m.m10).value();
        out[l.alpha() + 2 * j + 1] = (c1 * m.m01 + c2 * m.m11).value();
    }
    return out;
}

GeneratorMatrix gray_transform(const GeneratorMatrix& split_rows, uint32_t alpha,
                               const GrayMatrix& m) {
    const uint32_t n = split_rows.n();
    if (alpha > n || (n - alpha) % 2 != 0)
        throw std::invalid_argument("split length " + std::to_string(n) +
                                    " is not alpha + 2*beta for alpha = " +
                                    std::to_string(alpha));
    const uint32_t beta = (n - alpha) / 2;
    std::vector<std::vector<uint16_t>> rows;
    rows.reserve(split_rows.rows().size());
    for (const auto& row : split_rows.rows())
        rows.push_back(
            gray_map(MixedWord::from_split(split_rows.field_ptr(), alpha, beta, row), m));
    return {split_rows.field_ptr(), n, std::move(rows)};
}

GeneratorMatrix gray_image_matrix(const CodeSpec& spec, const GrayMatrix& m, bool checked) {
    const GeneratorMatrix span = checked ? module_span(spec) : module_span_unchecked(spec);
    return gray_transform(span, spec.alpha, m);
}

uint32_t lee_weight(const MixedWord& l, const GrayMatrix& m) {
    const std::vector<uint16_t> img = gray_map(l, m);
    return uint32_t(std::count_if(img.begin(), img.end(), [](uint16_t v) { return v != 0; }));
}

CodeSpec CodeSpec::parse_json(const std::string& text, std::vector<std::string>* warnings) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad code spec JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("code spec JSON must be an object");
    for (const char* key : {"q", "alpha", "beta"})
        if (!j.contains(key) || !j[key].is_number_unsigned())
            throw std::invalid_argument(std::string("code spec needs unsigned \"") + key +
                                        "\"");
    CodeSpec spec;
    spec.field = Field::make_q(j["q"].get<uint32_t>());
    spec.theta_exp = 0;
    if (j.contains("theta_exp")) {
        if (!j["theta_exp"].is_number_unsigned())
            throw std::invalid_argument("code spec \"theta_exp\" must be unsigned");
        spec.theta_exp = j["theta_exp"].get<uint32_t>();
    }
    spec.alpha = j["alpha"].get<uint32_t>();
    spec.beta = j["beta"].get<uint32_t>();
    auto poly = [&](const nlohmann::json& node, const char* name) {
        if (!node.is_string())
            throw std::invalid_argument(std::string("code spec \"") + name +
                                        "\" must be a polynomial string");
        ParsedPoly p = parse_any(spec.field, spec.theta_exp, node.get<std::string>());
        if (warnings)
            for (const auto& w : p.warnings) warnings->push_back(std::string(name) + ": " + w);
        return p.poly;
    };
    if (j.contains("pairs")) {
        if (!j["pairs"].is_array() || j["pairs"].empty())
            throw std::invalid_argument("code spec \"pairs\" must be a non-empty array");
        std::vector<GeneralGeneratorPair> pairs;
        for (const auto& node : j["pairs"]) {
            for (const char* key : {"k", "t1", "t2"})
                if (!node.is_object() || !node.contains(key))
                    throw std::invalid_argument(
                        std::string("each pair needs \"k\", \"t1\", \"t2\"; missing \"") + key +
                        "\"");
            pairs.push_back(
                {poly(node["k"], "k"), poly(node["t1"], "t1"), poly(node["t2"], "t2")});
        }
        spec.generators = std::move(pairs);
    } else {
        for (const char* key : {"f", "g1", "g2"})
            if (!j.contains(key))
                throw std::invalid_argument(std::string("code spec needs \"") + key +
                                            "\" (or \"pairs\")");
        spec.generators =
            SeparableGenerators{poly(j["f"], "f"), poly(j["g1"], "g1"), poly(j["g2"], "g2")};
    }
    validate_spec(spec);
    return spec;
}

std::string CodeSpec::json() const {
    validate_spec(*this);
    nlohmann::json j;
    j["q"] = field->q();
    j["theta_exp"] = theta_exp % field->m();
    j["alpha"] = alpha;
    j["beta"] = beta;
    if (separable()) {
        const auto& g = std::get<SeparableGenerators>(generators);
        j["f"] = g.f.canonical_str();
        j["g1"] = g.g1.canonical_str();
        j["g2"] = g.g2.canonical_str();
    } else {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& pr : std::get<std::vector<GeneralGeneratorPair>>(generators))
            pairs.push_back({{"k", pr.k.canonical_str()},
                             {"t1", pr.t1.canonical_str()},
                             {"t2", pr.t2.canonical_str()}});
        j["pairs"] = std::move(pairs);
    }
    return j.dump();
}

}  // namespace skewcode
