#include "skewcode/skewpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace skewcode {

namespace {

void require_same_field(const SkewPoly& a, const SkewPoly& b) {
    if (!a.field() || a.field().get() != b.field().get())
        throw std::invalid_argument("polynomial arithmetic requires operands over the same field");
}

void require_same_ring(const SkewPoly& a, const SkewPoly& b) {
    require_same_field(a, b);
    if (a.theta_exp() != b.theta_exp())
        throw std::invalid_argument("polynomial arithmetic requires operands with the same twist");
}

// TH^k as a Frobenius exponent, for TH = Frob^t over GF(p^m).
uint32_t twist(uint32_t t, uint64_t k, uint32_t m) { return uint32_t((uint64_t(t) * k) % m); }

}  // namespace

SkewPoly::SkewPoly(std::shared_ptr<const Field> field, uint32_t theta_exp) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("polynomial requires a field");
    theta_exp_ = theta_exp % field_->m();
}

SkewPoly::SkewPoly(std::shared_ptr<const Field> field, uint32_t theta_exp, std::vector<uint16_t> ascending)
    : SkewPoly(std::move(field), theta_exp) {
    for (uint16_t v : ascending)
        if (v >= field_->q()) throw std::invalid_argument("coefficient value out of field range");
    coeffs_ = std::move(ascending);
    trim();
}

SkewPoly SkewPoly::from_elements(std::shared_ptr<const Field> field, uint32_t theta_exp,
                                 const std::vector<FieldElement>& ascending) {
    if (!field) throw std::invalid_argument("polynomial requires a field");
    std::vector<uint16_t> vals;
    vals.reserve(ascending.size());
    for (const auto& e : ascending) {
        if (e.field() != field.get())
            throw std::invalid_argument("coefficient from a different field");
        vals.push_back(e.value());
    }
    return {std::move(field), theta_exp, std::move(vals)};
}

SkewPoly SkewPoly::constant(std::shared_ptr<const Field> field, uint32_t theta_exp, FieldElement c) {
    return from_elements(std::move(field), theta_exp, {c});
}

SkewPoly SkewPoly::monomial(std::shared_ptr<const Field> field, uint32_t theta_exp, FieldElement c,
                            uint32_t deg) {
    if (!field) throw std::invalid_argument("polynomial requires a field");
    if (c.field() != field.get()) throw std::invalid_argument("coefficient from a different field");
    std::vector<uint16_t> vals(deg + 1, 0);
    vals[deg] = c.value();
    return {std::move(field), theta_exp, std::move(vals)};
}

SkewPoly SkewPoly::x_pow_minus_one(std::shared_ptr<const Field> field, uint32_t theta_exp, uint32_t n) {
    if (!field) throw std::invalid_argument("polynomial requires a field");
    if (n < 1) throw std::invalid_argument("x^n - 1 requires n >= 1");
    std::vector<uint16_t> vals(n + 1, 0);
    vals[0] = field->neg_raw(1);
    vals[n] = 1;
    return {std::move(field), theta_exp, std::move(vals)};
}

uint32_t SkewPoly::theta_order() const {
    if (!field_) throw std::invalid_argument("uninitialized polynomial");
    return field_->automorphism_order(theta_exp_);
}

FieldElement SkewPoly::coeff(uint32_t i) const {
    if (!field_) throw std::invalid_argument("uninitialized polynomial");
    return {field_.get(), i < coeffs_.size() ? coeffs_[i] : uint16_t(0)};
}

FieldElement SkewPoly::lead() const {
    if (is_zero()) throw std::invalid_argument("the zero polynomial has no leading coefficient");
    return {field_.get(), coeffs_.back()};
}

void SkewPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Field* SkewPoly::raw_field() const {
    if (!field_) throw std::invalid_argument("uninitialized polynomial");
    return field_.get();
}

SkewPoly SkewPoly::monic() const {
    if (is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    return lead().inverse() * *this;
}

SkewPoly SkewPoly::dagger() const {
    const Field* F = raw_field();
    if (is_zero()) return *this;
    size_t D = coeffs_.size() - 1;
    std::vector<uint16_t> res(D + 1, 0);
    for (size_t j = 0; j <= D; ++j)
        res[j] = F->frobenius_raw(coeffs_[D - j], twist(theta_exp_, j, F->m()));
    return {field_, theta_exp_, std::move(res)};
}

SkewPoly SkewPoly::reciprocal() const {
    raw_field();
    std::vector<uint16_t> res(coeffs_.rbegin(), coeffs_.rend());
    return {field_, theta_exp_, std::move(res)};
}

SkewPoly SkewPoly::shifted(uint32_t k) const {
    const Field* F = raw_field();
    if (is_zero()) return *this;
    std::vector<uint16_t> res(coeffs_.size() + k, 0);
    uint32_t e = twist(theta_exp_, k, F->m());
    for (size_t i = 0; i < coeffs_.size(); ++i) res[i + k] = F->frobenius_raw(coeffs_[i], e);
    return {field_, theta_exp_, std::move(res)};
}

SkewPoly SkewPoly::with_theta(uint32_t theta_exp) const {
    raw_field();
    return {field_, theta_exp, coeffs_};
}

SkewPoly SkewPoly::operator-() const {
    const Field* F = raw_field();
    std::vector<uint16_t> res(coeffs_);
    for (auto& v : res) v = F->neg_raw(v);
    return {field_, theta_exp_, std::move(res)};
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    require_same_ring(a, b);
    const Field* F = a.field_.get();
    std::vector<uint16_t> res(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < res.size(); ++i) {
        uint16_t x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
        uint16_t y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
        res[i] = F->add_raw(x, y);
    }
    return {a.field_, a.theta_exp_, std::move(res)};
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    require_same_ring(a, b);
    const Field* F = a.field_.get();
    if (a.is_zero() || b.is_zero()) return {a.field_, a.theta_exp_};
    std::vector<uint16_t> res(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    uint32_t m = F->m();
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        uint32_t e = twist(a.theta_exp_, i, m);
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            uint16_t prod = F->mul_raw(a.coeffs_[i], F->frobenius_raw(b.coeffs_[j], e));
            res[i + j] = F->add_raw(res[i + j], prod);
        }
    }
    return {a.field_, a.theta_exp_, std::move(res)};
}

SkewPoly operator*(FieldElement c, const SkewPoly& a) {
    const Field* F = a.raw_field();
    if (c.field() != F) throw std::invalid_argument("scalar from a different field");
    std::vector<uint16_t> res(a.coeffs_);
    for (auto& v : res) v = F->mul_raw(c.value(), v);
    return {a.field_, a.theta_exp_, std::move(res)};
}

SkewPoly operator*(const SkewPoly& a, FieldElement c) {
    const Field* F = a.raw_field();
    if (c.field() != F) throw std::invalid_argument("scalar from a different field");
    std::vector<uint16_t> res(a.coeffs_);
    uint32_t m = F->m();
    for (size_t i = 0; i < res.size(); ++i)
        res[i] = F->mul_raw(res[i], F->frobenius_raw(c.value(), twist(a.theta_exp_, i, m)));
    return {a.field_, a.theta_exp_, std::move(res)};
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
    if (a.field_.get() != b.field_.get())
        throw std::invalid_argument("polynomial comparison requires operands over the same field");
    return a.theta_exp_ == b.theta_exp_ && a.coeffs_ == b.coeffs_;
}

SkewDivMod right_divmod(const SkewPoly& a, const SkewPoly& b) {
    require_same_ring(a, b);
    if (b.is_zero()) throw std::invalid_argument("right division by the zero polynomial");
    const Field& F = *a.field();
    uint32_t m = F.m(), t = a.theta_exp();
    int e = b.degree();
    if (a.degree() < e) return {SkewPoly(a.field(), t), a};

    std::vector<uint16_t> rem(a.coeffs());
    std::vector<uint16_t> quo(size_t(a.degree() - e) + 1, 0);
    uint16_t blead = b.coeffs().back();
    while (int(rem.size()) - 1 >= e) {
        int d = int(rem.size()) - 1 - e;
        // (c x^d)(b_e x^e) must cancel the leading term of the remainder.
        uint16_t c = F.div_raw(rem.back(), F.frobenius_raw(blead, twist(t, d, m)));
        quo[d] = c;
        uint32_t tw = twist(t, d, m);
        for (int j = 0; j <= e; ++j) {
            uint16_t prod = F.mul_raw(c, F.frobenius_raw(b.coeffs()[j], tw));
            rem[d + j] = F.sub_raw(rem[d + j], prod);
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {SkewPoly(a.field(), t, std::move(quo)), SkewPoly(a.field(), t, std::move(rem))};
}

bool right_divides(const SkewPoly& b, const SkewPoly& a) { return right_divmod(a, b).rem.is_zero(); }

SkewPoly plain_mul(const SkewPoly& a, const SkewPoly& b) {
    require_same_field(a, b);
    const Field* F = a.field().get();
    if (a.is_zero() || b.is_zero()) return {a.field(), a.theta_exp()};
    std::vector<uint16_t> res(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            res[i + j] = F->add_raw(res[i + j], F->mul_raw(a.coeffs()[i], b.coeffs()[j]));
    }
    return {a.field(), a.theta_exp(), std::move(res)};
}

SkewDivMod plain_divmod(const SkewPoly& a, const SkewPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const Field& F = *a.field();
    int e = b.degree();
    if (a.degree() < e) return {SkewPoly(a.field(), a.theta_exp()), a};
    std::vector<uint16_t> rem(a.coeffs());
    std::vector<uint16_t> quo(size_t(a.degree() - e) + 1, 0);
    uint16_t binv = F.inv_raw(b.coeffs().back());
    while (int(rem.size()) - 1 >= e) {
        int d = int(rem.size()) - 1 - e;
        uint16_t c = F.mul_raw(rem.back(), binv);
        quo[d] = c;
        for (int j = 0; j <= e; ++j)
            rem[d + j] = F.sub_raw(rem[d + j], F.mul_raw(c, b.coeffs()[j]));
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {SkewPoly(a.field(), a.theta_exp(), std::move(quo)),
            SkewPoly(a.field(), a.theta_exp(), std::move(rem))};
}

SkewPoly plain_gcd(SkewPoly a, SkewPoly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        SkewPoly r = plain_divmod(a, b).rem;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

SkewPoly plain_powmod(const SkewPoly& base, uint64_t e, const SkewPoly& f) {
    require_same_field(base, f);
    if (f.degree() < 1) throw std::invalid_argument("modulus must have degree at least 1");
    SkewPoly acc = SkewPoly::constant(base.field(), base.theta_exp(), base.field()->one());
    SkewPoly cur = plain_divmod(base, f).rem;
    while (e) {
        if (e & 1) acc = plain_divmod(plain_mul(acc, cur), f).rem;
        cur = plain_divmod(plain_mul(cur, cur), f).rem;
        e >>= 1;
    }
    return acc;
}

std::string SkewPoly::str() const {
    const Field* F = raw_field();
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        uint16_t c = coeffs_[size_t(i)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << F->element_str(c);
        } else {
            if (c != 1) os << F->element_str(c);
            os << (i == 1 ? "x" : "x^" + std::to_string(i));
        }
    }
    return os.str();
}

std::string SkewPoly::canonical_str() const {
    const Field* F = raw_field();
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << F->element_str(coeffs_[i]);
    }
    return os.str();
}

SkewPoly SkewPoly::parse(std::shared_ptr<const Field> field, uint32_t theta_exp,
                         const std::string& text) {
    if (!field) throw std::invalid_argument("polynomial requires a field");
    std::vector<uint16_t> vals;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        vals.push_back(field->element(tok).value());
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return {std::move(field), theta_exp, std::move(vals)};
}

namespace {

// Depth-first enumeration of the complete readings of a compact descending
// string, longest exponent first so the first recorded reading is the greedy
// one. Sequences are collected descending, deduplicated, and capped.
struct CompactScan {
    const Field* F;
    const std::string& s;
    size_t cap_readings = 32;
    uint64_t budget = 1 << 20;  // DFS step budget; generous for real inputs
    bool truncated = false;
    std::vector<std::vector<uint16_t>> readings;
    std::set<std::vector<uint16_t>> seen;
    std::vector<uint16_t> cur;

    void run(size_t pos) {
        if (budget == 0 || readings.size() >= cap_readings) {
            truncated = true;
            return;
        }
        --budget;
        if (pos == s.size()) {
            if (!cur.empty() && seen.insert(cur).second) readings.push_back(cur);
            return;
        }
        char c = s[pos];
        if (c == 'w') {
            if (pos + 1 < s.size() && s[pos + 1] == '^') {
                size_t start = pos + 2, end = start;
                while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
                if (end == start) return;  // "w^" with no digits
                // Candidate exponents: every digit prefix with value <= q-2.
                std::vector<size_t> lens;
                uint64_t v = 0;
                for (size_t l = 1; l <= end - start; ++l) {
                    v = v * 10 + uint64_t(s[start + l - 1] - '0');
                    if (v > uint64_t(F->q()) * 10) break;  // can only grow past q-2
                    if (v <= F->q() - 2) lens.push_back(l);
                }
                for (auto it = lens.rbegin(); it != lens.rend(); ++it) {
                    uint64_t val = 0;
                    for (size_t l = 0; l < *it; ++l) val = val * 10 + uint64_t(s[start + l] - '0');
                    cur.push_back(F->exp_raw(val));
                    run(start + *it);
                    cur.pop_back();
                }
            } else {
                cur.push_back(F->exp_raw(1));
                run(pos + 1);
                cur.pop_back();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            uint16_t v = uint16_t(c - '0');
            if (v < F->p()) {
                cur.push_back(v);
                run(pos + 1);
                cur.pop_back();
            }
        }
        // Any other character: dead end.
    }
};

}  // namespace

ParsedPoly parse_compact(std::shared_ptr<const Field> field, uint32_t theta_exp,
                         const std::string& text) {
    if (!field) throw std::invalid_argument("polynomial requires a field");
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty compact polynomial");

    CompactScan scan{field.get(), s};
    scan.run(0);
    if (scan.readings.empty())
        throw std::invalid_argument("cannot read compact polynomial \"" + text + "\"");

    // Readings are descending; the stored polynomial is ascending.
    std::vector<uint16_t> asc(scan.readings.front().rbegin(), scan.readings.front().rend());
    ParsedPoly out{SkewPoly(std::move(field), theta_exp, std::move(asc)), {}};
    if (scan.readings.size() > 1 || scan.truncated) {
        std::ostringstream os;
        os << "compact polynomial \"" << text << "\" admits " << (scan.truncated ? "at least " : "")
           << scan.readings.size()
           << " readings; using the greedy longest-exponent reading " << out.poly.canonical_str();
        out.warnings.push_back(os.str());
    }
    return out;
}

ParsedPoly parse_any(std::shared_ptr<const Field> field, uint32_t theta_exp,
                     const std::string& text) {
    if (!field) throw std::invalid_argument("polynomial requires a field");
    if (text.find(',') != std::string::npos) return {SkewPoly::parse(field, theta_exp, text), {}};

    bool have_compact = false, have_single = false;
    ParsedPoly compact;
    SkewPoly single;
    try {
        compact = parse_compact(field, theta_exp, text);
        have_compact = true;
    } catch (const std::invalid_argument&) {
    }
    try {
        single = SkewPoly::constant(field, theta_exp, field->element(text));
        have_single = true;
    } catch (const std::invalid_argument&) {
    }

    if (have_compact && have_single && compact.poly != single) {
        compact.warnings.push_back("\"" + text + "\" also reads as the single element " +
                                   single.canonical_str() + "; using the compact reading " +
                                   compact.poly.canonical_str());
        return compact;
    }
    if (have_compact) return compact;
    if (have_single) return {single, {}};
    throw std::invalid_argument("cannot parse polynomial \"" + text + "\" in either syntax");
}

}  // namespace skewcode
