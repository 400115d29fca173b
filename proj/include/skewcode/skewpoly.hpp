#pragma once

#include "skewcode/gf.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace skewcode {

/// Polynomial in the twisted ring F_q[x; TH] where TH(a) = a^(p^t):
/// multiplication obeys x a = TH(a) x, so (a x^i)(b x^j) = a TH^i(b) x^(i+j).
/// t = 0 (or any multiple of m) makes the ring plain commutative F_q[x].
///
/// Coefficients are stored ascending with no trailing zeros; the zero
/// polynomial has an empty coefficient vector and degree() == -1. The twist
/// exponent is reduced mod m at construction, so equal rings compare equal.
/// Operations between polynomials over different Field instances or with
/// different twist exponents throw std::invalid_argument, except the plain_*
/// family which ignores the twist tag.
class SkewPoly {
public:
    SkewPoly() = default;
    /// Zero polynomial.
    SkewPoly(std::shared_ptr<const Field> field, uint32_t theta_exp);
    /// Ascending packed coefficient values; trailing zeros are trimmed.
    SkewPoly(std::shared_ptr<const Field> field, uint32_t theta_exp, std::vector<uint16_t> ascending);

    static SkewPoly from_elements(std::shared_ptr<const Field> field, uint32_t theta_exp,
                                  const std::vector<FieldElement>& ascending);
    static SkewPoly constant(std::shared_ptr<const Field> field, uint32_t theta_exp, FieldElement c);
    static SkewPoly monomial(std::shared_ptr<const Field> field, uint32_t theta_exp, FieldElement c,
                             uint32_t deg);
    static SkewPoly x_pow_minus_one(std::shared_ptr<const Field> field, uint32_t theta_exp, uint32_t n);

    const std::shared_ptr<const Field>& field() const { return field_; }
    uint32_t theta_exp() const { return theta_exp_; }
    /// Order of TH in the automorphism group.
    uint32_t theta_order() const;
    const std::vector<uint16_t>& coeffs() const { return coeffs_; }
    int degree() const { return int(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    /// Coefficient of x^i (zero beyond the degree).
    FieldElement coeff(uint32_t i) const;
    FieldElement lead() const;

    /// Left-normalizes to leading coefficient 1 (throws on zero). A left
    /// constant never twists, so this preserves left multiples exactly.
    SkewPoly monic() const;
    /// For degree D: sum of TH^j(c_(D-j)) x^j — the twisted reversal used in
    /// dual computations. Plain reversal when TH = id.
    SkewPoly dagger() const;
    /// Plain coefficient reversal c_(D-j) x^j, no twist applied.
    SkewPoly reciprocal() const;
    /// The left multiple x^k * this: coefficients twist by TH^k and shift up.
    SkewPoly shifted(uint32_t k) const;
    /// Same coefficients reinterpreted under another twist exponent.
    SkewPoly with_theta(uint32_t theta_exp) const;

    /// Human form, descending, e.g. "x^3 + w^3x^2 + x + 1"; zero is "0".
    std::string str() const;
    /// Machine form: ascending comma-separated element tokens, e.g. "1,1,w^3,1".
    std::string canonical_str() const;
    /// Parses the ascending comma list produced by canonical_str; a single
    /// element token (no comma) is a constant.
    static SkewPoly parse(std::shared_ptr<const Field> field, uint32_t theta_exp,
                          const std::string& text);

    SkewPoly operator-() const;
    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
    /// Twisted product.
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
    /// Left scale: c * sum(a_i x^i) = sum(c a_i x^i), never twisted.
    friend SkewPoly operator*(FieldElement c, const SkewPoly& a);
    /// Right scale: sum(a_i x^i) * c = sum(a_i TH^i(c) x^i), twisted per term.
    friend SkewPoly operator*(const SkewPoly& a, FieldElement c);
    friend bool operator==(const SkewPoly& a, const SkewPoly& b);
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

private:
    void trim();
    const Field* raw_field() const;

    std::shared_ptr<const Field> field_;
    uint32_t theta_exp_ = 0;
    std::vector<uint16_t> coeffs_;  // ascending, trimmed
};

struct SkewDivMod {
    SkewPoly quot, rem;
};

/// Division from the right by b: a = quot * b + rem with deg rem < deg b.
/// b need not be monic. Throws std::invalid_argument on b = 0 or mixed rings.
SkewDivMod right_divmod(const SkewPoly& a, const SkewPoly& b);
/// True when right_divmod(a, b) leaves no remainder, i.e. a = q * b.
bool right_divides(const SkewPoly& b, const SkewPoly& a);

/// Coefficientwise commutative product/division/gcd in plain F_q[x]; the
/// twist tags of the operands are ignored and the result carries a's tag.
SkewPoly plain_mul(const SkewPoly& a, const SkewPoly& b);
SkewDivMod plain_divmod(const SkewPoly& a, const SkewPoly& b);
/// Monic gcd (zero when both inputs are zero).
SkewPoly plain_gcd(SkewPoly a, SkewPoly b);
/// base^e mod f in plain F_q[x], by square and multiply (deg f >= 1).
SkewPoly plain_powmod(const SkewPoly& base, uint64_t e, const SkewPoly& f);

/// Result of parsing polynomial text that may admit several readings.
struct ParsedPoly {
    SkewPoly poly;
    std::vector<std::string> warnings;
};

/// Compact descending-coefficient string, one token per coefficient with no
/// separators: `w` (optionally `w^<k>`) or a single digit below p. Exponent
/// digits are taken greedily while the value stays <= q-2; when several
/// complete readings exist the greedy one is chosen and a warning is issued.
/// Example over GF(9): "1w^3w^52" reads x^3 + w^3x^2 + w^5x + 2.
ParsedPoly parse_compact(std::shared_ptr<const Field> field, uint32_t theta_exp,
                         const std::string& text);

/// Accepts either syntax: text with a comma (or a lone canonical element
/// token) parses as the ascending list, anything else as compact descending.
/// Warns when both syntaxes parse to different polynomials.
ParsedPoly parse_any(std::shared_ptr<const Field> field, uint32_t theta_exp,
                     const std::string& text);

}  // namespace skewcode
