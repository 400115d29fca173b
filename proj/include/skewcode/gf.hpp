#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewcode {

/// Semantic failure while verifying or constructing a code (bad generator,
/// failed criterion precondition, exhausted budget). CLI maps this to exit 1;
/// malformed input (std::invalid_argument) maps to exit 2.
class verify_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured work bound was exceeded; carries the failed bound.
class budget_error : public verify_error {
public:
    budget_error(const std::string& what, uint64_t required, uint64_t budget)
        : verify_error(what), required_(required), budget_(budget) {}
    uint64_t required() const { return required_; }
    uint64_t budget() const { return budget_; }

private:
    uint64_t required_, budget_;
};

class Field;

/// Element of a finite field, tagged with the field it belongs to.
/// Arithmetic between elements of different Field instances throws.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field* field, uint16_t value) : field_(field), value_(value) {}

    const Field* field() const { return field_; }
    uint16_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long long e) const;
    std::string str() const;

    friend FieldElement operator+(FieldElement a, FieldElement b);
    friend FieldElement operator-(FieldElement a, FieldElement b);
    friend FieldElement operator*(FieldElement a, FieldElement b);
    friend FieldElement operator/(FieldElement a, FieldElement b);
    friend bool operator==(FieldElement a, FieldElement b);
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

private:
    const Field* field_ = nullptr;
    uint16_t value_ = 0;
};

/// GF(p^m) with table-driven arithmetic.
///
/// Elements are packed base-p coefficient vectors of the residue class ring
/// F_p[x]/(modulus); value 0 is zero and every nonzero value is w^k for the
/// residue class w of x, which must be primitive (construction verifies).
/// Create through Field::make / Field::make_q / Field::parse; the returned
/// shared_ptr owns the tables, and all dependent objects keep raw pointers.
/// Instances are interned: factories return the same object for equal
/// (p, m, modulus), so elements of independently made handles mix freely.
class Field {
public:
    /// Modulus defaults to the built-in Conway polynomial for (p, m).
    static std::shared_ptr<const Field> make(uint32_t p, uint32_t m);
    /// Explicit modulus, ascending coefficients c0..cm, monic, irreducible,
    /// with x primitive; violations throw std::invalid_argument.
    static std::shared_ptr<const Field> make(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);
    /// Factors q = p^m and delegates to make(p, m).
    static std::shared_ptr<const Field> make_q(uint64_t q);
    /// Parses "GF(<p>^<m>)" optionally followed by ";modulus=<c0>,...,<cm>".
    static std::shared_ptr<const Field> parse(const std::string& descriptor);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    const std::vector<uint16_t>& modulus() const { return modulus_; }
    /// Canonical descriptor, e.g. "GF(3^2);modulus=2,2,1".
    std::string descriptor() const;

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    /// The primitive element w (residue class of x).
    FieldElement generator() const { return {this, exp_[1]}; }
    FieldElement from_value(uint32_t v) const;
    /// Prime-subfield element n mod p.
    FieldElement from_int(long long n) const;
    /// w^k.
    FieldElement from_power(uint64_t k) const { return {this, exp_raw(k)}; }
    /// Parses one element token: 0 | <decimal> | w | w^<k>, optional leading '-'.
    FieldElement element(const std::string& token) const;

    // Raw kernel operations on packed values (no field tag checks).
    uint16_t add_raw(uint16_t a, uint16_t b) const {
        return add_.empty() ? add_slow(a, b) : add_[size_t(a) * q_ + b];
    }
    uint16_t neg_raw(uint16_t a) const { return neg_[a]; }
    uint16_t sub_raw(uint16_t a, uint16_t b) const { return add_raw(a, neg_[b]); }
    uint16_t mul_raw(uint16_t a, uint16_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[size_t(log_[a]) + size_t(log_[b])];
    }
    uint16_t inv_raw(uint16_t a) const;
    uint16_t div_raw(uint16_t a, uint16_t b) const { return mul_raw(a, inv_raw(b)); }
    uint16_t pow_raw(uint16_t a, long long e) const;
    int32_t log_raw(uint16_t a) const { return log_[a]; }
    uint16_t exp_raw(uint64_t k) const { return exp_[k % (q_ - 1)]; }
    /// a^(p^(i mod m)): one table lookup.
    uint16_t frobenius_raw(uint16_t a, uint32_t i) const { return frob_[i % m_][a]; }

    FieldElement frobenius(FieldElement a, uint32_t i) const;
    /// Order of the automorphism a -> a^(p^i): m / gcd(m, i).
    uint32_t automorphism_order(uint32_t i) const;

    std::string element_str(uint16_t v) const;

private:
    Field() = default;
    void build(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);
    uint16_t add_slow(uint16_t a, uint16_t b) const;

    uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<uint16_t> modulus_;            // ascending, size m+1, monic
    std::vector<uint16_t> exp_;                // size 2(q-1): exp_[k] = w^k, doubled
    std::vector<int32_t> log_;                 // size q, log_[0] = -1
    std::vector<uint16_t> add_;                // q*q when q <= 1024, else empty
    std::vector<uint16_t> neg_;                // size q
    std::vector<std::vector<uint16_t>> frob_;  // m tables: a -> a^(p^j)
};

}  // namespace skewcode
