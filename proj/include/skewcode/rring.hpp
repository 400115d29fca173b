#pragma once

#include "skewcode/gf.hpp"

#include <memory>
#include <string>

namespace skewcode {

/// Element of R = F_q + uF_q with u^2 = u, held in idempotent (CRT)
/// coordinates (c1, c2) meaning xi1*c1 + xi2*c2 for xi1 = 1-u, xi2 = u.
/// The (a, b) form of a + ub converts by (c1, c2) = (a, a+b); arithmetic is
/// componentwise on the coordinates, so r is a unit iff both are nonzero.
class RElement {
public:
    RElement() = default;
    RElement(FieldElement c1, FieldElement c2);
    /// a + ub.
    static RElement from_ab(FieldElement a, FieldElement b);
    static RElement zero(const std::shared_ptr<const Field>& f);
    static RElement one(const std::shared_ptr<const Field>& f);
    static RElement u(const std::shared_ptr<const Field>& f);
    static RElement xi1(const std::shared_ptr<const Field>& f);
    static RElement xi2(const std::shared_ptr<const Field>& f);
    /// Accepts "<a>+u*<b>" or the coordinate form "(c1|c2)".
    static RElement parse(const std::shared_ptr<const Field>& f, const std::string& text);

    const Field* field() const { return c1_.field(); }
    FieldElement c1() const { return c1_; }
    FieldElement c2() const { return c2_; }
    FieldElement a() const { return c1_; }
    FieldElement b() const { return c2_ - c1_; }

    bool is_zero() const { return c1_.is_zero() && c2_.is_zero(); }
    bool is_unit() const { return !c1_.is_zero() && !c2_.is_zero(); }
    RElement inverse() const;
    /// theta^i: Frobenius on each coordinate (u, hence xi1 and xi2, is fixed).
    RElement theta(uint32_t i = 1) const;
    /// The projection a + ub -> a, a ring homomorphism with kernel uR.
    FieldElement eta() const { return c1_; }

    RElement operator-() const { return {-c1_, -c2_}; }
    friend RElement operator+(RElement r, RElement s) { return {r.c1_ + s.c1_, r.c2_ + s.c2_}; }
    friend RElement operator-(RElement r, RElement s) { return {r.c1_ - s.c1_, r.c2_ - s.c2_}; }
    friend RElement operator*(RElement r, RElement s) { return {r.c1_ * s.c1_, r.c2_ * s.c2_}; }
    friend bool operator==(RElement r, RElement s) { return r.c1_ == s.c1_ && r.c2_ == s.c2_; }
    friend bool operator!=(RElement r, RElement s) { return !(r == s); }

    /// Coordinate form "(c1|c2)".
    std::string str() const;
    /// The a + ub form "a+u*b".
    std::string str_ab() const;

private:
    FieldElement c1_, c2_;
};

}  // namespace skewcode
