#include "skewcode/rring.hpp"

#include <cctype>
#include <stdexcept>

namespace skewcode {

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

RElement::RElement(FieldElement c1, FieldElement c2) : c1_(c1), c2_(c2) {
    if (c1_.field() != c2_.field())
        throw std::invalid_argument("RElement: coordinates from different fields");
}

RElement RElement::from_ab(FieldElement a, FieldElement b) { return {a, a + b}; }

RElement RElement::zero(const std::shared_ptr<const Field>& f) {
    return {f->zero(), f->zero()};
}

RElement RElement::one(const std::shared_ptr<const Field>& f) {
    return {f->one(), f->one()};
}

RElement RElement::u(const std::shared_ptr<const Field>& f) {
    return {f->zero(), f->one()};
}

RElement RElement::xi1(const std::shared_ptr<const Field>& f) {
    return {f->one(), f->zero()};
}

RElement RElement::xi2(const std::shared_ptr<const Field>& f) { return u(f); }

RElement RElement::parse(const std::shared_ptr<const Field>& f, const std::string& text) {
    std::string s = strip_ws(text);
    if (s.empty()) throw std::invalid_argument("RElement::parse: empty input");
    if (s.front() == '(') {
        if (s.back() != ')')
            throw std::invalid_argument("RElement::parse: unbalanced parentheses in '" + text + "'");
        std::string body = s.substr(1, s.size() - 2);
        auto bar = body.find('|');
        if (bar == std::string::npos || body.find('|', bar + 1) != std::string::npos)
            throw std::invalid_argument(
                "RElement::parse: coordinate form must be '(c1|c2)', got '" + text + "'");
        return {f->element(body.substr(0, bar)), f->element(body.substr(bar + 1))};
    }
    auto sep = s.find("+u*");
    if (sep == std::string::npos)
        throw std::invalid_argument(
            "RElement::parse: expected '<a>+u*<b>' or '(c1|c2)', got '" + text + "'");
    return from_ab(f->element(s.substr(0, sep)), f->element(s.substr(sep + 3)));
}

RElement RElement::inverse() const {
    if (!is_unit()) throw std::invalid_argument("RElement::inverse: " + str() + " is not a unit");
    return {c1_.inverse(), c2_.inverse()};
}

RElement RElement::theta(uint32_t i) const {
    const Field* f = c1_.field();
    return {f->frobenius(c1_, i), f->frobenius(c2_, i)};
}

std::string RElement::str() const {
    return "(" + c1_.str() + "|" + c2_.str() + ")";
}

std::string RElement::str_ab() const {
    return a().str() + "+u*" + b().str();
}

}  // namespace skewcode
