#include "skewcode/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace skewcode {

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/* Built-in Conway polynomials, ascending coefficients c0..cm.  Each is
   verified irreducible and primitive at construction, so a corrupt entry
   cannot produce a silently wrong field. */
struct ConwayEntry {
    uint32_t p, m;
    std::vector<uint32_t> coeffs;
};

const std::vector<ConwayEntry>& conway_table() {
    static const std::vector<ConwayEntry> table = {
        {2, 1, {1, 1}},
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 1, 1, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {3, 1, {1, 1}},
        {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {3, 6, {2, 2, 1, 0, 2, 0, 1}},
        {5, 1, {3, 1}},
        {5, 2, {2, 4, 1}},
        {7, 1, {4, 1}},
        {7, 2, {3, 6, 1}},
        {11, 1, {9, 1}},
        {13, 1, {11, 1}},
    };
    return table;
}

// Plain polynomial remainder over F_p; both inputs ascending, b monic.
std::vector<uint32_t> mod_poly(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
    while (a.size() >= b.size()) {
        uint32_t lead = a.back();
        if (lead != 0) {
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[off + i] = (a[off + i] + (p - lead % p) * b[i]) % p;
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Irreducibility over F_p by trial division against all monic polynomials
// of degree 1..deg/2; fine for the small degrees this library targets.
bool is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    uint32_t deg = uint32_t(f.size()) - 1;
    if (deg == 1) return true;
    for (uint32_t d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<uint32_t> g(d + 1, 0);
            uint64_t t = idx;
            for (uint32_t i = 0; i < d; ++i) {
                g[i] = uint32_t(t % p);
                t /= p;
            }
            g[d] = 1;
            if (mod_poly(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
    if (a.field_ == nullptr || a.field_ != b.field_)
        throw std::invalid_argument("field element arithmetic requires two elements of the same field");
    return {a.field_, a.field_->add_raw(a.value_, b.value_)};
}

FieldElement operator-(FieldElement a, FieldElement b) {
    if (a.field_ == nullptr || a.field_ != b.field_)
        throw std::invalid_argument("field element arithmetic requires two elements of the same field");
    return {a.field_, a.field_->sub_raw(a.value_, b.value_)};
}

FieldElement operator*(FieldElement a, FieldElement b) {
    if (a.field_ == nullptr || a.field_ != b.field_)
        throw std::invalid_argument("field element arithmetic requires two elements of the same field");
    return {a.field_, a.field_->mul_raw(a.value_, b.value_)};
}

FieldElement operator/(FieldElement a, FieldElement b) {
    if (a.field_ == nullptr || a.field_ != b.field_)
        throw std::invalid_argument("field element arithmetic requires two elements of the same field");
    return {a.field_, a.field_->div_raw(a.value_, b.value_)};
}

bool operator==(FieldElement a, FieldElement b) {
    if (a.field_ != b.field_)
        throw std::invalid_argument("field element comparison requires two elements of the same field");
    return a.value_ == b.value_;
}

FieldElement FieldElement::operator-() const {
    if (!field_) throw std::invalid_argument("uninitialized field element");
    return {field_, field_->neg_raw(value_)};
}

FieldElement FieldElement::inverse() const {
    if (!field_) throw std::invalid_argument("uninitialized field element");
    return {field_, field_->inv_raw(value_)};
}

FieldElement FieldElement::pow(long long e) const {
    if (!field_) throw std::invalid_argument("uninitialized field element");
    return {field_, field_->pow_raw(value_, e)};
}

std::string FieldElement::str() const {
    if (!field_) throw std::invalid_argument("uninitialized field element");
    return field_->element_str(value_);
}

uint16_t Field::inv_raw(uint16_t a) const {
    if (a == 0) throw std::invalid_argument("division by zero in GF(" + std::to_string(q_) + ")");
    return exp_[(q_ - 1) - uint32_t(log_[a])];
}

uint16_t Field::pow_raw(uint16_t a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw std::invalid_argument("zero to a negative power");
    }
    long long ord = q_ - 1;
    long long k = (int64_t(log_[a]) * (e % ord)) % ord;
    if (k < 0) k += ord;
    return exp_[size_t(k)];
}

uint16_t Field::add_slow(uint16_t a, uint16_t b) const {
    uint32_t res = 0, pp = 1;
    uint32_t x = a, y = b;
    while (x || y) {
        res += ((x % p_) + (y % p_)) % p_ * pp;
        x /= p_;
        y /= p_;
        pp *= p_;
    }
    return uint16_t(res);
}

void Field::build(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("field extension degree must be at least 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("field order p^m exceeds 2^16");
    }
    p_ = p;
    m_ = m;
    q_ = uint32_t(q);

    if (modulus.size() != size_t(m) + 1)
        throw std::invalid_argument("modulus must list m+1 ascending coefficients");
    std::vector<uint32_t> mod(modulus);
    for (auto& c : mod) c %= p;
    if (mod[m] != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(mod, p)) {
        std::ostringstream os;
        os << "modulus is reducible over GF(" << p << ")";
        throw std::invalid_argument(os.str());
    }
    modulus_.assign(mod.begin(), mod.end());

    // Multiply packed value by x and reduce: digits shift up one place and the
    // overflow digit t folds back through x^m = -(c_{m-1} x^{m-1}+...+c_0).
    std::vector<uint32_t> digits(m + 1, 0);
    auto mulx = [&](uint16_t v) {
        for (uint32_t i = 0; i < m; ++i) {
            digits[i] = v % p;
            v = uint16_t(v / p);
        }
        uint32_t t = digits[m - 1];
        uint32_t res = 0, pp = 1;
        for (uint32_t i = 0; i < m; ++i) {
            uint32_t lo = (i == 0) ? 0 : digits[i - 1];
            uint32_t d = (lo + t * (p - modulus_[i])) % p;
            res += d * pp;
            pp *= p;
        }
        return uint16_t(res);
    };

    log_.assign(q_, -1);
    exp_.assign(2 * size_t(q_ - 1), 0);
    uint16_t cur = 1;
    for (uint32_t k = 0; k < q_ - 1; ++k) {
        if (k > 0 && cur == 1) {
            std::ostringstream os;
            os << "x is not primitive for the given modulus; its powers repeat with period " << k;
            throw std::invalid_argument(os.str());
        }
        exp_[k] = cur;
        exp_[k + q_ - 1] = cur;
        log_[cur] = int32_t(k);
        cur = mulx(cur);
    }
    if (cur != 1) throw std::logic_error("field table construction failed to cycle");

    neg_.assign(q_, 0);
    for (uint32_t v = 0; v < q_; ++v) {
        uint32_t res = 0, pp = 1, x = v;
        for (uint32_t i = 0; i < m; ++i) {
            res += ((p - x % p) % p) * pp;
            x /= p;
            pp *= p;
        }
        neg_[v] = uint16_t(res);
    }

    if (q_ <= 1024) {
        add_.assign(size_t(q_) * q_, 0);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b < q_; ++b)
                add_[size_t(a) * q_ + b] = add_slow(uint16_t(a), uint16_t(b));
    }

    // frob_[j] maps w^k -> w^(k * p^j mod q-1), i.e. value -> value^(p^j).
    frob_.assign(m, std::vector<uint16_t>(q_, 0));
    for (uint32_t j = 0; j < m; ++j) {
        uint64_t e = 1;
        for (uint32_t t = 0; t < j; ++t) e = (e * p) % (q_ - 1);
        for (uint32_t v = 1; v < q_; ++v)
            frob_[j][v] = exp_[(uint64_t(log_[v]) * e) % (q_ - 1)];
    }
}

std::shared_ptr<const Field> Field::make(uint32_t p, uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("field extension degree must be at least 1");
    for (const auto& e : conway_table())
        if (e.p == p && e.m == m) return make(p, m, e.coeffs);
    std::ostringstream os;
    os << "no built-in modulus for GF(" << p << "^" << m << "); pass one explicitly";
    throw std::invalid_argument(os.str());
}

std::shared_ptr<const Field> Field::make(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    // Instances are interned per (p, m, modulus): equal parameters return the
    // same object, so element identity checks work across independently
    // constructed handles (JSON parsing, CLI arguments, test fixtures).
    static std::mutex cache_mutex;
    static std::map<std::vector<uint32_t>, std::weak_ptr<const Field>> cache;
    std::vector<uint32_t> key{p, m};
    key.insert(key.end(), modulus.begin(), modulus.end());
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end())
        if (auto hit = it->second.lock()) return hit;
    auto f = std::shared_ptr<Field>(new Field());
    f->build(p, m, modulus);
    cache[key] = f;
    return f;
}

std::shared_ptr<const Field> Field::make_q(uint64_t q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;  // q prime
    uint32_t m = 0;
    uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return make(uint32_t(p), m);
}

std::shared_ptr<const Field> Field::parse(const std::string& descriptor) {
    std::string s = descriptor;
    auto fail = [&]() -> std::shared_ptr<const Field> {
        throw std::invalid_argument("malformed field descriptor: " + descriptor);
    };
    if (s.rfind("GF(", 0) != 0) return fail();
    size_t close = s.find(')');
    if (close == std::string::npos) return fail();
    std::string inside = s.substr(3, close - 3);
    size_t caret = inside.find('^');
    uint64_t p = 0, m = 1;
    try {
        if (caret == std::string::npos) {
            p = std::stoull(inside);
        } else {
            p = std::stoull(inside.substr(0, caret));
            m = std::stoull(inside.substr(caret + 1));
        }
    } catch (const std::exception&) {
        return fail();
    }
    std::string rest = s.substr(close + 1);
    if (rest.empty()) return caret == std::string::npos ? make_q(p) : make(uint32_t(p), uint32_t(m));
    const std::string key = ";modulus=";
    if (rest.rfind(key, 0) != 0) return fail();
    std::vector<uint32_t> mod;
    std::string list = rest.substr(key.size());
    size_t pos = 0;
    while (pos <= list.size()) {
        size_t comma = list.find(',', pos);
        std::string tok = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            mod.push_back(uint32_t(std::stoul(tok)));
        } catch (const std::exception&) {
            return fail();
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return make(uint32_t(p), uint32_t(m), mod);
}

std::string Field::descriptor() const {
    std::ostringstream os;
    os << "GF(" << p_ << "^" << m_ << ");modulus=";
    for (size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ",";
        os << modulus_[i];
    }
    return os.str();
}

FieldElement Field::from_value(uint32_t v) const {
    if (v >= q_) throw std::invalid_argument("element value out of range");
    return {this, uint16_t(v)};
}

FieldElement Field::from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return {this, uint16_t(r)};
}

FieldElement Field::element(const std::string& token) const {
    std::string t;
    for (char c : token)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty field element token");
    bool negate = false;
    if (t[0] == '-') {
        negate = true;
        t = t.substr(1);
        if (t.empty()) throw std::invalid_argument("malformed field element token: " + token);
    }
    FieldElement e;
    if (t == "w") {
        e = generator();
    } else if (t.rfind("w^", 0) == 0) {
        std::string num = t.substr(2);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed field element token: " + token);
        e = from_power(std::stoull(num));
    } else {
        if (t.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed field element token: " + token);
        e = from_int(std::stoll(t));
    }
    return negate ? -e : e;
}

FieldElement Field::frobenius(FieldElement a, uint32_t i) const {
    if (a.field() != this) throw std::invalid_argument("frobenius applied to element of another field");
    return {this, frobenius_raw(a.value(), i)};
}

uint32_t Field::automorphism_order(uint32_t i) const {
    // gcd(m, 0) = m, so i ≡ 0 (mod m) correctly gives order 1.
    return m_ / std::gcd(m_, i % m_);
}

std::string Field::element_str(uint16_t v) const {
    if (v == 0) return "0";
    if (v < p_) return std::to_string(v);
    int32_t k = log_[v];
    if (k == 1) return "w";
    return "w^" + std::to_string(k);
}

}  // namespace skewcode
