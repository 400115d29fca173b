#include "skewcode/lincode.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

namespace skewcode {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<uint32_t> rref(const Field& f, std::vector<std::vector<uint16_t>>& rows, uint32_t n) {
    std::vector<uint32_t> pivots;
    size_t lead = 0;
    for (uint32_t col = 0; col < n && lead < rows.size(); ++col) {
        size_t found = lead;
        while (found < rows.size() && rows[found][col] == 0) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[lead], rows[found]);
        uint16_t inv = f.inv_raw(rows[lead][col]);
        for (uint32_t j = col; j < n; ++j) rows[lead][j] = f.mul_raw(rows[lead][j], inv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0) continue;
            uint16_t c = rows[r][col];
            for (uint32_t j = col; j < n; ++j)
                rows[r][j] = f.sub_raw(rows[r][j], f.mul_raw(c, rows[lead][j]));
        }
        pivots.push_back(col);
        ++lead;
    }
    rows.resize(pivots.size());
    return pivots;
}

// Reduces word against canonical rows in place; true iff it hits zero.
bool reduces_to_zero(const Field& f, const std::vector<std::vector<uint16_t>>& canonical,
                     const std::vector<uint32_t>& pivots, std::vector<uint16_t>& word) {
    for (size_t i = 0; i < canonical.size(); ++i) {
        uint16_t c = word[pivots[i]];
        if (c == 0) continue;
        const auto& row = canonical[i];
        for (size_t j = 0; j < word.size(); ++j)
            word[j] = f.sub_raw(word[j], f.mul_raw(c, row[j]));
    }
    for (uint16_t v : word)
        if (v != 0) return false;
    return true;
}

// C(n, s) saturating at cap.
uint64_t binom_sat(uint32_t n, uint32_t s, uint64_t cap) {
    if (s > n) return 0;
    unsigned __int128 res = 1;
    for (uint32_t i = 1; i <= s; ++i) {
        res = res * (n - s + i) / i;
        if (res > cap) return cap;
    }
    return uint64_t(res);
}

// q^k saturating at cap.
uint64_t pow_sat(uint64_t q, uint32_t k, uint64_t cap) {
    unsigned __int128 res = 1;
    for (uint32_t i = 0; i < k; ++i) {
        res *= q;
        if (res > cap) return cap;
    }
    return uint64_t(res);
}

uint32_t hamming_weight(const std::vector<uint16_t>& v) {
    uint32_t w = 0;
    for (uint16_t x : v)
        if (x != 0) ++w;
    return w;
}

// One representative per scalar class: messages whose first nonzero digit is 1.
class EnumerateSearch {
public:
    EnumerateSearch(const Field& f, const std::vector<std::vector<uint16_t>>& rows, uint32_t n)
        : f_(f), rows_(rows), n_(n), k_(uint32_t(rows.size())),
          scratch_(rows.size() + 1, std::vector<uint16_t>(n, 0)), best_(n + 1) {}

    uint32_t run() {
        walk(0, false, scratch_[0]);
        return best_;
    }

private:
    void walk(uint32_t level, bool nonzero, const std::vector<uint16_t>& acc) {
        if (best_ == 1) return;
        if (level == k_) {
            if (nonzero) best_ = std::min(best_, hamming_weight(acc));
            return;
        }
        walk(level + 1, nonzero, acc);  // scalar 0: accumulator unchanged
        auto& next = scratch_[level + 1];
        // The first nonzero scalar is normalized to 1: weights are invariant
        // under scaling, so one representative per scalar class suffices.
        uint32_t limit = nonzero ? f_.q() : 2u;
        for (uint32_t c = 1; c < limit; ++c) {
            for (uint32_t j = 0; j < n_; ++j)
                next[j] = f_.add_raw(acc[j], f_.mul_raw(uint16_t(c), rows_[level][j]));
            walk(level + 1, true, next);
            if (best_ == 1) return;
        }
    }

    const Field& f_;
    const std::vector<std::vector<uint16_t>>& rows_;
    uint32_t n_, k_;
    std::vector<std::vector<uint16_t>> scratch_;
    uint32_t best_;
};

uint32_t enumerate_distance(const GeneratorMatrix& g, uint64_t budget) {
    uint64_t states = pow_sat(g.field()->q(), g.k(), UINT64_MAX);
    if (states > budget)
        throw budget_error("min_distance enumerate: q^k = " +
                               (states == UINT64_MAX ? std::string("overflow")
                                                     : std::to_string(states)) +
                               " codeword classes exceed the work budget " +
                               std::to_string(budget),
                           states, budget);
    return EnumerateSearch(*g.field(), g.canonical(), g.n()).run();
}

// Columns of the dual matrix, each of length r = n - k.
std::vector<std::vector<uint16_t>> dual_columns(const GeneratorMatrix& g) {
    GeneratorMatrix h = g.dual();
    std::vector<std::vector<uint16_t>> cols(g.n(), std::vector<uint16_t>(h.k()));
    for (uint32_t j = 0; j < g.n(); ++j)
        for (uint32_t i = 0; i < h.k(); ++i) cols[j][i] = h.canonical()[i][j];
    return cols;
}

// DFS over s-subsets with a fixed leading column, keeping an incremental
// echelon of the chosen columns. Every subset of size < s is independent
// (earlier stages ruled dependence out), so only the last column is tested.
class StageSearch {
public:
    StageSearch(const Field& f, const std::vector<std::vector<uint16_t>>& cols, uint32_t s,
                std::atomic<bool>& found)
        : f_(f), cols_(cols), r_(uint32_t(cols.empty() ? 0 : cols[0].size())), s_(s),
          found_(found) {}

    void run_from(uint32_t lead) {
        echelon_.clear();
        pivots_.clear();
        if (!push(lead)) return;  // a lone column never reduces to zero here
        extend(lead + 1, 1);
        pop();
    }

private:
    // Reduces cols_[j] against the echelon; returns the reduced column.
    std::vector<uint16_t> reduce(uint32_t j) const {
        std::vector<uint16_t> v = cols_[j];
        for (size_t i = 0; i < echelon_.size(); ++i) {
            uint16_t c = v[pivots_[i]];
            if (c == 0) continue;
            for (uint32_t t = 0; t < r_; ++t)
                v[t] = f_.sub_raw(v[t], f_.mul_raw(c, echelon_[i][t]));
        }
        return v;
    }

    bool push(uint32_t j) {
        std::vector<uint16_t> v = reduce(j);
        uint32_t p = 0;
        while (p < r_ && v[p] == 0) ++p;
        if (p == r_) return false;
        uint16_t inv = f_.inv_raw(v[p]);
        for (uint32_t t = 0; t < r_; ++t) v[t] = f_.mul_raw(v[t], inv);
        echelon_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    void pop() {
        echelon_.pop_back();
        pivots_.pop_back();
    }

    void extend(uint32_t start, uint32_t depth) {
        if (found_.load(std::memory_order_relaxed)) return;
        if (depth + 1 == s_) {
            for (uint32_t j = start; j < cols_.size(); ++j) {
                std::vector<uint16_t> v = reduce(j);
                if (std::all_of(v.begin(), v.end(), [](uint16_t x) { return x == 0; })) {
                    found_.store(true, std::memory_order_relaxed);
                    return;
                }
            }
            return;
        }
        for (uint32_t j = start; j + (s_ - depth) <= cols_.size(); ++j) {
            if (found_.load(std::memory_order_relaxed)) return;
            if (!push(j)) {
                // Dependence below stage size: earlier stages make this
                // unreachable, but treat it as a find rather than miss it.
                found_.store(true, std::memory_order_relaxed);
                return;
            }
            extend(j + 1, depth + 1);
            pop();
        }
    }

    const Field& f_;
    const std::vector<std::vector<uint16_t>>& cols_;
    uint32_t r_, s_;
    std::atomic<bool>& found_;
    std::vector<std::vector<uint16_t>> echelon_;
    std::vector<uint32_t> pivots_;
};

uint32_t column_dependence_distance(const GeneratorMatrix& g, uint64_t budget, uint32_t jobs) {
    const Field& f = *g.field();
    uint32_t n = g.n(), r = n - g.k();
    std::vector<std::vector<uint16_t>> cols = dual_columns(g);

    // s = 1: a zero column (always the case when r = 0).
    for (const auto& col : cols)
        if (std::all_of(col.begin(), col.end(), [](uint16_t x) { return x == 0; })) return 1;

    // s = 2: proportional columns collide after unit normalization.
    std::set<std::vector<uint16_t>> seen;
    for (const auto& col : cols) {
        std::vector<uint16_t> norm = col;
        uint32_t p = 0;
        while (norm[p] == 0) ++p;
        uint16_t inv = f.inv_raw(norm[p]);
        for (auto& x : norm) x = f.mul_raw(x, inv);
        if (!seen.insert(norm).second) return 2;
    }

    for (uint32_t s = 3; s <= r + 1; ++s) {
        uint64_t subsets = binom_sat(n, s, UINT64_MAX);
        uint64_t stage_cost = subsets > UINT64_MAX / r ? UINT64_MAX : subsets * r;
        if (stage_cost > budget)
            throw budget_error("min_distance column_dependence: stage s=" + std::to_string(s) +
                                   " needs C(n,s)*(n-k) = " +
                                   (stage_cost == UINT64_MAX ? std::string("overflow")
                                                             : std::to_string(stage_cost)) +
                                   " work units, budget " + std::to_string(budget),
                               stage_cost, budget);

        std::atomic<bool> found{false};
        uint32_t workers = std::max<uint32_t>(1, jobs);
        if (workers == 1) {
            StageSearch search(f, cols, s, found);
            for (uint32_t lead = 0; lead + s <= n && !found.load(std::memory_order_relaxed);
                 ++lead)
                search.run_from(lead);
        } else {
            std::atomic<uint32_t> next_lead{0};
            auto worker = [&] {
                StageSearch search(f, cols, s, found);
                for (;;) {
                    uint32_t lead = next_lead.fetch_add(1, std::memory_order_relaxed);
                    if (lead + s > n || found.load(std::memory_order_relaxed)) return;
                    search.run_from(lead);
                }
            };
            std::vector<std::thread> pool;
            for (uint32_t t = 0; t < workers; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        if (found.load()) return s;
    }
    throw verify_error("min_distance column_dependence: no dependent column set found");
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(std::shared_ptr<const Field> field, uint32_t n,
                                 std::vector<std::vector<uint16_t>> rows)
    : field_(std::move(field)), n_(n), rows_(std::move(rows)) {
    if (!field_) throw std::invalid_argument("GeneratorMatrix: null field");
    if (n_ == 0) throw std::invalid_argument("GeneratorMatrix: length must be positive");
    for (const auto& row : rows_) {
        if (row.size() != n_)
            throw std::invalid_argument("GeneratorMatrix: row length " +
                                        std::to_string(row.size()) + " != n = " +
                                        std::to_string(n_));
        for (uint16_t v : row)
            if (v >= field_->q())
                throw std::invalid_argument("GeneratorMatrix: element value out of range");
    }
    canonical_ = rows_;
    pivots_ = rref(*field_, canonical_, n_);
}

bool GeneratorMatrix::contains_word(const std::vector<uint16_t>& word) const {
    if (word.size() != n_)
        throw std::invalid_argument("contains_word: word length != code length");
    std::vector<uint16_t> w = word;
    return reduces_to_zero(*field_, canonical_, pivots_, w);
}

bool GeneratorMatrix::contains(const GeneratorMatrix& inner) const {
    if (inner.field_.get() != field_.get())
        throw std::invalid_argument("contains: codes over different fields");
    if (inner.n_ != n_) throw std::invalid_argument("contains: codes of different lengths");
    for (const auto& row : inner.canonical_)
        if (!contains_word(row)) return false;
    return true;
}

bool GeneratorMatrix::same_row_space(const GeneratorMatrix& other) const {
    return field_.get() == other.field_.get() && n_ == other.n_ &&
           canonical_ == other.canonical_;
}

GeneratorMatrix GeneratorMatrix::dual() const {
    std::vector<bool> is_pivot(n_, false);
    for (uint32_t p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<uint16_t>> rows;
    rows.reserve(n_ - k());
    for (uint32_t free = 0; free < n_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint16_t> v(n_, 0);
        v[free] = 1;
        for (size_t i = 0; i < canonical_.size(); ++i)
            v[pivots_[i]] = field_->neg_raw(canonical_[i][free]);
        rows.push_back(std::move(v));
    }
    return {field_, n_, std::move(rows)};
}

std::string GeneratorMatrix::json() const {
    std::string out = "[";
    for (size_t i = 0; i < rows_.size(); ++i) {
        out += i ? ",[" : "[";
        for (uint32_t j = 0; j < n_; ++j) {
            if (j) out += ",";
            out += "\"" + field_->element_str(rows_[i][j]) + "\"";
        }
        out += "]";
    }
    out += "]";
    return out;
}

std::string GeneratorMatrix::grid() const {
    size_t width = 1;
    for (const auto& row : rows_)
        for (uint16_t v : row) width = std::max(width, field_->element_str(v).size());
    std::string out;
    for (const auto& row : rows_) {
        for (uint32_t j = 0; j < n_; ++j) {
            std::string tok = field_->element_str(row[j]);
            out += std::string(width - tok.size(), ' ') + tok;
            out += (j + 1 < n_) ? " " : "";
        }
        out += "\n";
    }
    return out;
}

GeneratorMatrix twisted_shift_matrix(const SkewPoly& g, uint32_t n) {
    if (g.is_zero()) throw std::invalid_argument("twisted_shift_matrix: zero generator");
    if (uint32_t(g.degree()) > n)
        throw std::invalid_argument("twisted_shift_matrix: generator degree exceeds length");
    std::vector<std::vector<uint16_t>> rows;
    uint32_t d = uint32_t(g.degree());
    for (uint32_t j = 0; d + j < n; ++j) {
        SkewPoly shifted = g.shifted(j);
        std::vector<uint16_t> row(n, 0);
        for (size_t i = 0; i < shifted.coeffs().size(); ++i) row[i] = shifted.coeffs()[i];
        rows.push_back(std::move(row));
    }
    return {g.field(), n, std::move(rows)};
}

GeneratorMatrix skew_code_matrix(const SkewPoly& g, uint32_t n) {
    if (g.is_zero()) throw std::invalid_argument("skew_code_matrix: zero generator");
    SkewPoly modulus = SkewPoly::x_pow_minus_one(g.field(), g.theta_exp(), n);
    if (!right_divides(g, modulus))
        throw verify_error("skew_code_matrix: generator " + g.str() +
                           " does not right-divide x^" + std::to_string(n) + "-1");
    return twisted_shift_matrix(g, n);
}

std::vector<uint16_t> twisted_cyclic_shift(const Field& f, uint32_t theta_exp,
                                           const std::vector<uint16_t>& word) {
    if (word.empty()) return word;
    std::vector<uint16_t> out(word.size());
    out[0] = f.frobenius_raw(word.back(), theta_exp);
    for (size_t i = 1; i < word.size(); ++i) out[i] = f.frobenius_raw(word[i - 1], theta_exp);
    return out;
}

DistanceStrategy strategy_from_string(const std::string& name) {
    if (name == "auto") return DistanceStrategy::Auto;
    if (name == "enumerate") return DistanceStrategy::Enumerate;
    if (name == "column_dependence") return DistanceStrategy::ColumnDependence;
    throw std::invalid_argument("unknown distance strategy '" + name +
                                "' (expected auto, enumerate, or column_dependence)");
}

uint64_t default_work_budget() {
    if (const char* env = std::getenv("SKEWCODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100000000ULL;  // 10^8
}

uint32_t min_distance(const GeneratorMatrix& g, DistanceStrategy strategy, uint64_t budget,
                      uint32_t jobs) {
    if (g.k() == 0)
        throw std::invalid_argument("min_distance: the zero code has no minimum distance");
    if (budget == 0) budget = default_work_budget();

    switch (strategy) {
        case DistanceStrategy::Enumerate:
            return enumerate_distance(g, budget);
        case DistanceStrategy::ColumnDependence:
            return column_dependence_distance(g, budget, jobs);
        case DistanceStrategy::Auto:
            break;
    }

    bool prefer_columns = (g.n() - g.k()) <= 8;
    DistanceStrategy order[2] = {
        prefer_columns ? DistanceStrategy::ColumnDependence : DistanceStrategy::Enumerate,
        prefer_columns ? DistanceStrategy::Enumerate : DistanceStrategy::ColumnDependence};
    std::string failures;
    uint64_t max_required = 0;
    for (DistanceStrategy s : order) {
        try {
            return min_distance(g, s, budget, jobs);
        } catch (const budget_error& e) {
            failures += failures.empty() ? "" : "; ";
            failures += e.what();
            max_required = std::max(max_required, e.required());
        }
    }
    throw budget_error("min_distance: every strategy exceeded its work budget (" + failures + ")",
                       max_required, budget);
}

}  // namespace skewcode
