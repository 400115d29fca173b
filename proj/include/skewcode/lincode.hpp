#pragma once

#include "skewcode/gf.hpp"
#include "skewcode/skewpoly.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace skewcode {

/// Row-generated linear code over F_q. Rows are kept as given; a reduced
/// row-echelon canonical form (computed once) backs rank, membership,
/// duality, and row-space comparison. Dimension k is the rank of the rows,
/// which may be smaller than the number of rows supplied.
class GeneratorMatrix {
public:
    /// rows: packed element values, each of length n. Zero rows count = 0.
    GeneratorMatrix(std::shared_ptr<const Field> field, uint32_t n,
                    std::vector<std::vector<uint16_t>> rows);

    const Field* field() const { return field_.get(); }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    uint32_t n() const { return n_; }
    uint32_t k() const { return uint32_t(canonical_.size()); }
    const std::vector<std::vector<uint16_t>>& rows() const { return rows_; }
    /// Reduced row-echelon form: k independent rows, unit pivots, sorted.
    const std::vector<std::vector<uint16_t>>& canonical() const { return canonical_; }
    const std::vector<uint32_t>& pivots() const { return pivots_; }

    bool contains_word(const std::vector<uint16_t>& word) const;
    /// True iff the row space of `inner` lies inside this row space.
    bool contains(const GeneratorMatrix& inner) const;
    bool same_row_space(const GeneratorMatrix& other) const;
    /// Basis of the Euclidean null space: (n-k) rows H with G·Hᵀ = 0.
    GeneratorMatrix dual() const;

    /// JSON array of rows, each an array of element tokens (as supplied).
    std::string json() const;
    /// Plain-text grid of the supplied rows, columns aligned.
    std::string grid() const;

private:
    std::shared_ptr<const Field> field_;
    uint32_t n_ = 0;
    std::vector<std::vector<uint16_t>> rows_;
    std::vector<std::vector<uint16_t>> canonical_;
    std::vector<uint32_t> pivots_;
};

/// Basis of the length-n skew cyclic code generated by g: rows j = 0..n-deg g-1
/// are the coefficient vectors of x^j * g (coefficients twisted by the j-th
/// automorphism power as they slide right; no wraparound occurs since
/// j + deg g < n). Unchecked: call sites own any divisibility precondition.
GeneratorMatrix twisted_shift_matrix(const SkewPoly& g, uint32_t n);

/// Same staircase, but verified: g must right-divide x^n - 1 (throws
/// verify_error otherwise), which makes the rows a basis of a genuine
/// skew cyclic code closed under the twisted shift.
GeneratorMatrix skew_code_matrix(const SkewPoly& g, uint32_t n);

/// (c_0,...,c_{n-1}) -> (Θ^t(c_{n-1}), Θ^t(c_0), ..., Θ^t(c_{n-2})).
std::vector<uint16_t> twisted_cyclic_shift(const Field& f, uint32_t theta_exp,
                                           const std::vector<uint16_t>& word);

enum class DistanceStrategy { Auto, Enumerate, ColumnDependence };

/// Accepts "auto", "enumerate", "column_dependence".
DistanceStrategy strategy_from_string(const std::string& name);

/// Work bound for distance computations: SKEWCODE_BUDGET from the
/// environment when set to a positive integer, otherwise 10^8.
uint64_t default_work_budget();

/// Exact minimum Hamming weight of the row space (k >= 1 required).
///
/// Enumerate walks one representative per scalar class of the q^k - 1
/// nonzero codewords and needs q^k <= budget. ColumnDependence finds the
/// smallest s such that s columns of the dual matrix are linearly dependent,
/// trying s = 1, 2, ... and requiring C(n,s)·(n-k) <= budget per stage.
/// Auto prefers ColumnDependence when n-k <= 8, Enumerate otherwise, and
/// falls back to the other strategy if the preferred one exceeds budget.
/// budget = 0 means default_work_budget(). jobs > 1 splits the
/// column-dependence stages by leading column; results are identical.
uint32_t min_distance(const GeneratorMatrix& g,
                      DistanceStrategy strategy = DistanceStrategy::Auto,
                      uint64_t budget = 0, uint32_t jobs = 1);

}  // namespace skewcode
