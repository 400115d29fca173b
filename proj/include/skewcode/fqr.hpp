#pragma once

#include "skewcode/gf.hpp"
#include "skewcode/lincode.hpp"
#include "skewcode/rring.hpp"
#include "skewcode/skewpoly.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace skewcode {

/// 2x2 matrix M over F_q with M·Mᵀ = γ·I₂, γ ≠ 0 (hence invertible):
/// the per-pair transform applied by the Gray map to each R-coordinate.
struct GrayMatrix {
    FieldElement m00, m01, m10, m11;
    FieldElement gamma;

    static GrayMatrix identity(const std::shared_ptr<const Field>& f);
    /// [[1,1],[1,-1]]; rejected in characteristic 2 where its γ = 2 vanishes.
    static GrayMatrix hadamard(const std::shared_ptr<const Field>& f);
    /// Entries row-major; validates the γ-orthogonality invariant.
    static GrayMatrix make(const std::shared_ptr<const Field>& f, FieldElement a, FieldElement b,
                           FieldElement c, FieldElement d);
    /// "identity" | "hadamard" | four comma-separated element tokens (row-major).
    static GrayMatrix parse(const std::shared_ptr<const Field>& f, const std::string& text);

    std::string str() const;
};

/// Word of F_q^alpha x R^beta, stored in split coordinates
/// [x_0..x_{alpha-1} | c1-parts | c2-parts] over the ground field.
class MixedWord {
public:
    MixedWord(std::shared_ptr<const Field> field, uint32_t alpha, uint32_t beta);
    MixedWord(std::shared_ptr<const Field> field, std::vector<FieldElement> x_part,
              std::vector<RElement> y_part);
    static MixedWord from_split(std::shared_ptr<const Field> field, uint32_t alpha,
                                uint32_t beta, const std::vector<uint16_t>& split);

    const std::shared_ptr<const Field>& field() const { return field_; }
    uint32_t alpha() const { return alpha_; }
    uint32_t beta() const { return beta_; }
    FieldElement x(uint32_t i) const;
    RElement y(uint32_t j) const;
    void set_x(uint32_t i, FieldElement v);
    void set_y(uint32_t j, RElement v);
    const std::vector<uint16_t>& split() const { return split_; }
    bool is_zero() const;

    friend MixedWord operator+(const MixedWord& a, const MixedWord& b);
    friend MixedWord operator-(const MixedWord& a, const MixedWord& b);
    friend bool operator==(const MixedWord& a, const MixedWord& b);
    friend bool operator!=(const MixedWord& a, const MixedWord& b) { return !(a == b); }

    /// "(x0,...,x_{alpha-1} | (c1|c2),...)".
    std::string str() const;

private:
    std::shared_ptr<const Field> field_;
    uint32_t alpha_ = 0, beta_ = 0;
    std::vector<uint16_t> split_;
};

/// s * (x, y) = (η(s)·x, s·y).
MixedWord scalar_action(const RElement& s, const MixedWord& l);

/// Simultaneous twisted rotation of both blocks:
/// (x_0..x_{alpha-1} | y_0..y_{beta-1}) ->
/// (Θ(x_{alpha-1}), Θ(x_0), .. | θ(y_{beta-1}), θ(y_0), ..).
MixedWord sigma_shift(const MixedWord& l, uint32_t theta_exp);

/// l·l' = u·Σ x_i x_i' + Σ y_j y_j', an element of R.
RElement mixed_inner_product(const MixedWord& l, const MixedWord& l2);

/// Generators of a separable code: the direct product of ⟨f⟩ on the x-block
/// and ⟨ξ₁g₁ + ξ₂g₂⟩ on the R-block.
struct SeparableGenerators {
    SkewPoly f, g1, g2;
};

/// One module generator (k(x) | ξ₁t₁(x) + ξ₂t₂(x)) for the general case.
struct GeneralGeneratorPair {
    SkewPoly k, t1, t2;
};

/// A mixed code of block lengths (alpha, beta) over F_q + uF_q with the
/// twist Θ = (a -> a^(p^theta_exp)) acting on both blocks.
struct CodeSpec {
    std::shared_ptr<const Field> field;
    uint32_t alpha = 0, beta = 0, theta_exp = 0;
    std::variant<SeparableGenerators, std::vector<GeneralGeneratorPair>> generators;

    bool separable() const { return generators.index() == 0; }
    uint32_t theta_order() const { return field->automorphism_order(theta_exp); }

    /// {"q", "theta_exp", "alpha", "beta", "f", "g1", "g2"} or, for the
    /// general case, "pairs": [{"k", "t1", "t2"}, ...]. Polynomials accept
    /// both the ascending comma syntax and the compact descending syntax;
    /// notes about ambiguous compact strings are appended to `warnings`.
    static CodeSpec parse_json(const std::string& text,
                               std::vector<std::string>* warnings = nullptr);
    std::string json() const;
};

/// Empty when the duality theory applies; otherwise a note that |θ| does not
/// divide beta, so the R-block quotient is only a left module and the
/// dual-side guarantees do not apply.
std::string duality_warning(const CodeSpec& spec);

/// F_q-basis of the code in split coordinates (length alpha + 2 beta).
///
/// Separable case: staircase blocks of f, g1, g2. The g-blocks are twisted
/// staircases. The x-block follows the divisibility reading of alpha: when
/// gcd(alpha, |Θ|) = 1 the shift-closed subspaces of length alpha are exactly
/// the commutative cyclic codes, so the block is the plain staircase of f and
/// f must divide x^alpha - 1 commutatively (the only reading whose dimensions
/// and duality match the worked configurations); otherwise the block is the
/// twisted staircase and f must right-divide x^alpha - 1 in the twisted ring.
/// General case: F_q-span closure of the generator words under sigma_shift
/// and scalar action by u and 1-u.
GeneratorMatrix module_span(const CodeSpec& spec);

/// Same block construction with no divisibility checks: the staircases are
/// built as given. Callers own the interpretation of defective generators.
GeneratorMatrix module_span_unchecked(const CodeSpec& spec);

/// Basis of {l' : l·l' = 0 for all l in the code}, via the split-coordinate
/// null space: each R-valued constraint contributes its two CRT components.
GeneratorMatrix mixed_dual(const CodeSpec& spec);

/// x-part copied; each pair (c1, c2) replaced by (c1, c2)·M at positions
/// alpha + 2j, alpha + 2j + 1.
std::vector<uint16_t> gray_map(const MixedWord& l, const GrayMatrix& m);

/// Row-wise Gray transform of a split-coordinate basis (layout change:
/// split [x | c1-block | c2-block] to interleaved per-pair coordinates).
/// alpha fixes the split point; the R-block length is (n - alpha) / 2.
GeneratorMatrix gray_transform(const GeneratorMatrix& split_rows, uint32_t alpha,
                               const GrayMatrix& m);

/// gray_transform(module_span(spec)) — checked = false uses the unchecked span.
GeneratorMatrix gray_image_matrix(const CodeSpec& spec, const GrayMatrix& m,
                                  bool checked = true);

/// Hamming weight of gray_map(l, m).
uint32_t lee_weight(const MixedWord& l, const GrayMatrix& m);

}  // namespace skewcode
