#pragma once

#include "skewcode/fqr.hpp"
#include "skewcode/gf.hpp"
#include "skewcode/lincode.hpp"
#include "skewcode/skewpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace skewcode {

/// Which divisibility criterion certified the x block: `Coprime` tests
/// f·f* | x^alpha - 1 in the commutative ring (applies when gcd(alpha, |twist|)
/// = 1), `Divides` tests right-divisibility of h†h by x^alpha - 1 (applies
/// when |twist| divides alpha).
enum class DualRoute { Coprime, Divides };

std::string route_name(DualRoute route);

/// One divisibility test with its witnesses. `h` is the cofactor entering the
/// test (the quotient of x^len - 1 by the generator; for the coprime route,
/// the commutative cofactor of f). When ok, `quotient` re-multiplies exactly:
/// h†·h = quotient·(x^len - 1) on the twisted routes, and
/// x^alpha - 1 = quotient·(f·f*) on the coprime route.
struct DivCheck {
    bool ok = false;
    SkewPoly h;
    SkewPoly quotient;
};

/// Twisted test used on every block where x^len - 1 is central: computes the
/// cofactor h with x^len - 1 = h·g (throws verify_error when g does not
/// right-divide), then reports whether h†·h is right-divisible by x^len - 1.
DivCheck dagger_product_check(const SkewPoly& g, uint32_t len);

/// Coprime-route test on the x block: f must divide x^alpha - 1 in the
/// commutative ring (throws verify_error otherwise); reports whether f·f*
/// does too. `h` records the commutative cofactor of f itself.
DivCheck reciprocal_product_check(const SkewPoly& f, uint32_t alpha);

struct DualContainCertificate {
    DualRoute route = DualRoute::Coprime;
    DivCheck f_check, g1_check, g2_check;

    /// All three divisibility tests passed: the code contains its dual.
    bool valid() const { return f_check.ok && g1_check.ok && g2_check.ok; }
    /// {"dual_containing": bool, "route": "...", "witnesses": {...}}.
    std::string json() const;
};

/// Evaluates the dual-containment criteria for a separable code spec.
/// Requires |twist| to divide beta and either gcd(alpha, |twist|) = 1 or
/// |twist| | alpha; requires the generators to satisfy the same divisibility
/// preconditions as module_span. Violations throw verify_error.
DualContainCertificate check_dual_containing(const CodeSpec& spec);

/// Parameters [[n, k, d]]_q of a quantum stabilizer code.
struct QuantumParams {
    uint32_t q = 0;
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t d = 0;
    /// Optional provenance (code spec JSON, Gray matrix choice).
    std::string source;

    /// "[[n,k,d]]_q".
    std::string str() const;
    /// {"n","k","d","q"} plus "source" when set.
    std::string json() const;
};

/// CSS construction from a dual-containing [n, k_classical, d]_q code:
/// [[n, 2·k_classical - n, d]]_q. Throws verify_error when 2·k_classical < n.
QuantumParams css_params(uint32_t q, uint32_t n, uint32_t k_classical, uint32_t d,
                         std::string source = {});

/// n + 2 - k - 2d; zero means the quantum Singleton bound is met with
/// equality. Negative values are impossible parameters: verify_error.
uint32_t singleton_defect(const QuantumParams& p);

enum class CodeComparison { Better, Worse, Equal, Incomparable };

std::string comparison_name(CodeComparison c);

/// Compares by minimum distance and exact code rate k/n (cross-multiplied in
/// integers; no floating point): Better iff one parameter is strictly larger
/// and the other no smaller; Equal iff d and rate both tie; Incomparable when
/// each side wins one parameter. Requires the same q.
CodeComparison compare_codes(const QuantumParams& a, const QuantumParams& b);

/// The whole pipeline for one spec: Gray image, exact minimum distance,
/// certificate, and (when the certificate is valid) the CSS parameters.
struct QuantumBuild {
    GeneratorMatrix gray_image;
    uint32_t distance = 0;
    DualContainCertificate certificate;
    std::optional<QuantumParams> params;
};

QuantumBuild build_quantum_code(const CodeSpec& spec, const GrayMatrix& m,
                                DistanceStrategy strategy = DistanceStrategy::Auto,
                                uint64_t budget = 0, uint32_t jobs = 1);

/// Minimum weight over codewords of `code` outside the row space of
/// `excluded` — the distance of the CSS code measured on coset
/// representatives rather than all of `code`. Enumerates the full message
/// space: requires q^k·n <= budget (0 = default_work_budget()), else
/// budget_error. Returns 0 when every codeword is excluded.
uint32_t relative_min_distance(const GeneratorMatrix& code, const GeneratorMatrix& excluded,
                               uint64_t budget = 0);

/// A published code looked up from the reference table.
struct KnownCode {
    QuantumParams params;
    /// Bibliography label of the table it comes from.
    std::string source;
};

/// Directory of the reference table: SKEWCODE_DATA_DIR when set, else "data".
std::string default_data_dir();

/// Looks up the published benchmark for our code with parameters (q, n, d) in
/// <data_dir>/existing_codes.json (the benchmark's own length may differ).
/// data_dir empty means default_data_dir(). Missing file: verify_error;
/// missing entry: nullopt.
std::optional<KnownCode> find_reference_code(uint32_t q, uint32_t n, uint32_t d,
                                             const std::string& data_dir = {});

}  // namespace skewcode
