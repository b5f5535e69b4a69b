#pragma once

#include <vector>

#include "levi/func.hpp"

namespace levi {

/// One block [lo, hi] of the index partition, 1-based inclusive bounds.
struct Block {
    int lo;
    int hi;
    int length() const noexcept { return hi - lo + 1; }
};

/// The fixed data of the functional equation
///
///     f(xy) = g(x) h(y) + sum_{j=1}^{n} g_j(x) h_j(y)
///
/// where g_j = sum_{i in block j} b_i mu_i, the blocks partition [1, m] into
/// n >= 2 consecutive intervals of length >= 2, every coefficient b_i is
/// nonzero, and mu_1..mu_m are distinct nonzero multiplicative functions.
/// Construction validates all of that; distinctness plus multiplicativity
/// force the mu matrix to have full rank m, which is re-checked and treated
/// as an internal error if it ever failed.
class ProblemSpec {
public:
    static ProblemSpec make(MonoidPtr monoid, Field field, std::vector<Block> partition,
                            std::vector<Scalar> b, std::vector<MulFunc> mu);

    const MonoidPtr& monoid() const noexcept { return monoid_; }
    const Field& field() const noexcept { return field_; }
    int block_count() const noexcept { return static_cast<int>(partition_.size()); }  // n
    int term_count() const noexcept { return static_cast<int>(mu_.size()); }          // m
    const std::vector<Block>& partition() const noexcept { return partition_; }
    const Block& block(int j) const;          // 1-based
    const Scalar& coeff(int i) const;         // b_i, 1-based
    const MulFunc& mu(int i) const;           // mu_i, 1-based

    /// The block index j with n_j <= i <= m_j (1-based; IndexOutOfRange).
    int block_of(int i) const;

    /// g_j = sum_{i in block j} b_i mu_i (1-based; IndexOutOfRange).
    const Func& g_component(int j) const;

    std::vector<Func> mu_funcs() const;  // plain Func copies of mu_1..mu_m

private:
    ProblemSpec() : field_(Field::rationals()) {}
    MonoidPtr monoid_;
    Field field_;
    std::vector<Block> partition_;
    std::vector<Scalar> b_;
    std::vector<MulFunc> mu_;
    std::vector<Func> g_components_;  // precomputed g_1..g_n
};

/// The unknowns of the equation: (f, g, h, h_1..h_n).
struct SolutionTuple {
    Func f, g, h;
    std::vector<Func> hs;

    friend bool operator==(const SolutionTuple&, const SolutionTuple&) = default;

    /// Concatenated value vector f|g|h|h_1..h_n, the canonical dedup key.
    std::vector<Scalar> flatten() const;
    static bool canonical_less(const SolutionTuple& a, const SolutionTuple& b);
};

/// One violated pair of the equation with its exact defect.
struct Violation {
    int x, y;
    Scalar defect;  // f(xy) - g(x)h(y) - sum_j g_j(x)h_j(y)
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks the equation at all |M|^2 pairs; empty result iff t is a solution.
/// DomainMismatch when the tuple lives on a different monoid or field.
std::vector<Violation> residual(const ProblemSpec& spec, const SolutionTuple& t);

}  // namespace levi
