#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "levi/monoid.hpp"
#include "levi/scalar.hpp"

namespace levi {

/// A K-valued function on a finite monoid, stored as a dense vector of exact
/// scalars indexed by monoid element. Immutable in practice: all operations
/// return fresh values.
class Func {
public:
    Func(MonoidPtr monoid, Field field, std::vector<Scalar> values);

    static Func zero(const MonoidPtr& m, const Field& f);
    static Func constant(const MonoidPtr& m, const Scalar& value);

    const Scalar& operator()(int x) const { return values_.at(static_cast<std::size_t>(x)); }
    const std::vector<Scalar>& values() const noexcept { return values_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }
    const Field& field() const noexcept { return field_; }
    const MonoidPtr& monoid() const noexcept { return monoid_; }

    bool is_zero() const;

    friend bool operator==(const Func& a, const Func& b) {
        return same_monoid(a.monoid_, b.monoid_) && a.field_ == b.field_ &&
               a.values_ == b.values_;
    }

    /// Lexicographic order on value vectors (canonical scalar order entrywise).
    static bool canonical_less(const Func& a, const Func& b);

private:
    MonoidPtr monoid_;
    Field field_;
    std::vector<Scalar> values_;
};

// Pointwise arithmetic; operands must share monoid and field (MixedDomains).
Func pointwise_add(const Func& a, const Func& b);
Func pointwise_sub(const Func& a, const Func& b);
Func pointwise_neg(const Func& a);
Func pointwise_scale(const Scalar& c, const Func& a);
Func pointwise_mul(const Func& a, const Func& b);

/// True iff phi(xy) = phi(x)phi(y) at every pair of elements.
bool is_multiplicative(const Func& phi);

/// A function verified to satisfy the multiplicative law. If it is nonzero
/// anywhere, then necessarily mu(e) = 1.
class MulFunc {
public:
    /// Verifies the law exhaustively; throws NotMultiplicative.
    static MulFunc check(Func f);

    const Func& func() const noexcept { return f_; }
    const Scalar& operator()(int x) const { return f_(x); }
    bool is_zero() const { return f_.is_zero(); }

    friend bool operator==(const MulFunc& a, const MulFunc& b) { return a.f_ == b.f_; }

private:
    explicit MulFunc(Func f) : f_(std::move(f)) {}
    Func f_;
};

/// All nonzero multiplicative functions M -> GF(p), deduplicated, in
/// lexicographic value order. The candidate space K^|M| is searched
/// exhaustively with early pruning; |K|^|M| must stay within 2^24
/// (BudgetExceeded) and the field must be finite (InfiniteField).
std::vector<MulFunc> enumerate_multiplicative(const MonoidPtr& m, const Field& field);

/// Rank of the |funcs| x |M| value matrix over K, by exact elimination.
int rank(std::span<const Func> funcs);

/// Coefficients c with sum c_i * basis_i = target, or nullopt when the target
/// is outside the span. When rank(basis) < |basis| the returned coefficients
/// are the particular solution with free coordinates set to zero.
std::optional<std::vector<Scalar>> express_in_basis(const Func& target,
                                                    std::span<const Func> basis);

}  // namespace levi
