#include "levi/func.hpp"

#include <algorithm>
#include <cmath>

#include "elim.hpp"

namespace levi {

Func::Func(MonoidPtr monoid, Field field, std::vector<Scalar> values)
    : monoid_(std::move(monoid)), field_(field), values_(std::move(values)) {
    if (!monoid_) throw MixedDomains("function needs a monoid");
    if (static_cast<int>(values_.size()) != monoid_->size())
        throw MixedDomains("value vector length " + std::to_string(values_.size()) +
                           " does not match monoid size " + std::to_string(monoid_->size()));
    for (const Scalar& v : values_)
        if (!(v.field() == field_)) throw MixedDomains("scalar field differs from function field");
}

Func Func::zero(const MonoidPtr& m, const Field& f) {
    return Func(m, f, std::vector<Scalar>(static_cast<std::size_t>(m->size()), Scalar::zero(f)));
}

Func Func::constant(const MonoidPtr& m, const Scalar& value) {
    return Func(m, value.field(),
                std::vector<Scalar>(static_cast<std::size_t>(m->size()), value));
}

bool Func::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Scalar& v) { return v.is_zero(); });
}

bool Func::canonical_less(const Func& a, const Func& b) {
    for (int i = 0; i < a.size() && i < b.size(); ++i) {
        if (Scalar::canonical_less(a(i), b(i))) return true;
        if (Scalar::canonical_less(b(i), a(i))) return false;
    }
    return a.size() < b.size();
}

namespace {

void check_domains(const Func& a, const Func& b) {
    if (!same_monoid(a.monoid(), b.monoid()) || !(a.field() == b.field()))
        throw MixedDomains();
}

template <typename Op>
Func zip(const Func& a, const Func& b, Op op) {
    check_domains(a, b);
    std::vector<Scalar> out;
    out.reserve(a.values().size());
    for (int i = 0; i < a.size(); ++i) out.push_back(op(a(i), b(i)));
    return Func(a.monoid(), a.field(), std::move(out));
}

}  // namespace

Func pointwise_add(const Func& a, const Func& b) {
    return zip(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
}

Func pointwise_sub(const Func& a, const Func& b) {
    return zip(a, b, [](const Scalar& x, const Scalar& y) { return x - y; });
}

Func pointwise_mul(const Func& a, const Func& b) {
    return zip(a, b, [](const Scalar& x, const Scalar& y) { return x * y; });
}

Func pointwise_neg(const Func& a) {
    std::vector<Scalar> out;
    out.reserve(a.values().size());
    for (int i = 0; i < a.size(); ++i) out.push_back(-a(i));
    return Func(a.monoid(), a.field(), std::move(out));
}

Func pointwise_scale(const Scalar& c, const Func& a) {
    if (!(c.field() == a.field())) throw MixedDomains();
    std::vector<Scalar> out;
    out.reserve(a.values().size());
    for (int i = 0; i < a.size(); ++i) out.push_back(c * a(i));
    return Func(a.monoid(), a.field(), std::move(out));
}

bool is_multiplicative(const Func& phi) {
    const Monoid& m = *phi.monoid();
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y)
            if (!(phi(m.mul(x, y)) == phi(x) * phi(y))) return false;
    return true;
}

MulFunc MulFunc::check(Func f) {
    if (!is_multiplicative(f)) throw NotMultiplicative();
    return MulFunc(std::move(f));
}

// ---------------------------------------------------------------------
// enumeration
//
// Depth-first assignment of values in element order. After assigning
// values[t], every law instance whose three participants are all already
// assigned and involve t is checked, so each candidate vector is rejected
// at the first failing pair; full vectors are emitted in lexicographic
// order by construction.
// ---------------------------------------------------------------------

namespace {

struct LawInstance {
    int x, y, xy;
};

// law instances that become checkable exactly when element t gets a value
std::vector<std::vector<LawInstance>> checks_by_depth(const Monoid& m) {
    std::vector<std::vector<LawInstance>> by_depth(static_cast<std::size_t>(m.size()));
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y) {
            const int xy = m.mul(x, y);
            const int t = std::max({x, y, xy});
            by_depth[static_cast<std::size_t>(t)].push_back({x, y, xy});
        }
    return by_depth;
}

}  // namespace

std::vector<MulFunc> enumerate_multiplicative(const MonoidPtr& m, const Field& field) {
    if (!field.is_prime_field())
        throw InfiniteField("multiplicative enumeration needs a finite field");
    const int n = m->size();
    const double bits = n * std::log2(static_cast<double>(field.modulus()));
    if (bits > 24.0)
        throw BudgetExceeded("|K|^|M| = " + std::to_string(field.modulus()) + "^" +
                             std::to_string(n) + " exceeds the 2^24 search budget");

    const std::uint32_t p = field.modulus();
    const auto checks = checks_by_depth(*m);
    std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
    std::vector<MulFunc> out;

    auto consistent_at = [&](int t) {
        for (const LawInstance& c : checks[static_cast<std::size_t>(t)])
            if (v[static_cast<std::size_t>(c.xy)] !=
                v[static_cast<std::size_t>(c.x)] * v[static_cast<std::size_t>(c.y)] % p)
                return false;
        return true;
    };

    auto dfs = [&](auto&& self, int t) -> void {
        if (t == n) {
            if (std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; })) return;
            std::vector<Scalar> vals;
            vals.reserve(v.size());
            for (std::uint32_t x : v) vals.push_back(Scalar::of_int(field, x));
            out.push_back(MulFunc::check(Func(m, field, std::move(vals))));
            return;
        }
        for (std::uint32_t val = 0; val < p; ++val) {
            v[static_cast<std::size_t>(t)] = val;
            if (consistent_at(t)) self(self, t + 1);
        }
    };
    dfs(dfs, 0);
    return out;
}

// ---------------------------------------------------------------------
// exact elimination
// ---------------------------------------------------------------------

namespace {

void check_common_domains(std::span<const Func> funcs) {
    for (std::size_t i = 1; i < funcs.size(); ++i) {
        if (!same_monoid(funcs[i].monoid(), funcs[0].monoid()) ||
            !(funcs[i].field() == funcs[0].field()))
            throw MixedDomains();
    }
}

}  // namespace

int rank(std::span<const Func> funcs) {
    if (funcs.empty()) return 0;
    check_common_domains(funcs);
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(funcs.size());
    for (const Func& f : funcs) rows.push_back(f.values());
    return static_cast<int>(detail::scalar_rref(rows, funcs[0].size()).size());
}

std::optional<std::vector<Scalar>> express_in_basis(const Func& target,
                                                    std::span<const Func> basis) {
    const Field f = target.field();
    if (basis.empty())
        return target.is_zero() ? std::optional<std::vector<Scalar>>(std::in_place)
                                : std::nullopt;
    check_common_domains(basis);
    if (!same_monoid(target.monoid(), basis[0].monoid()) || !(f == basis[0].field()))
        throw MixedDomains();

    // solve A c = t where column i of A is basis[i]; rows are augmented with t
    const int n = target.size();
    const int k = static_cast<int>(basis.size());
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
        std::vector<Scalar> row;
        row.reserve(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i < k; ++i) row.push_back(basis[static_cast<std::size_t>(i)](e));
        row.push_back(target(e));
        rows.push_back(std::move(row));
    }
    const std::vector<int> pivots = detail::scalar_rref(rows, k);
    // inconsistent iff some row is (0 ... 0 | nonzero)
    for (const auto& row : rows) {
        bool all_zero = true;
        for (int c = 0; c < k; ++c)
            if (!row[static_cast<std::size_t>(c)].is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero && !row.back().is_zero()) return std::nullopt;
    }
    std::vector<Scalar> coeffs(static_cast<std::size_t>(k), Scalar::zero(f));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        coeffs[static_cast<std::size_t>(pivots[r])] = rows[r].back();
    return coeffs;
}

}  // namespace levi
