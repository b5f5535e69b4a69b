#include "levi/problem.hpp"

#include <algorithm>

namespace levi {

ProblemSpec ProblemSpec::make(MonoidPtr monoid, Field field, std::vector<Block> partition,
                              std::vector<Scalar> b, std::vector<MulFunc> mu) {
    if (!monoid) throw DomainMismatch("spec needs a monoid");
    const int n = static_cast<int>(partition.size());
    if (n < 2) throw DomainMismatch("need at least 2 blocks, got " + std::to_string(n));
    if (partition.front().lo != 1) throw DomainMismatch("first block must start at index 1");
    for (int j = 0; j < n; ++j) {
        const Block& blk = partition[static_cast<std::size_t>(j)];
        if (blk.hi - blk.lo < 1)
            throw DomainMismatch("block " + std::to_string(j + 1) + " has fewer than 2 terms");
        if (j + 1 < n && partition[static_cast<std::size_t>(j) + 1].lo != blk.hi + 1)
            throw DomainMismatch("blocks must be consecutive and disjoint");
    }
    const int m = partition.back().hi;
    if (static_cast<int>(b.size()) != m)
        throw DomainMismatch("expected " + std::to_string(m) + " coefficients, got " +
                             std::to_string(b.size()));
    if (static_cast<int>(mu.size()) != m)
        throw DomainMismatch("expected " + std::to_string(m) + " multiplicative functions, got " +
                             std::to_string(mu.size()));
    for (const Scalar& bi : b) {
        if (!(bi.field() == field)) throw DomainMismatch("coefficient field mismatch");
        if (bi.is_zero()) throw DomainMismatch("all coefficients b_i must be nonzero");
    }
    for (const MulFunc& mi : mu) {
        if (!same_monoid(mi.func().monoid(), monoid) || !(mi.func().field() == field))
            throw DomainMismatch("mu function domain mismatch");
        if (mi.is_zero()) throw DomainMismatch("mu functions must be nonzero");
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (mu[static_cast<std::size_t>(i)] == mu[static_cast<std::size_t>(j)])
                throw DomainMismatch("mu functions must be pairwise distinct: indices " +
                                     std::to_string(i + 1) + " and " + std::to_string(j + 1));

    ProblemSpec spec;
    spec.monoid_ = std::move(monoid);
    spec.field_ = field;
    spec.partition_ = std::move(partition);
    spec.b_ = std::move(b);
    spec.mu_ = std::move(mu);

    // distinct nonzero multiplicative functions are linearly independent
    if (rank(spec.mu_funcs()) != m)
        throw InternalError("mu matrix is rank-deficient despite distinctness");

    spec.g_components_.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const Block& blk = spec.partition_[static_cast<std::size_t>(j) - 1];
        Func gj = Func::zero(spec.monoid_, spec.field_);
        for (int i = blk.lo; i <= blk.hi; ++i)
            gj = pointwise_add(gj, pointwise_scale(spec.coeff(i), spec.mu(i).func()));
        spec.g_components_.push_back(std::move(gj));
    }
    return spec;
}

const Block& ProblemSpec::block(int j) const {
    if (j < 1 || j > block_count()) throw IndexOutOfRange("block index " + std::to_string(j));
    return partition_[static_cast<std::size_t>(j) - 1];
}

const Scalar& ProblemSpec::coeff(int i) const {
    if (i < 1 || i > term_count()) throw IndexOutOfRange("coefficient index " + std::to_string(i));
    return b_[static_cast<std::size_t>(i) - 1];
}

const MulFunc& ProblemSpec::mu(int i) const {
    if (i < 1 || i > term_count()) throw IndexOutOfRange("mu index " + std::to_string(i));
    return mu_[static_cast<std::size_t>(i) - 1];
}

int ProblemSpec::block_of(int i) const {
    if (i < 1 || i > term_count()) throw IndexOutOfRange("term index " + std::to_string(i));
    for (int j = 1; j <= block_count(); ++j)
        if (i <= block(j).hi) return j;
    throw InternalError("partition does not cover index " + std::to_string(i));
}

const Func& ProblemSpec::g_component(int j) const {
    if (j < 1 || j > block_count()) throw IndexOutOfRange("block index " + std::to_string(j));
    return g_components_[static_cast<std::size_t>(j) - 1];
}

std::vector<Func> ProblemSpec::mu_funcs() const {
    std::vector<Func> out;
    out.reserve(mu_.size());
    for (const MulFunc& mi : mu_) out.push_back(mi.func());
    return out;
}

std::vector<Scalar> SolutionTuple::flatten() const {
    std::vector<Scalar> out;
    out.reserve(f.values().size() * (3 + hs.size()));
    auto append = [&](const Func& fn) {
        out.insert(out.end(), fn.values().begin(), fn.values().end());
    };
    append(f);
    append(g);
    append(h);
    for (const Func& hj : hs) append(hj);
    return out;
}

bool SolutionTuple::canonical_less(const SolutionTuple& a, const SolutionTuple& b) {
    const std::vector<Scalar> fa = a.flatten(), fb = b.flatten();
    for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
        if (Scalar::canonical_less(fa[i], fb[i])) return true;
        if (Scalar::canonical_less(fb[i], fa[i])) return false;
    }
    return fa.size() < fb.size();
}

std::vector<Violation> residual(const ProblemSpec& spec, const SolutionTuple& t) {
    const MonoidPtr& m = spec.monoid();
    auto check = [&](const Func& fn) {
        if (!same_monoid(fn.monoid(), m) || !(fn.field() == spec.field()))
            throw DomainMismatch();
    };
    check(t.f);
    check(t.g);
    check(t.h);
    if (static_cast<int>(t.hs.size()) != spec.block_count())
        throw DomainMismatch("expected " + std::to_string(spec.block_count()) +
                             " component functions h_j");
    for (const Func& hj : t.hs) check(hj);

    std::vector<Violation> out;
    for (int x = 0; x < m->size(); ++x)
        for (int y = 0; y < m->size(); ++y) {
            Scalar defect = t.f(m->mul(x, y)) - t.g(x) * t.h(y);
            for (int j = 1; j <= spec.block_count(); ++j)
                defect -= spec.g_component(j)(x) * t.hs[static_cast<std::size_t>(j) - 1](y);
            if (!defect.is_zero()) out.push_back({x, y, defect});
        }
    return out;
}

}  // namespace levi
