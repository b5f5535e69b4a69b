#pragma once

// Shared fixture builders for the test suites.

#include <vector>

#include "levi/families.hpp"
#include "levi/func.hpp"

namespace levi::testing {

inline std::vector<Scalar> ones(const Field& f, int count) {
    return std::vector<Scalar>(static_cast<std::size_t>(count), Scalar::one(f));
}

/// meet_semilattice(2) spec: partition [1,2],[3,4], all b_i = 1, mu = the four
/// enumerated multiplicative functions (over any prime field they are the
/// same four 0/1 filter indicators).
inline ProblemSpec sl2_spec(const Field& f) {
    MonoidPtr m = Monoid::meet_semilattice(2);
    std::vector<MulFunc> mu;
    if (f.is_prime_field()) {
        mu = enumerate_multiplicative(m, f);
    } else {
        // same indicator vectors, valued in the rationals
        for (const MulFunc& g2 : enumerate_multiplicative(m, Field::gf(2))) {
            std::vector<Scalar> vals;
            for (int x = 0; x < m->size(); ++x)
                vals.push_back(Scalar::of_int(f, g2(x).residue()));
            mu.push_back(MulFunc::check(Func(m, f, std::move(vals))));
        }
    }
    return ProblemSpec::make(m, f, {{1, 2}, {3, 4}}, ones(f, 4), std::move(mu));
}

/// meet_semilattice(3) spec with the first `m` enumerated functions.
inline ProblemSpec sl3_spec(const Field& f, std::vector<Block> partition,
                            std::vector<Scalar> b = {}) {
    MonoidPtr mon = Monoid::meet_semilattice(3);
    std::vector<MulFunc> all = enumerate_multiplicative(mon, f);
    const int m = partition.back().hi;
    std::vector<MulFunc> mu(all.begin(), all.begin() + m);
    if (b.empty()) b = ones(f, m);
    return ProblemSpec::make(mon, f, std::move(partition), std::move(b), std::move(mu));
}

/// Product of multiplicative functions along the row-major pairing of a
/// direct product: out(a*|B|+b) = fa(a) * fb(b).
inline Func product_func(const MonoidPtr& prod, const Func& fa, const Func& fb) {
    const int nb = fb.size();
    std::vector<Scalar> vals;
    vals.reserve(static_cast<std::size_t>(prod->size()));
    for (int x = 0; x < prod->size(); ++x) vals.push_back(fa(x / nb) * fb(x % nb));
    return Func(prod, fa.field(), std::move(vals));
}

/// NA24 = meet_semilattice(2) x symmetric3 over GF(3), partition [1,2],[3,4],
/// b = (1,2,1,2), mu = first four product functions in lexicographic order.
inline ProblemSpec na24_spec() {
    const Field f = Field::gf(3);
    MonoidPtr sl2 = Monoid::meet_semilattice(2);
    MonoidPtr s3 = Monoid::symmetric3();
    MonoidPtr prod = Monoid::direct_product(sl2, s3);
    std::vector<Func> prods;
    for (const MulFunc& ma : enumerate_multiplicative(sl2, f))
        for (const MulFunc& mb : enumerate_multiplicative(s3, f))
            prods.push_back(product_func(prod, ma.func(), mb.func()));
    std::sort(prods.begin(), prods.end(), Func::canonical_less);
    std::vector<MulFunc> mu;
    for (int i = 0; i < 4; ++i) mu.push_back(MulFunc::check(prods[static_cast<std::size_t>(i)]));
    std::vector<Scalar> b = {Scalar::of_int(f, 1), Scalar::of_int(f, 2), Scalar::of_int(f, 1),
                             Scalar::of_int(f, 2)};
    return ProblemSpec::make(prod, f, {{1, 2}, {3, 4}}, std::move(b), std::move(mu));
}

}  // namespace levi::testing
