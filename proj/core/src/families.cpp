#include "levi/families.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace levi {

// ---------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------

namespace {

void check_cvec(const ProblemSpec& spec, const std::vector<Scalar>& c, const char* what) {
    if (static_cast<int>(c.size()) != spec.block_count())
        throw DomainMismatch(std::string(what) + " needs one entry per block");
    for (const Scalar& v : c)
        if (!(v.field() == spec.field())) throw DescriptorMismatch();
}

Func scaled_mu(const ProblemSpec& spec, const Scalar& s, int i) {
    return pointwise_scale(s, spec.mu(i).func());
}

}  // namespace

SolutionTuple gen_independent(const ProblemSpec& spec, const MulFunc& chi, const Scalar& a,
                              const Scalar& b, const std::vector<Scalar>& c) {
    if (!same_monoid(chi.func().monoid(), spec.monoid()) || !(chi.func().field() == spec.field()))
        throw DomainMismatch("chi lives on a different domain");
    if (chi.is_zero()) throw ZeroParameter("chi");
    for (int i = 1; i <= spec.term_count(); ++i)
        if (chi.func() == spec.mu(i).func()) throw ChiCollidesWithMu();
    if (a.is_zero()) throw ZeroParameter("a");
    if (b.is_zero()) throw ZeroParameter("b");
    check_cvec(spec, c, "c");

    Func g = pointwise_scale(b, chi.func());
    for (int j = 1; j <= spec.block_count(); ++j)
        g = pointwise_sub(g, pointwise_scale(c[static_cast<std::size_t>(j) - 1],
                                             spec.g_component(j)));
    std::vector<Func> hs;
    hs.reserve(c.size());
    for (const Scalar& cj : c) hs.push_back(pointwise_scale(a * cj, chi.func()));
    return SolutionTuple{pointwise_scale(a * b, chi.func()), std::move(g),
                         pointwise_scale(a, chi.func()), std::move(hs)};
}

SolutionTuple gen_dependent_pair(const ProblemSpec& spec, int q, const Scalar& a, const Scalar& b,
                                 const Scalar& c, const Scalar& d, const std::vector<Scalar>& cj) {
    const Block& blk = spec.block(q);
    if (blk.length() != 2)
        throw WrongBlockShape("block " + std::to_string(q) + " must have exactly 2 terms");
    if (c == d) throw DegenerateParams("c and d must differ");
    if (a.is_zero() && b.is_zero()) throw DegenerateParams("(a, b) must not be (0, 0)");
    check_cvec(spec, cj, "cj");

    const int lo = blk.lo, hi = blk.hi;
    const Scalar& b_lo = spec.coeff(lo);
    const Scalar& b_hi = spec.coeff(hi);

    Func f = pointwise_scale(d - c, pointwise_sub(scaled_mu(spec, b * b_lo, lo),
                                                  scaled_mu(spec, a * b_hi, hi)));
    Func g = pointwise_add(scaled_mu(spec, d * b_lo, lo), scaled_mu(spec, c * b_hi, hi));
    for (int j = 1; j <= spec.block_count(); ++j)
        if (j != q)
            g = pointwise_add(g, pointwise_scale(cj[static_cast<std::size_t>(j) - 1],
                                                 spec.g_component(j)));
    Func h = pointwise_add(scaled_mu(spec, a, hi), scaled_mu(spec, b, lo));

    std::vector<Func> hs;
    hs.reserve(cj.size());
    for (int j = 1; j <= spec.block_count(); ++j) {
        if (j == q) {
            hs.push_back(pointwise_neg(pointwise_add(scaled_mu(spec, d * a, hi),
                                                     scaled_mu(spec, c * b, lo))));
        } else {
            const Scalar& cjj = cj[static_cast<std::size_t>(j) - 1];
            hs.push_back(pointwise_neg(pointwise_add(scaled_mu(spec, cjj * a, hi),
                                                     scaled_mu(spec, cjj * b, lo))));
        }
    }
    return SolutionTuple{std::move(f), std::move(g), std::move(h), std::move(hs)};
}

SolutionTuple gen_dependent_single(const ProblemSpec& spec, int q, int k, const Scalar& a,
                                   const Scalar& c, const Scalar& d,
                                   const std::vector<Scalar>& cj) {
    const Block& blk = spec.block(q);
    if (blk.length() < 3)
        throw WrongBlockShape("block " + std::to_string(q) + " must have at least 3 terms");
    if (k < blk.lo || k > blk.hi)
        throw IndexOutOfRange("k = " + std::to_string(k) + " outside block " + std::to_string(q));
    if (a.is_zero()) throw DegenerateParams("a must be nonzero");
    if (c == d) throw DegenerateParams("c and d must differ");
    check_cvec(spec, cj, "cj");

    const Scalar& b_k = spec.coeff(k);
    Func f = scaled_mu(spec, a * (c - d) * b_k, k);
    Func g = pointwise_add(pointwise_scale(d, spec.g_component(q)),
                           scaled_mu(spec, (c - d) * b_k, k));
    for (int j = 1; j <= spec.block_count(); ++j)
        if (j != q)
            g = pointwise_add(g, pointwise_scale(cj[static_cast<std::size_t>(j) - 1],
                                                 spec.g_component(j)));
    Func h = scaled_mu(spec, a, k);

    std::vector<Func> hs;
    hs.reserve(cj.size());
    for (int j = 1; j <= spec.block_count(); ++j) {
        if (j == q)
            hs.push_back(scaled_mu(spec, -(d * a), k));
        else
            hs.push_back(scaled_mu(spec, -(a * cj[static_cast<std::size_t>(j) - 1]), k));
    }
    return SolutionTuple{std::move(f), std::move(g), std::move(h), std::move(hs)};
}

SolutionTuple gen_degenerate(const ProblemSpec& spec, const Func& h,
                             const std::vector<Scalar>& c) {
    if (!same_monoid(h.monoid(), spec.monoid()) || !(h.field() == spec.field()))
        throw DomainMismatch("h lives on a different domain");
    if (h.is_zero()) throw ZeroH();
    check_cvec(spec, c, "c");

    Func g = Func::zero(spec.monoid(), spec.field());
    for (int j = 1; j <= spec.block_count(); ++j)
        g = pointwise_add(g, pointwise_scale(c[static_cast<std::size_t>(j) - 1],
                                             spec.g_component(j)));
    std::vector<Func> hs;
    hs.reserve(c.size());
    for (const Scalar& cjv : c) hs.push_back(pointwise_scale(-cjv, h));
    return SolutionTuple{Func::zero(spec.monoid(), spec.field()), std::move(g), h, std::move(hs)};
}

SolutionTuple gen_trivial(const ProblemSpec& spec, const Func& g) {
    if (!same_monoid(g.monoid(), spec.monoid()) || !(g.field() == spec.field()))
        throw DomainMismatch("g lives on a different domain");
    const Func zero = Func::zero(spec.monoid(), spec.field());
    return SolutionTuple{zero, g, zero,
                         std::vector<Func>(static_cast<std::size_t>(spec.block_count()), zero)};
}

// ---------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Independent: return "independent";
        case FamilyTag::DependentPair: return "dependent_pair";
        case FamilyTag::DependentSingle: return "dependent_single";
        case FamilyTag::DegenerateNonzeroH: return "degenerate_nonzero_h";
        case FamilyTag::Trivial: return "trivial";
    }
    throw InternalError("unhandled family tag");
}

FamilyTag family_from_name(const std::string& name) {
    if (name == "independent") return FamilyTag::Independent;
    if (name == "dependent_pair") return FamilyTag::DependentPair;
    if (name == "dependent_single") return FamilyTag::DependentSingle;
    if (name == "degenerate_nonzero_h") return FamilyTag::DegenerateNonzeroH;
    if (name == "trivial") return FamilyTag::Trivial;
    throw Error("unknown family name: " + name);
}

FamilyTag Classification::tag() const {
    return std::visit(
        [](const auto& p) -> FamilyTag {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, IndependentParams>) return FamilyTag::Independent;
            else if constexpr (std::is_same_v<T, DependentPairParams>)
                return FamilyTag::DependentPair;
            else if constexpr (std::is_same_v<T, DependentSingleParams>)
                return FamilyTag::DependentSingle;
            else if constexpr (std::is_same_v<T, DegenerateHParams>)
                return FamilyTag::DegenerateNonzeroH;
            else
                return FamilyTag::Trivial;
        },
        params);
}

SolutionTuple regenerate(const ProblemSpec& spec, const Classification& cls) {
    return std::visit(
        [&](const auto& p) -> SolutionTuple {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, IndependentParams>)
                return gen_independent(spec, p.chi, p.a, p.b, p.c);
            else if constexpr (std::is_same_v<T, DependentPairParams>)
                return gen_dependent_pair(spec, p.q, p.a, p.b, p.c, p.d, p.cj);
            else if constexpr (std::is_same_v<T, DependentSingleParams>)
                return gen_dependent_single(spec, p.q, p.k, p.a, p.c, p.d, p.cj);
            else if constexpr (std::is_same_v<T, DegenerateHParams>)
                return gen_degenerate(spec, p.h, p.c);
            else
                return gen_trivial(spec, p.g);
        },
        cls.params);
}

namespace {

std::string tuple_repr(const SolutionTuple& t) {
    std::ostringstream os;
    auto dump = [&](const Func& fn) {
        os << "[";
        for (int i = 0; i < fn.size(); ++i) os << (i ? "," : "") << fn(i).str();
        os << "]";
    };
    os << "f=";
    dump(t.f);
    os << " g=";
    dump(t.g);
    os << " h=";
    dump(t.h);
    os << " hs=[";
    for (std::size_t j = 0; j < t.hs.size(); ++j) {
        if (j) os << ",";
        dump(t.hs[j]);
    }
    os << "]";
    return os.str();
}

// regenerate from the recovered parameters and demand exact tuple equality
Classification sealed(const ProblemSpec& spec, Classification cls, const SolutionTuple& t) {
    SolutionTuple again = [&] {
        try {
            return regenerate(spec, cls);
        } catch (const Error&) {
            throw InternalCaseExhaustion(tuple_repr(t));
        }
    }();
    if (!(again == t)) throw InternalCaseExhaustion(tuple_repr(t));
    return cls;
}

}  // namespace

Classification classify(const ProblemSpec& spec, const SolutionTuple& t) {
    if (!residual(spec, t).empty()) throw NotASolution();
    const Field F = spec.field();
    const int n = spec.block_count();
    const int m = spec.term_count();
    const int e = spec.monoid()->identity();

    if (t.f.is_zero()) {
        if (t.h.is_zero())
            return sealed(spec, Classification{TrivialParams{t.g}}, t);
        // first element with h(y0) != 0 fixes every c_j, since h_j = -c_j h
        int y0 = 0;
        while (t.h(y0).is_zero()) ++y0;
        const Scalar h0_inv = t.h(y0).inv();
        std::vector<Scalar> c;
        c.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            c.push_back(-(t.hs[static_cast<std::size_t>(j)](y0) * h0_inv));
        return sealed(spec, Classification{DegenerateHParams{std::move(c), t.h}}, t);
    }

    std::vector<Func> mu = spec.mu_funcs();
    std::vector<Func> g_and_mu;
    g_and_mu.reserve(mu.size() + 1);
    g_and_mu.push_back(t.g);
    g_and_mu.insert(g_and_mu.end(), mu.begin(), mu.end());

    if (rank(g_and_mu) == m + 1) {
        // {g, mu_1..mu_m} independent: h = a*chi with a = h(e) != 0
        const Scalar a = t.h(e);
        if (a.is_zero()) throw InternalCaseExhaustion(tuple_repr(t));
        const Func chi_f = pointwise_scale(a.inv(), t.h);
        if (!is_multiplicative(chi_f)) throw InternalCaseExhaustion(tuple_repr(t));
        MulFunc chi = MulFunc::check(chi_f);
        for (int i = 1; i <= m; ++i)
            if (chi.func() == spec.mu(i).func()) throw InternalCaseExhaustion(tuple_repr(t));
        std::vector<Scalar> c;
        c.reserve(static_cast<std::size_t>(n));
        const Scalar a_inv = a.inv();
        for (int j = 0; j < n; ++j)
            c.push_back(t.hs[static_cast<std::size_t>(j)](e) * a_inv);
        Scalar b = t.g(e);
        for (int j = 1; j <= n; ++j)
            b += c[static_cast<std::size_t>(j) - 1] * spec.g_component(j)(e);
        if (b.is_zero()) throw InternalCaseExhaustion(tuple_repr(t));
        return sealed(spec,
                      Classification{IndependentParams{std::move(chi), a, b, std::move(c)}}, t);
    }

    // dependent: g = sum a_i mu_i; the block with non-proportional (a_i : b_i)
    // is unique and identifies q
    auto ai_opt = express_in_basis(t.g, mu);
    if (!ai_opt) throw InternalCaseExhaustion(tuple_repr(t));
    std::vector<Scalar> ai = std::move(*ai_opt);
    auto ratio = [&](int i) {  // a_i / b_i, 1-based
        return ai[static_cast<std::size_t>(i) - 1] / spec.coeff(i);
    };

    int q = 0;
    for (int j = 1; j <= n; ++j) {
        const Block& blk = spec.block(j);
        const Scalar first = ratio(blk.lo);
        bool proportional = true;
        for (int i = blk.lo + 1; i <= blk.hi; ++i)
            if (!(ratio(i) == first)) {
                proportional = false;
                break;
            }
        if (!proportional) {
            if (q != 0) throw InternalCaseExhaustion(tuple_repr(t));
            q = j;
        }
    }
    if (q == 0) throw InternalCaseExhaustion(tuple_repr(t));

    std::vector<Scalar> cj(static_cast<std::size_t>(n), Scalar::zero(F));
    for (int j = 1; j <= n; ++j)
        if (j != q) cj[static_cast<std::size_t>(j) - 1] = ratio(spec.block(j).lo);

    const Block& blk = spec.block(q);
    auto h_coeffs = express_in_basis(t.h, mu);
    if (!h_coeffs) throw InternalCaseExhaustion(tuple_repr(t));

    if (blk.length() == 2) {
        for (int i = 1; i <= m; ++i)
            if (i != blk.lo && i != blk.hi && !(*h_coeffs)[static_cast<std::size_t>(i) - 1].is_zero())
                throw InternalCaseExhaustion(tuple_repr(t));
        const Scalar d = ratio(blk.lo);
        const Scalar c = ratio(blk.hi);
        const Scalar a = (*h_coeffs)[static_cast<std::size_t>(blk.hi) - 1];
        const Scalar b = (*h_coeffs)[static_cast<std::size_t>(blk.lo) - 1];
        return sealed(spec,
                      Classification{DependentPairParams{q, a, b, c, d, std::move(cj),
                                                         std::move(ai)}},
                      t);
    }

    // block length >= 3: h = a mu_k pins k
    int k = 0;
    for (int i = 1; i <= m; ++i)
        if (!(*h_coeffs)[static_cast<std::size_t>(i) - 1].is_zero()) {
            if (k != 0) throw InternalCaseExhaustion(tuple_repr(t));
            k = i;
        }
    if (k < blk.lo || k > blk.hi) throw InternalCaseExhaustion(tuple_repr(t));
    const Scalar a = (*h_coeffs)[static_cast<std::size_t>(k) - 1];
    const Scalar c = ratio(k);
    std::optional<Scalar> d;
    for (int i = blk.lo; i <= blk.hi; ++i) {
        if (i == k) continue;
        const Scalar r = ratio(i);
        if (!d)
            d = r;
        else if (!(r == *d))
            throw InternalCaseExhaustion(tuple_repr(t));
    }
    return sealed(spec,
                  Classification{DependentSingleParams{q, k, a, c, *d, std::move(cj),
                                                       std::move(ai)}},
                  t);
}

// ---------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------

namespace {

using u128 = unsigned __int128;

u128 ipow(u128 base, int exp) {
    u128 r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > (u128{1} << 100)) return u128{1} << 100;  // clamp, still over any budget
    }
    return r;
}

// odometer over vectors in [0,p)^len, invoking fn on each
void for_each_vector(std::uint32_t p, int len, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(len), 0);
    while (true) {
        fn(digits);
        int pos = 0;
        while (pos < len && ++digits[static_cast<std::size_t>(pos)] == p) {
            digits[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == len) break;
    }
}

std::vector<std::uint32_t> tuple_key(const SolutionTuple& t) {
    std::vector<Scalar> flat = t.flatten();
    std::vector<std::uint32_t> key;
    key.reserve(flat.size());
    for (const Scalar& s : flat) key.push_back(s.residue());
    return key;
}

}  // namespace

SweepResult sweep_families(const ProblemSpec& spec, const SweepOptions& opts) {
    if (!spec.field().is_prime_field())
        throw InfiniteField("family sweep needs a finite field");
    const Field F = spec.field();
    const std::uint32_t p = F.modulus();
    const int n = spec.block_count();
    const int M = spec.monoid()->size();

    std::vector<MulFunc> chis;
    if (opts.independent) {
        for (MulFunc& mf : enumerate_multiplicative(spec.monoid(), F)) {
            bool is_mu = false;
            for (int i = 1; i <= spec.term_count() && !is_mu; ++i)
                is_mu = mf.func() == spec.mu(i).func();
            if (!is_mu) chis.push_back(std::move(mf));
        }
    }

    // parameter-space size against the budget
    u128 total = 0;
    if (opts.independent)
        total += u128{chis.size()} * (p - 1) * (p - 1) * ipow(p, n);
    for (int q = 1; q <= n; ++q) {
        const int len = spec.block(q).length();
        if (len == 2 && opts.dependent_pair)
            total += (ipow(p, 2) - 1) * (u128{p} * (p - 1)) * ipow(p, n - 1);
        if (len >= 3 && opts.dependent_single)
            total += u128(len) * (p - 1) * (u128{p} * (p - 1)) * ipow(p, n - 1);
    }
    if (opts.degenerate) total += ipow(p, n) * (ipow(p, M) - 1);
    if (opts.trivial) total += ipow(p, M);
    if (total > opts.budget)
        throw BudgetExceeded("family sweep parameter space exceeds budget");

    const std::vector<Scalar> elems = enumerate_field(F);
    auto scalars_of = [&](const std::vector<std::uint32_t>& digits) {
        std::vector<Scalar> out;
        out.reserve(digits.size());
        for (std::uint32_t d : digits) out.push_back(elems[d]);
        return out;
    };
    auto func_of = [&](const std::vector<std::uint32_t>& digits) {
        return Func(spec.monoid(), F, scalars_of(digits));
    };

    SweepResult result;
    std::vector<std::pair<std::vector<std::uint32_t>, SolutionTuple>> keyed;

    auto flush_family = [&](FamilyTag tag, std::vector<SolutionTuple>& batch) {
        std::vector<std::pair<std::vector<std::uint32_t>, SolutionTuple>> local;
        local.reserve(batch.size());
        for (SolutionTuple& t : batch) local.emplace_back(tuple_key(t), std::move(t));
        batch.clear();
        std::sort(local.begin(), local.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        local.erase(std::unique(local.begin(), local.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; }),
                    local.end());
        result.per_family[family_name(tag)] = local.size();
        for (auto& kv : local) keyed.push_back(std::move(kv));
    };

    std::vector<SolutionTuple> batch;

    if (opts.independent) {
        for (const MulFunc& chi : chis)
            for (std::uint32_t av = 1; av < p; ++av)
                for (std::uint32_t bv = 1; bv < p; ++bv)
                    for_each_vector(p, n, [&](const std::vector<std::uint32_t>& cd) {
                        batch.push_back(gen_independent(spec, chi, elems[av], elems[bv],
                                                        scalars_of(cd)));
                    });
        flush_family(FamilyTag::Independent, batch);
    }

    if (opts.dependent_pair) {
        for (int q = 1; q <= n; ++q) {
            if (spec.block(q).length() != 2) continue;
            for (std::uint32_t av = 0; av < p; ++av)
                for (std::uint32_t bv = 0; bv < p; ++bv) {
                    if (av == 0 && bv == 0) continue;
                    for (std::uint32_t cv = 0; cv < p; ++cv)
                        for (std::uint32_t dv = 0; dv < p; ++dv) {
                            if (cv == dv) continue;
                            for_each_vector(p, n - 1, [&](const std::vector<std::uint32_t>& rest) {
                                std::vector<Scalar> cj(static_cast<std::size_t>(n),
                                                       Scalar::zero(F));
                                int pos = 0;
                                for (int j = 1; j <= n; ++j)
                                    if (j != q)
                                        cj[static_cast<std::size_t>(j) - 1] =
                                            elems[rest[static_cast<std::size_t>(pos++)]];
                                batch.push_back(gen_dependent_pair(spec, q, elems[av], elems[bv],
                                                                   elems[cv], elems[dv], cj));
                            });
                        }
                }
        }
        flush_family(FamilyTag::DependentPair, batch);
    }

    if (opts.dependent_single) {
        for (int q = 1; q <= n; ++q) {
            const Block& blk = spec.block(q);
            if (blk.length() < 3) continue;
            for (int k = blk.lo; k <= blk.hi; ++k)
                for (std::uint32_t av = 1; av < p; ++av)
                    for (std::uint32_t cv = 0; cv < p; ++cv)
                        for (std::uint32_t dv = 0; dv < p; ++dv) {
                            if (cv == dv) continue;
                            for_each_vector(p, n - 1, [&](const std::vector<std::uint32_t>& rest) {
                                std::vector<Scalar> cj(static_cast<std::size_t>(n),
                                                       Scalar::zero(F));
                                int pos = 0;
                                for (int j = 1; j <= n; ++j)
                                    if (j != q)
                                        cj[static_cast<std::size_t>(j) - 1] =
                                            elems[rest[static_cast<std::size_t>(pos++)]];
                                batch.push_back(gen_dependent_single(spec, q, k, elems[av],
                                                                     elems[cv], elems[dv], cj));
                            });
                        }
        }
        flush_family(FamilyTag::DependentSingle, batch);
    }

    if (opts.degenerate) {
        for_each_vector(p, M, [&](const std::vector<std::uint32_t>& hv) {
            if (std::all_of(hv.begin(), hv.end(), [](std::uint32_t v) { return v == 0; })) return;
            const Func h = func_of(hv);
            for_each_vector(p, n, [&](const std::vector<std::uint32_t>& cv) {
                batch.push_back(gen_degenerate(spec, h, scalars_of(cv)));
            });
        });
        flush_family(FamilyTag::DegenerateNonzeroH, batch);
    }

    if (opts.trivial) {
        for_each_vector(p, M, [&](const std::vector<std::uint32_t>& gv) {
            batch.push_back(gen_trivial(spec, func_of(gv)));
        });
        flush_family(FamilyTag::Trivial, batch);
    }

    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    result.tuples.reserve(keyed.size());
    for (auto& kv : keyed) result.tuples.push_back(std::move(kv.second));
    return result;
}

}  // namespace levi
