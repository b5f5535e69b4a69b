#include "levi/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>
#include <utility>

#include "elim.hpp"

namespace levi {

namespace {

using u128 = unsigned __int128;
constexpr int kNullspaceCap = 20;
constexpr int kMonoidCap = 8;

u128 ipow_u128(u128 base, int exp) {
    u128 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::uint32_t mod_inv_u32(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        const std::int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

// --------------------------------------------------------------------
// The fixed linear system.
//
// Unknowns, in column order: f(0..M-1), then h_j(0..M-1) for j = 1..n.
// Row x*M + y encodes  f(xy) - sum_j g_j(x) h_j(y) = g(x) h(y).
// The left-hand side is independent of (g, h): it is reduced to RREF once,
// together with the transform E such that RREF = E * A. For each (g, h) only
// E * rhs is recomputed.
// --------------------------------------------------------------------

struct FixedSystem {
    std::uint32_t p = 0;
    int M = 0, n = 0, rows = 0, cols = 0, rank = 0, nullity = 0;
    std::vector<int> pivots;                          // rank entries
    std::vector<std::vector<std::uint32_t>> e_cols;   // E by columns: e_cols[c][r]
    std::vector<std::vector<std::uint32_t>> nullbasis;  // nullity x cols

    // GF(2) packed forms: row r of E as a bitmask over the M^2 row indices,
    // nullspace vectors as bitmasks over the cols.
    bool packed = false;
    std::vector<std::uint64_t> e_rows2;
    std::vector<std::uint64_t> null2;
    std::uint64_t inconsistent_mask = 0;
};

FixedSystem build_system(const ProblemSpec& spec) {
    FixedSystem sys;
    sys.p = spec.field().modulus();
    sys.M = spec.monoid()->size();
    sys.n = spec.block_count();
    sys.rows = sys.M * sys.M;
    sys.cols = (sys.n + 1) * sys.M;
    const std::uint32_t p = sys.p;
    const Monoid& mon = *spec.monoid();

    // g_j value tables as residues
    std::vector<std::vector<std::uint32_t>> gj(static_cast<std::size_t>(sys.n));
    for (int j = 1; j <= sys.n; ++j) {
        gj[static_cast<std::size_t>(j) - 1].reserve(static_cast<std::size_t>(sys.M));
        for (int x = 0; x < sys.M; ++x)
            gj[static_cast<std::size_t>(j) - 1].push_back(spec.g_component(j)(x).residue());
    }

    // augmented [A | I]
    std::vector<std::vector<std::uint32_t>> a(
        static_cast<std::size_t>(sys.rows),
        std::vector<std::uint32_t>(static_cast<std::size_t>(sys.cols + sys.rows), 0));
    for (int x = 0; x < sys.M; ++x)
        for (int y = 0; y < sys.M; ++y) {
            auto& row = a[static_cast<std::size_t>(x * sys.M + y)];
            row[static_cast<std::size_t>(mon.mul(x, y))] =
                (row[static_cast<std::size_t>(mon.mul(x, y))] + 1) % p;
            for (int j = 0; j < sys.n; ++j) {
                auto& cell = row[static_cast<std::size_t>(sys.M + j * sys.M + y)];
                cell = (cell + p - gj[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)] % p) % p;
            }
            row[static_cast<std::size_t>(sys.cols + x * sys.M + y)] = 1;
        }

    // RREF over the first `cols` columns
    int r = 0;
    for (int c = 0; c < sys.cols && r < sys.rows; ++c) {
        int pr = -1;
        for (int i = r; i < sys.rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pr)]);
        const std::uint64_t inv = mod_inv_u32(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], p);
        for (auto& v : a[static_cast<std::size_t>(r)])
            v = static_cast<std::uint32_t>(v * inv % p);
        for (int i = 0; i < sys.rows; ++i) {
            if (i == r) continue;
            const std::uint64_t factor = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (factor == 0) continue;
            auto& ri = a[static_cast<std::size_t>(i)];
            const auto& rr = a[static_cast<std::size_t>(r)];
            for (std::size_t k = 0; k < ri.size(); ++k)
                ri[k] = static_cast<std::uint32_t>((ri[k] + (p - 1) * factor % p * rr[k]) % p);
        }
        sys.pivots.push_back(c);
        ++r;
    }
    sys.rank = r;
    sys.nullity = sys.cols - sys.rank;
    if (sys.nullity > kNullspaceCap) throw NullspaceCapExceeded(sys.nullity);

    // transform columns
    sys.e_cols.assign(static_cast<std::size_t>(sys.rows),
                      std::vector<std::uint32_t>(static_cast<std::size_t>(sys.rows), 0));
    for (int i = 0; i < sys.rows; ++i)
        for (int c = 0; c < sys.rows; ++c)
            sys.e_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] =
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(sys.cols + c)];

    // nullspace basis: one vector per free column
    std::vector<bool> is_pivot(static_cast<std::size_t>(sys.cols), false);
    for (int c : sys.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int fc = 0; fc < sys.cols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<std::uint32_t> v(static_cast<std::size_t>(sys.cols), 0);
        v[static_cast<std::size_t>(fc)] = 1;
        for (int pr2 = 0; pr2 < sys.rank; ++pr2) {
            const std::uint32_t coeff = a[static_cast<std::size_t>(pr2)][static_cast<std::size_t>(fc)];
            if (coeff != 0)
                v[static_cast<std::size_t>(sys.pivots[static_cast<std::size_t>(pr2)])] =
                    (p - coeff) % p;
        }
        sys.nullbasis.push_back(std::move(v));
    }

    // GF(2) fast path: pack the per-pair work into 64-bit words
    if (p == 2 && sys.rows <= 64 && sys.cols <= 64) {
        sys.packed = true;
        sys.e_rows2.assign(static_cast<std::size_t>(sys.rows), 0);
        for (int i = 0; i < sys.rows; ++i)
            for (int c = 0; c < sys.rows; ++c)
                if (sys.e_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)])
                    sys.e_rows2[static_cast<std::size_t>(i)] |= std::uint64_t{1} << c;
        for (const auto& v : sys.nullbasis) {
            std::uint64_t mask = 0;
            for (int c = 0; c < sys.cols; ++c)
                if (v[static_cast<std::size_t>(c)]) mask |= std::uint64_t{1} << c;
            sys.null2.push_back(mask);
        }
        for (int i = sys.rank; i < sys.rows; ++i)
            sys.inconsistent_mask |= std::uint64_t{1} << i;
    }
    return sys;
}

// flat value layout of a solution tuple: f | g | h | h_1..h_n, residues
using FlatTuple = std::vector<std::uint32_t>;

// modular Gray enumeration over the affine set particular + span(nullbasis):
// at step t exactly one digit advances (the p-adic ruler position), so the
// running vector is updated by one basis addition per step.
template <typename Emit>
void enumerate_affine(const FixedSystem& sys, std::vector<std::uint32_t> particular, Emit emit) {
    const std::uint32_t p = sys.p;
    emit(particular);
    if (sys.nullity == 0) return;
    const u128 count = ipow_u128(p, sys.nullity);
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(sys.nullity), 0);
    for (u128 t = 1; t < count; ++t) {
        u128 tt = t;
        int pos = 0;
        while (tt % p == 0) {
            tt /= p;
            ++pos;
        }
        digits[static_cast<std::size_t>(pos)] =
            (digits[static_cast<std::size_t>(pos)] + 1) % p;
        const auto& basis = sys.nullbasis[static_cast<std::size_t>(pos)];
        for (int c = 0; c < sys.cols; ++c)
            particular[static_cast<std::size_t>(c)] =
                (particular[static_cast<std::size_t>(c)] + basis[static_cast<std::size_t>(c)]) % p;
        emit(particular);
    }
}

struct GhScan {
    const FixedSystem& sys;

    // scans g-indices in [g_lo, g_hi), all h, appending flat tuples
    void run(std::uint64_t g_lo, std::uint64_t g_hi, std::vector<FlatTuple>& out) const {
        const std::uint32_t p = sys.p;
        const int M = sys.M;
        std::vector<std::uint32_t> g(static_cast<std::size_t>(M), 0);
        {
            std::uint64_t idx = g_lo;
            for (int i = 0; i < M; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(idx % p);
                idx /= p;
            }
        }
        std::vector<std::uint32_t> h(static_cast<std::size_t>(M), 0);
        for (std::uint64_t gi = g_lo; gi < g_hi; ++gi) {
            std::fill(h.begin(), h.end(), 0);
            std::uint64_t h_count = 1;
            for (int i = 0; i < M; ++i) h_count *= p;
            for (std::uint64_t hi = 0; hi < h_count; ++hi) {
                if (sys.packed)
                    scan_pair_gf2(g, h, out);
                else
                    scan_pair(g, h, out);
                int pos = 0;
                while (pos < M && ++h[static_cast<std::size_t>(pos)] == p) {
                    h[static_cast<std::size_t>(pos)] = 0;
                    ++pos;
                }
            }
            int pos = 0;
            while (pos < M && ++g[static_cast<std::size_t>(pos)] == p) {
                g[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
        }
    }

    void emit_tuple(const std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& h,
                    const std::vector<std::uint32_t>& sol, std::vector<FlatTuple>& out) const {
        const int M = sys.M;
        FlatTuple t;
        t.reserve(static_cast<std::size_t>((3 + sys.n) * M));
        for (int i = 0; i < M; ++i) t.push_back(sol[static_cast<std::size_t>(i)]);  // f
        t.insert(t.end(), g.begin(), g.end());
        t.insert(t.end(), h.begin(), h.end());
        for (int c = M; c < sys.cols; ++c) t.push_back(sol[static_cast<std::size_t>(c)]);  // h_j
        out.push_back(std::move(t));
    }

    void scan_pair(const std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& h,
                   std::vector<FlatTuple>& out) const {
        const std::uint32_t p = sys.p;
        const int M = sys.M;
        // tb = E * rhs, accumulated over the nonzero entries of rhs
        std::vector<std::uint64_t> tb(static_cast<std::size_t>(sys.rows), 0);
        for (int x = 0; x < M; ++x) {
            if (g[static_cast<std::size_t>(x)] == 0) continue;
            for (int y = 0; y < M; ++y) {
                if (h[static_cast<std::size_t>(y)] == 0) continue;
                const std::uint64_t coeff =
                    static_cast<std::uint64_t>(g[static_cast<std::size_t>(x)]) *
                    h[static_cast<std::size_t>(y)] % p;
                const auto& col = sys.e_cols[static_cast<std::size_t>(x * M + y)];
                for (int r = 0; r < sys.rows; ++r)
                    tb[static_cast<std::size_t>(r)] += coeff * col[static_cast<std::size_t>(r)];
            }
        }
        for (int r = sys.rank; r < sys.rows; ++r)
            if (tb[static_cast<std::size_t>(r)] % p != 0) return;  // inconsistent
        std::vector<std::uint32_t> sol(static_cast<std::size_t>(sys.cols), 0);
        for (int r = 0; r < sys.rank; ++r)
            sol[static_cast<std::size_t>(sys.pivots[static_cast<std::size_t>(r)])] =
                static_cast<std::uint32_t>(tb[static_cast<std::size_t>(r)] % p);
        enumerate_affine(sys, std::move(sol),
                         [&](const std::vector<std::uint32_t>& s) { emit_tuple(g, h, s, out); });
    }

    void scan_pair_gf2(const std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& h,
                       std::vector<FlatTuple>& out) const {
        const int M = sys.M;
        std::uint64_t h_mask = 0;
        for (int y = 0; y < M; ++y)
            if (h[static_cast<std::size_t>(y)]) h_mask |= std::uint64_t{1} << y;
        std::uint64_t rhs = 0;
        for (int x = 0; x < M; ++x)
            if (g[static_cast<std::size_t>(x)]) rhs |= h_mask << (x * M);

        std::uint64_t tb = 0;
        for (int r = 0; r < sys.rows; ++r)
            tb |= static_cast<std::uint64_t>(
                      std::popcount(sys.e_rows2[static_cast<std::size_t>(r)] & rhs) & 1)
                  << r;
        if (tb & sys.inconsistent_mask) return;

        std::uint64_t sol = 0;
        for (int r = 0; r < sys.rank; ++r)
            if (tb >> r & 1)
                sol |= std::uint64_t{1} << sys.pivots[static_cast<std::size_t>(r)];

        // binary reflected Gray walk over the nullspace combinations
        const std::uint64_t combos = std::uint64_t{1} << sys.nullity;
        std::uint64_t cur = sol;
        for (std::uint64_t t = 0;; ++t) {
            std::vector<std::uint32_t> s(static_cast<std::size_t>(sys.cols), 0);
            for (int c = 0; c < sys.cols; ++c) s[static_cast<std::size_t>(c)] = cur >> c & 1;
            emit_tuple(g, h, s, out);
            if (t + 1 == combos) break;
            const int flip = std::countr_zero(t + 1);
            cur ^= sys.null2[static_cast<std::size_t>(flip)];
        }
    }
};

SolutionTuple unflatten(const ProblemSpec& spec, const FlatTuple& flat) {
    const Field F = spec.field();
    const int M = spec.monoid()->size();
    auto slice = [&](int offset) {
        std::vector<Scalar> vals;
        vals.reserve(static_cast<std::size_t>(M));
        for (int i = 0; i < M; ++i)
            vals.push_back(Scalar::of_int(F, flat[static_cast<std::size_t>(offset + i)]));
        return Func(spec.monoid(), F, std::move(vals));
    };
    std::vector<Func> hs;
    hs.reserve(static_cast<std::size_t>(spec.block_count()));
    for (int j = 0; j < spec.block_count(); ++j) hs.push_back(slice((3 + j) * M));
    return SolutionTuple{slice(0), slice(M), slice(2 * M), std::move(hs)};
}

FlatTuple flatten_residues(const SolutionTuple& t) {
    FlatTuple key;
    for (const Scalar& s : t.flatten()) key.push_back(s.residue());
    return key;
}

void check_oracle_pre(const ProblemSpec& spec, const OracleOptions& opts) {
    if (!spec.field().is_prime_field())
        throw InfiniteField("the exhaustive solver needs a finite field");
    const int M = spec.monoid()->size();
    if (M > kMonoidCap)
        throw BudgetExceeded("exhaustive solve limited to |M| <= " + std::to_string(kMonoidCap) +
                             ", got " + std::to_string(M));
    const u128 pairs = ipow_u128(spec.field().modulus(), 2 * M);
    if (pairs > opts.pair_budget)
        throw BudgetExceeded("|K|^(2|M|) outer iterations exceed the budget");
}

}  // namespace

int default_worker_count() {
    if (const char* env = std::getenv("LEVI_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

std::vector<SolutionTuple> solve_all(const ProblemSpec& spec, const OracleOptions& opts) {
    check_oracle_pre(spec, opts);
    const FixedSystem sys = build_system(spec);
    const std::uint32_t p = sys.p;

    std::uint64_t g_count = 1;
    for (int i = 0; i < sys.M; ++i) g_count *= p;

    const int workers =
        std::max(1, std::min<int>(opts.workers > 0 ? opts.workers : default_worker_count(),
                                  static_cast<int>(g_count)));
    const GhScan scan{sys};

    std::vector<std::vector<FlatTuple>> partial(static_cast<std::size_t>(workers));
    if (workers == 1) {
        scan.run(0, g_count, partial[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t lo = g_count * static_cast<std::uint64_t>(w) / workers;
            const std::uint64_t hi = g_count * (static_cast<std::uint64_t>(w) + 1) / workers;
            pool.emplace_back([&, w, lo, hi] {
                try {
                    scan.run(lo, hi, partial[static_cast<std::size_t>(w)]);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::vector<FlatTuple> flat;
    for (auto& part : partial) {
        flat.insert(flat.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
        part.clear();
    }
    std::sort(flat.begin(), flat.end());

    std::vector<SolutionTuple> out;
    out.reserve(flat.size());
    for (const FlatTuple& ft : flat) out.push_back(unflatten(spec, ft));
    return out;
}

std::vector<SolutionTuple> solve_fixed(const ProblemSpec& spec, const Func& g, const Func& h) {
    if (!same_monoid(g.monoid(), spec.monoid()) || !same_monoid(h.monoid(), spec.monoid()) ||
        !(g.field() == spec.field()) || !(h.field() == spec.field()))
        throw DomainMismatch();
    const Field F = spec.field();
    const Monoid& mon = *spec.monoid();
    const int M = mon.size(), n = spec.block_count();
    const int cols = (n + 1) * M;

    // augmented rows [A | g(x)h(y)] over Scalar, so the rationals work too
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(static_cast<std::size_t>(M) * M);
    for (int x = 0; x < M; ++x)
        for (int y = 0; y < M; ++y) {
            std::vector<Scalar> row(static_cast<std::size_t>(cols) + 1, Scalar::zero(F));
            row[static_cast<std::size_t>(mon.mul(x, y))] += Scalar::one(F);
            for (int j = 1; j <= n; ++j)
                row[static_cast<std::size_t>(M + (j - 1) * M + y)] -= spec.g_component(j)(x);
            row[static_cast<std::size_t>(cols)] = g(x) * h(y);
            rows.push_back(std::move(row));
        }
    const std::vector<int> pivots = detail::scalar_rref(rows, cols);
    const int rank_ = static_cast<int>(pivots.size());
    for (std::size_t r = static_cast<std::size_t>(rank_); r < rows.size(); ++r)
        if (!rows[r].back().is_zero()) return {};  // inconsistent: no solutions

    const int nullity = cols - rank_;
    if (nullity > kNullspaceCap) throw NullspaceCapExceeded(nullity);
    if (nullity > 0 && !F.is_prime_field())
        throw InfiniteField("positive-dimensional solution set over the rationals");

    std::vector<Scalar> particular(static_cast<std::size_t>(cols), Scalar::zero(F));
    for (int r = 0; r < rank_; ++r)
        particular[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] =
            rows[static_cast<std::size_t>(r)].back();

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(cols), Scalar::zero(F));
        v[static_cast<std::size_t>(fc)] = Scalar::one(F);
        for (int r = 0; r < rank_; ++r)
            v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] =
                -rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(fc)];
        basis.push_back(std::move(v));
    }

    auto tuple_of = [&](const std::vector<Scalar>& sol) {
        auto slice = [&](int offset) {
            return Func(spec.monoid(), F,
                        std::vector<Scalar>(sol.begin() + offset, sol.begin() + offset + M));
        };
        std::vector<Func> hs;
        hs.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) hs.push_back(slice(M + j * M));
        return SolutionTuple{slice(0), g, h, std::move(hs)};
    };

    std::vector<SolutionTuple> out;
    if (nullity == 0) {
        out.push_back(tuple_of(particular));
        return out;
    }
    const std::uint32_t p = F.modulus();
    const std::vector<Scalar> elems = enumerate_field(F);
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(nullity), 0);
    std::vector<Scalar> cur = particular;
    for (u128 t = 0;; ++t) {
        out.push_back(tuple_of(cur));
        if (t + 1 == ipow_u128(p, nullity)) break;
        u128 tt = t + 1;
        int pos = 0;
        while (tt % p == 0) {
            tt /= p;
            ++pos;
        }
        digits[static_cast<std::size_t>(pos)] = (digits[static_cast<std::size_t>(pos)] + 1) % p;
        for (int c = 0; c < cols; ++c)
            cur[static_cast<std::size_t>(c)] +=
                basis[static_cast<std::size_t>(pos)][static_cast<std::size_t>(c)];
    }
    std::sort(out.begin(), out.end(), SolutionTuple::canonical_less);
    return out;
}

std::string spec_digest(const ProblemSpec& spec) {
    // FNV-1a over a canonical byte stream of the spec content
    std::uint64_t hash = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char ch : s) {
            hash ^= ch;
            hash *= 1099511628211ull;
        }
        hash ^= 0xff;
        hash *= 1099511628211ull;
    };
    mix(spec.field().str());
    const Monoid& mon = *spec.monoid();
    mix(std::to_string(mon.size()));
    mix(std::to_string(mon.identity()));
    for (int x = 0; x < mon.size(); ++x)
        for (int y = 0; y < mon.size(); ++y) mix(std::to_string(mon.mul(x, y)));
    for (const Block& blk : spec.partition()) {
        mix(std::to_string(blk.lo));
        mix(std::to_string(blk.hi));
    }
    for (int i = 1; i <= spec.term_count(); ++i) {
        mix(spec.coeff(i).str());
        for (int x = 0; x < mon.size(); ++x) mix(spec.mu(i)(x).str());
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

OracleReport compare(const ProblemSpec& spec, const OracleOptions& opts,
                     const SweepOptions& sweep_opts) {
    const auto start = std::chrono::steady_clock::now();
    OracleReport report;
    report.spec_digest = spec_digest(spec);

    std::vector<SolutionTuple> found = solve_all(spec, opts);
    SweepResult swept = sweep_families(spec, sweep_opts);
    report.oracle_count = found.size();
    report.family_count = swept.tuples.size();
    report.per_family = std::move(swept.per_family);

    std::vector<FlatTuple> found_keys, swept_keys;
    found_keys.reserve(found.size());
    for (const SolutionTuple& t : found) found_keys.push_back(flatten_residues(t));
    swept_keys.reserve(swept.tuples.size());
    for (const SolutionTuple& t : swept.tuples) swept_keys.push_back(flatten_residues(t));
    // both sides are canonically sorted already

    for (std::size_t i = 0; i < found.size(); ++i)
        if (!std::binary_search(swept_keys.begin(), swept_keys.end(), found_keys[i]))
            report.missing.push_back(found[i]);
    for (const SolutionTuple& t : swept.tuples)
        if (!residual(spec, t).empty()) report.extra.push_back(t);

    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

}  // namespace levi
