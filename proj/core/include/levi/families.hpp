#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "levi/problem.hpp"

namespace levi {

// ---------------------------------------------------------------------
// Solution-family generators. Every generator returns a tuple with empty
// residual; preconditions on the parameters are enforced eagerly.
// ---------------------------------------------------------------------

/// f = ab*chi, g = b*chi - sum_k c_k g_k, h = a*chi, h_j = a c_j chi.
/// Requires chi nonzero multiplicative with chi != mu_i for all i, and
/// a, b nonzero. c has one entry per block.
SolutionTuple gen_independent(const ProblemSpec& spec, const MulFunc& chi, const Scalar& a,
                              const Scalar& b, const std::vector<Scalar>& c);

/// Block q of length exactly 2 (lo = n_q, hi = m_q):
///   f   = (d-c) (b b_{n_q} mu_{n_q} - a b_{m_q} mu_{m_q})
///   g   = d b_{n_q} mu_{n_q} + c b_{m_q} mu_{m_q} + sum_{j != q} c_j g_j
///   h   = a mu_{m_q} + b mu_{n_q}
///   h_q = -d a mu_{m_q} - c b mu_{n_q}
///   h_j = -c_j a mu_{m_q} - c_j b mu_{n_q}       (j != q)
/// Requires c != d and (a,b) != (0,0). cj has one entry per block; the entry
/// at position q is ignored.
SolutionTuple gen_dependent_pair(const ProblemSpec& spec, int q, const Scalar& a, const Scalar& b,
                                 const Scalar& c, const Scalar& d, const std::vector<Scalar>& cj);

/// Block q of length >= 3, distinguished index k inside it:
///   f   = a (c-d) b_k mu_k
///   g   = d g_q + (c-d) b_k mu_k + sum_{j != q} c_j g_j
///   h   = a mu_k,  h_q = -d a mu_k,  h_j = -a c_j mu_k   (j != q)
/// Requires a != 0 and c != d. The h_j carry the factor a: dropping it breaks
/// the equation whenever a != 1, which a dedicated test demonstrates.
SolutionTuple gen_dependent_single(const ProblemSpec& spec, int q, int k, const Scalar& a,
                                   const Scalar& c, const Scalar& d,
                                   const std::vector<Scalar>& cj);

/// f = 0, g = sum_k c_k g_k, h any nonzero function, h_j = -c_j h.
SolutionTuple gen_degenerate(const ProblemSpec& spec, const Func& h,
                             const std::vector<Scalar>& c);

/// f = 0, g arbitrary, h = h_j = 0.
SolutionTuple gen_trivial(const ProblemSpec& spec, const Func& g);

// ---------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------

enum class FamilyTag {
    Independent,
    DependentPair,
    DependentSingle,
    DegenerateNonzeroH,
    Trivial,
};

std::string family_name(FamilyTag tag);
FamilyTag family_from_name(const std::string& name);

struct IndependentParams {
    MulFunc chi;
    Scalar a, b;            // both nonzero
    std::vector<Scalar> c;  // c_1..c_n
};

struct DependentPairParams {
    int q;                   // 1-based block index, block length 2
    Scalar a, b, c, d;       // c != d, (a,b) != (0,0)
    std::vector<Scalar> cj;  // per block, entry at q unused
    std::vector<Scalar> ai;  // recovered coefficients of g = sum a_i mu_i
};

struct DependentSingleParams {
    int q, k;                // block of length >= 3, k inside it (1-based)
    Scalar a, c, d;          // a != 0, c != d
    std::vector<Scalar> cj;  // per block, entry at q unused
    std::vector<Scalar> ai;  // recovered coefficients of g = sum a_i mu_i
};

struct DegenerateHParams {
    std::vector<Scalar> c;  // c_1..c_n
    Func h;                 // nonzero
};

struct TrivialParams {
    Func g;
};

/// The recovered family tag with its parameters. Regenerating from a
/// classification reproduces the classified tuple exactly.
struct Classification {
    std::variant<IndependentParams, DependentPairParams, DependentSingleParams, DegenerateHParams,
                 TrivialParams>
        params;

    FamilyTag tag() const;
};

/// Dispatches to the matching generator.
SolutionTuple regenerate(const ProblemSpec& spec, const Classification& cls);

/// Case analysis of a verified solution. Refuses non-solutions (NotASolution);
/// a verified solution matching no family raises InternalCaseExhaustion with
/// the tuple reported verbatim -- that event would be a completeness
/// counterexample.
Classification classify(const ProblemSpec& spec, const SolutionTuple& t);

// ---------------------------------------------------------------------
// Family sweep
// ---------------------------------------------------------------------

struct SweepOptions {
    std::uint64_t budget = std::uint64_t{1} << 24;  // max parameter tuples
    bool independent = true;                        // family toggles (tests use
    bool dependent_pair = true;                     // them as negative controls)
    bool dependent_single = true;
    bool degenerate = true;
    bool trivial = true;
};

struct SweepResult {
    std::vector<SolutionTuple> tuples;              // deduplicated, canonically sorted
    std::map<std::string, std::uint64_t> per_family;  // distinct tuples per family
};

/// Materializes every tuple produced by the five generators over all
/// admissible parameter values. Finite prime fields only (InfiniteField);
/// the parameter space must stay within the budget (BudgetExceeded).
SweepResult sweep_families(const ProblemSpec& spec, const SweepOptions& opts = {});

}  // namespace levi
