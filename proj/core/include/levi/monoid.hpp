#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "levi/errors.hpp"

namespace levi {

class Monoid;
using MonoidPtr = std::shared_ptr<const Monoid>;

/// A finite monoid given by its Cayley table. Immutable after construction;
/// the identity and associativity laws are checked exhaustively on every
/// table of size <= 512 (larger tables are only reachable through the
/// law-preserving catalog constructions).
class Monoid {
public:
    /// Validates and wraps a raw table. table[x][y] is the index of x*y.
    /// Throws IndexOutOfRange, BadIdentity (with a witness element),
    /// NotAssociative (with a witness triple) or SizeLimit (size > 512).
    static MonoidPtr validate(int size, int identity, std::vector<std::vector<int>> table);

    // Catalog builders. Element indexing is fixed per builder so that JSON
    // fixtures are reproducible:
    //  - cyclic(n): Z_n under addition, element k at index k, identity 0.
    //  - symmetric3: permutations of {1,2,3} in lexicographic one-line order
    //    (identity first), x*y = "apply y, then x".
    //  - meet_semilattice(k): subsets of a k-set under intersection; index 0
    //    is the full set (the identity), then masks 0..2^k-2 ascending.
    //  - direct_product: pairs in row-major A-major order, (a,b) at a*|B|+b.
    static MonoidPtr cyclic(int n);
    static MonoidPtr symmetric3();
    static MonoidPtr meet_semilattice(int k);  // k in {1,2,3}
    static MonoidPtr direct_product(const MonoidPtr& a, const MonoidPtr& b);

    /// Parses catalog expressions: "cyclic(5)", "symmetric3",
    /// "meet_semilattice(2)", "direct_product(meet_semilattice(2),symmetric3)".
    static MonoidPtr from_catalog(std::string_view expr);

    int size() const noexcept { return size_; }
    int identity() const noexcept { return identity_; }
    int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * size_ + y]; }

    bool is_abelian() const;

    /// Structural equality: same size, identity and table.
    friend bool operator==(const Monoid& a, const Monoid& b) {
        return a.size_ == b.size_ && a.identity_ == b.identity_ && a.table_ == b.table_;
    }

private:
    Monoid(int size, int identity, std::vector<int> flat)
        : size_(size), identity_(identity), table_(std::move(flat)) {}
    static void check_laws(int size, int identity, const std::vector<int>& flat);

    int size_;
    int identity_;
    std::vector<int> table_;  // row-major, size*size
};

/// True when the two handles denote the same monoid (pointer or structural).
bool same_monoid(const MonoidPtr& a, const MonoidPtr& b);

}  // namespace levi
