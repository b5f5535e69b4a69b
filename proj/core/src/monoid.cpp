#include "levi/monoid.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace levi {

namespace {

constexpr int kValidationCap = 512;   // exhaustive O(n^3) law check refused above this
constexpr int kProductCap = 4096;     // hard cap on catalog product size

std::vector<int> flatten(int size, const std::vector<std::vector<int>>& table) {
    if (static_cast<int>(table.size()) != size)
        throw IndexOutOfRange("table has " + std::to_string(table.size()) + " rows, expected " +
                              std::to_string(size));
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(size) * size);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != size)
            throw IndexOutOfRange("table row has wrong length");
        for (int v : row) {
            if (v < 0 || v >= size)
                throw IndexOutOfRange("table entry " + std::to_string(v) + " out of [0, " +
                                      std::to_string(size) + ")");
            flat.push_back(v);
        }
    }
    return flat;
}

}  // namespace

void Monoid::check_laws(int size, int identity, const std::vector<int>& flat) {
    auto at = [&](int x, int y) { return flat[static_cast<std::size_t>(x) * size + y]; };
    for (int x = 0; x < size; ++x)
        if (at(identity, x) != x || at(x, identity) != x) throw BadIdentity(x);
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
            const int xy = at(x, y);
            for (int z = 0; z < size; ++z)
                if (at(xy, z) != at(x, at(y, z))) throw NotAssociative(x, y, z);
        }
}

MonoidPtr Monoid::validate(int size, int identity, std::vector<std::vector<int>> table) {
    if (size <= 0) throw IndexOutOfRange("monoid size must be positive");
    if (size > kValidationCap)
        throw SizeLimit("exhaustive validation refused for size " + std::to_string(size) +
                        " (cap " + std::to_string(kValidationCap) + ")");
    if (identity < 0 || identity >= size) throw IndexOutOfRange("identity index out of range");
    std::vector<int> flat = flatten(size, table);
    check_laws(size, identity, flat);
    return MonoidPtr(new Monoid(size, identity, std::move(flat)));
}

MonoidPtr Monoid::cyclic(int n) {
    if (n < 1) throw IndexOutOfRange("cyclic(n) needs n >= 1");
    if (n > kProductCap) throw SizeLimit("cyclic(" + std::to_string(n) + ") exceeds size cap");
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) flat[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
    return MonoidPtr(new Monoid(n, 0, std::move(flat)));
}

MonoidPtr Monoid::symmetric3() {
    // one-line notation over {1,2,3}, lexicographic
    static constexpr std::array<std::array<int, 3>, 6> perms = {{
        {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
    }};
    auto compose = [&](int x, int y) {  // (x*y)(i) = x(y(i))
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[x][perms[y][i] - 1];
        for (int k = 0; k < 6; ++k)
            if (perms[k] == c) return k;
        throw InternalError("S3 composition fell outside the table");
    };
    std::vector<int> flat(36);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) flat[static_cast<std::size_t>(x) * 6 + y] = compose(x, y);
    Monoid m(6, 0, std::move(flat));
    check_laws(6, 0, m.table_);
    return MonoidPtr(new Monoid(std::move(m)));
}

MonoidPtr Monoid::meet_semilattice(int k) {
    if (k < 1 || k > 3) throw IndexOutOfRange("meet_semilattice(k) needs k in {1,2,3}");
    const int full = (1 << k) - 1;
    const int size = 1 << k;
    // index 0 = full set, then masks 0..full-1 ascending
    std::vector<int> mask_of(size);
    std::vector<int> index_of(size);
    mask_of[0] = full;
    index_of[full] = 0;
    for (int m = 0; m < full; ++m) {
        mask_of[m + 1] = m;
        index_of[m] = m + 1;
    }
    std::vector<int> flat(static_cast<std::size_t>(size) * size);
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
            flat[static_cast<std::size_t>(x) * size + y] = index_of[mask_of[x] & mask_of[y]];
    Monoid m(size, 0, std::move(flat));
    check_laws(size, 0, m.table_);
    return MonoidPtr(new Monoid(std::move(m)));
}

MonoidPtr Monoid::direct_product(const MonoidPtr& a, const MonoidPtr& b) {
    const long long size = static_cast<long long>(a->size()) * b->size();
    if (size > kProductCap)
        throw SizeLimit("direct product size " + std::to_string(size) + " exceeds cap " +
                        std::to_string(kProductCap));
    const int n = static_cast<int>(size), nb = b->size();
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        const int xa = x / nb, xb = x % nb;
        for (int y = 0; y < n; ++y) {
            const int ya = y / nb, yb = y % nb;
            flat[static_cast<std::size_t>(x) * n + y] = a->mul(xa, ya) * nb + b->mul(xb, yb);
        }
    }
    const int identity = a->identity() * nb + b->identity();
    Monoid m(n, identity, std::move(flat));
    if (n <= kValidationCap) check_laws(n, identity, m.table_);
    return MonoidPtr(new Monoid(std::move(m)));
}

bool Monoid::is_abelian() const {
    for (int x = 0; x < size_; ++x)
        for (int y = x + 1; y < size_; ++y)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

bool same_monoid(const MonoidPtr& a, const MonoidPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// splits "head(args)" -> {head, args}; args empty when no parentheses
std::pair<std::string_view, std::string_view> split_call(std::string_view expr) {
    const auto open = expr.find('(');
    if (open == std::string_view::npos) return {expr, {}};
    if (expr.back() != ')') throw UnknownName(std::string(expr));
    return {strip(expr.substr(0, open)), strip(expr.substr(open + 1, expr.size() - open - 2))};
}

// splits top-level "lhs,rhs" respecting nested parentheses
std::pair<std::string_view, std::string_view> split_pair(std::string_view args) {
    int depth = 0;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == '(') ++depth;
        else if (args[i] == ')') --depth;
        else if (args[i] == ',' && depth == 0)
            return {strip(args.substr(0, i)), strip(args.substr(i + 1))};
    }
    throw UnknownName(std::string(args));
}

int parse_int(std::string_view s) {
    if (s.empty()) throw UnknownName(std::string(s));
    int v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw UnknownName(std::string(s));
        v = v * 10 + (ch - '0');
        if (v > kProductCap) throw SizeLimit("catalog argument too large");
    }
    return v;
}

}  // namespace

MonoidPtr Monoid::from_catalog(std::string_view expr) {
    const auto [head, args] = split_call(strip(expr));
    if (head == "cyclic") return cyclic(parse_int(args));
    if (head == "symmetric3") return symmetric3();
    if (head == "meet_semilattice") return meet_semilattice(parse_int(args));
    if (head == "direct_product") {
        const auto [lhs, rhs] = split_pair(args);
        return direct_product(from_catalog(lhs), from_catalog(rhs));
    }
    throw UnknownName(std::string(expr));
}

}  // namespace levi
