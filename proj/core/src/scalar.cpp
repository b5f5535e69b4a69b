#include "levi/scalar.hpp"

#include <utility>

namespace levi {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// extended Euclid, returns x with a*x = 1 (mod p)
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw DivisionByZero();
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

}  // namespace

Field Field::gf(std::uint32_t p) {
    if (p >= (1u << 16))
        throw InvalidField("prime modulus must be < 2^16, got " + std::to_string(p));
    if (!is_prime_u32(p))
        throw InvalidField(std::to_string(p) + " is not prime");
    return Field(Kind::PrimeField, p);
}

std::uint32_t Field::modulus() const {
    if (!is_prime_field()) throw InvalidField("the rationals have no modulus");
    return p_;
}

std::string Field::str() const {
    return is_prime_field() ? "gf:" + std::to_string(p_) : std::string("rational");
}

Scalar Scalar::zero(const Field& f) {
    return f.is_prime_field() ? Scalar(f, std::uint32_t{0}) : Scalar(f, BigRat(0));
}

Scalar Scalar::one(const Field& f) {
    return f.is_prime_field() ? Scalar(f, std::uint32_t{1}) : Scalar(f, BigRat(1));
}

Scalar Scalar::of_int(const Field& f, long long v) {
    if (f.is_prime_field()) {
        const long long p = f.modulus();
        long long r = v % p;
        if (r < 0) r += p;
        return Scalar(f, static_cast<std::uint32_t>(r));
    }
    return Scalar(f, BigRat(v));
}

Scalar Scalar::rational(const BigRat& q) { return Scalar(Field::rationals(), q); }

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw DivisionByZero();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Scalar(Field::rationals(), BigRat(BigInt(num), BigInt(den)));
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (text.empty()) throw Error("empty scalar literal");
    if (f.is_prime_field())
        return of_int(f, std::stoll(text));
    const auto slash = text.find('/');
    BigInt num(slash == std::string::npos ? text : text.substr(0, slash));
    BigInt den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
    if (den == 0) throw DivisionByZero();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Scalar(f, BigRat(num, den));
}

bool Scalar::is_zero() const noexcept {
    return field_.is_prime_field() ? res_ == 0 : rat_.is_zero();
}

bool Scalar::is_one() const noexcept {
    return field_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

std::uint32_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw InvalidField("residue() on a rational scalar");
    return res_;
}

const BigRat& Scalar::rat() const {
    if (!field_.is_rationals()) throw InvalidField("rat() on a prime-field scalar");
    return rat_;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw DescriptorMismatch();
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime_field()) {
        std::uint32_t s = res_ + o.res_;
        const std::uint32_t p = field_.modulus();
        if (s >= p) s -= p;
        return Scalar(field_, s);
    }
    return Scalar(field_, BigRat(rat_ + o.rat_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime_field()) {
        const std::uint32_t p = field_.modulus();
        return Scalar(field_, res_ >= o.res_ ? res_ - o.res_ : res_ + p - o.res_);
    }
    return Scalar(field_, BigRat(rat_ - o.rat_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime_field()) {
        const std::uint64_t prod =
            static_cast<std::uint64_t>(res_) * static_cast<std::uint64_t>(o.res_);
        return Scalar(field_, static_cast<std::uint32_t>(prod % field_.modulus()));
    }
    return Scalar(field_, BigRat(rat_ * o.rat_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
    if (field_.is_prime_field())
        return Scalar(field_, res_ == 0 ? 0 : field_.modulus() - res_);
    return Scalar(field_, BigRat(-rat_));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (field_.is_prime_field())
        return Scalar(field_, mod_inverse(res_, field_.modulus()));
    return Scalar(field_, BigRat(1 / rat_));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_prime_field() ? a.res_ == b.res_ : a.rat_ == b.rat_;
}

bool Scalar::canonical_less(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    return a.field_.is_prime_field() ? a.res_ < b.res_ : a.rat_ < b.rat_;
}

std::string Scalar::str() const {
    if (field_.is_prime_field()) return std::to_string(res_);
    const BigInt num = boost::multiprecision::numerator(rat_);
    const BigInt den = boost::multiprecision::denominator(rat_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::vector<Scalar> enumerate_field(const Field& f) {
    if (!f.is_prime_field())
        throw InfiniteField("the rationals cannot be enumerated");
    std::vector<Scalar> out;
    out.reserve(f.modulus());
    for (std::uint32_t v = 0; v < f.modulus(); ++v)
        out.push_back(Scalar::of_int(f, v));
    return out;
}

}  // namespace levi
