#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace homops {

// Element of a prime field, normalized to 0 <= v < p.
struct FpElt {
    std::int64_t v = 0;
    std::int64_t p = 0;
};

// A field specification: the rationals, or a prime field F_p.
struct FieldSpec {
    std::int64_t p = 0;  // 0 means Q

    bool is_rational() const { return p == 0; }
    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(std::int64_t p);
    static FieldSpec parse(const std::string& s);  // "q" or "fp:<prime>"
    std::string to_string() const;
};

bool is_prime(std::int64_t n);

// Exact scalar: an arbitrary-precision rational or a prime-field element.
// The two variants never mix within one computation; mixing throws.
class Scalar {
  public:
    Scalar() : rep_(mpq_class(0)) {}
    explicit Scalar(const mpq_class& q) : rep_(q) { canonicalize(); }
    explicit Scalar(const mpz_class& z) : rep_(mpq_class(z)) {}

    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar integer(std::int64_t n) { return Scalar(mpz_class(n)); }
    static Scalar mod(std::int64_t v, std::int64_t p);
    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    // Image of an integer under the canonical map Z -> F.
    static Scalar from_int(std::int64_t n, const FieldSpec& f);

    bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
    bool is_mod() const { return !is_rational(); }
    const mpq_class& rat() const;
    const FpElt& fp() const;
    FieldSpec field() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on zero divisor
    Scalar operator-() const;
    Scalar inv() const;  // throws on zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Image of this scalar in the given field (rational reduced mod p when
    // the target is a prime field; throws when the denominator vanishes).
    Scalar to_field(const FieldSpec& f) const;

    // "num/den" (den omitted when 1) or "v mod p".
    std::string to_string() const;
    static Scalar parse(const std::string& s);

  private:
    void canonicalize();
    std::variant<mpq_class, FpElt> rep_;
};

// Binomial coefficient with the out-of-range convention:
// returns 0 whenever k < 0, n < 0 or k > n.
mpz_class binomial(long n, long k);

mpz_class factorial(long n);

}  // namespace homops
