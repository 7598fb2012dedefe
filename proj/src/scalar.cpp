#include "homops/scalar.hpp"

namespace homops {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

[[noreturn]] void throw_mismatch() {
    throw std::invalid_argument("scalar field mismatch: cannot mix rational and prime-field values");
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit range
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("fp:", 0) == 0) return prime(std::stoll(s.substr(3)));
    throw std::invalid_argument("bad field spec '" + s + "' (expected q or fp:<prime>)");
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "q" : "fp:" + std::to_string(p);
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::mod(std::int64_t v, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    Scalar s;
    std::int64_t r = v % p;
    if (r < 0) r += p;
    s.rep_ = FpElt{r, p};
    return s;
}

Scalar Scalar::zero(const FieldSpec& f) { return f.is_rational() ? integer(0) : mod(0, f.p); }
Scalar Scalar::one(const FieldSpec& f) { return f.is_rational() ? integer(1) : mod(1, f.p); }

Scalar Scalar::from_int(std::int64_t n, const FieldSpec& f) {
    return f.is_rational() ? integer(n) : mod(n, f.p);
}

const mpq_class& Scalar::rat() const {
    if (!is_rational()) throw std::invalid_argument("scalar is not rational");
    return std::get<mpq_class>(rep_);
}

const FpElt& Scalar::fp() const {
    if (!is_mod()) throw std::invalid_argument("scalar is not a prime-field element");
    return std::get<FpElt>(rep_);
}

FieldSpec Scalar::field() const {
    return is_rational() ? FieldSpec::rationals() : FieldSpec{fp().p};
}

void Scalar::canonicalize() {
    if (is_rational()) std::get<mpq_class>(rep_).canonicalize();
}

bool Scalar::is_zero() const {
    return is_rational() ? rat() == 0 : fp().v == 0;
}

bool Scalar::is_one() const {
    return is_rational() ? rat() == 1 : fp().v == 1 % fp().p;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_rational() != o.is_rational()) throw_mismatch();
    if (is_rational()) return Scalar(mpq_class(rat() + o.rat()));
    if (fp().p != o.fp().p) throw_mismatch();
    std::int64_t r = fp().v + o.fp().v;
    if (r >= fp().p) r -= fp().p;
    Scalar s;
    s.rep_ = FpElt{r, fp().p};
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_rational() != o.is_rational()) throw_mismatch();
    if (is_rational()) return Scalar(mpq_class(rat() * o.rat()));
    if (fp().p != o.fp().p) throw_mismatch();
    Scalar s;
    s.rep_ = FpElt{mulmod(fp().v, o.fp().v, fp().p), fp().p};
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(mpq_class(-rat()));
    Scalar s;
    s.rep_ = FpElt{fp().v == 0 ? 0 : fp().p - fp().v, fp().p};
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return Scalar(mpq_class(1 / rat()));
    Scalar s;
    s.rep_ = FpElt{powmod(fp().v, fp().p - 2, fp().p), fp().p};
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_rational() != o.is_rational()) throw_mismatch();
    if (is_rational()) return rat() == o.rat();
    if (fp().p != o.fp().p) throw_mismatch();
    return fp().v == o.fp().v;
}

Scalar Scalar::to_field(const FieldSpec& f) const {
    if (f.is_rational()) {
        if (!is_rational()) throw std::invalid_argument("cannot lift prime-field scalar to Q");
        return *this;
    }
    if (is_mod()) {
        if (fp().p != f.p) throw_mismatch();
        return *this;
    }
    mpz_class p(static_cast<long>(f.p));
    mpz_class num = rat().get_num() % p;
    mpz_class den = rat().get_den() % p;
    std::int64_t n = num.get_si();
    std::int64_t d = den.get_si();
    if (d % f.p == 0) throw std::domain_error("denominator vanishes in F_p");
    return mod(n, f.p) * mod(d, f.p).inv();
}

std::string Scalar::to_string() const {
    if (is_mod()) return std::to_string(fp().v) + " mod " + std::to_string(fp().p);
    const mpq_class& q = rat();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar Scalar::parse(const std::string& s) {
    auto mod_pos = s.find(" mod ");
    if (mod_pos != std::string::npos) {
        return Scalar::mod(std::stoll(s.substr(0, mod_pos)), std::stoll(s.substr(mod_pos + 5)));
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        return Scalar::rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    }
    return Scalar(mpz_class(s));
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(long n) {
    if (n < 0) return 0;
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace homops
