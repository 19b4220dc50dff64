#pragma once

// Exact arithmetic in Q(w), w a primitive cube root of unity.
//
// BigRational is a thin value wrapper over GMP's mpq_class (always kept in
// lowest terms with a positive denominator).  CycloNum stores a + b*w with
// the relation w^2 = -1 - w, so the pair (a, b) is canonical and equality is
// structural.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "arches/error.hpp"

namespace arches {

class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : v_(v) {} // NOLINT(google-explicit-constructor)
    BigRational(int v) : v_(static_cast<long>(v)) {} // NOLINT
    BigRational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
        v_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}
    explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& raw() const noexcept { return v_; }
    mpq_class& raw() noexcept { return v_; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    int sign() const noexcept { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const { return v_.get_str(10); }

    /// Accepts an optional sign, digits, and an optional "/digits" part.
    static BigRational parse(std::string_view s) {
        auto bad = [&] { return Error(ErrorKind::Parse, "bad rational '" + std::string(s) + "'"); };
        if (s.empty()) throw bad();
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') ++i;
        std::size_t slash = s.find('/');
        auto digits = [&](std::size_t b, std::size_t e) {
            if (b >= e) return false;
            for (std::size_t k = b; k < e; ++k)
                if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
            return true;
        };
        if (slash == std::string_view::npos) {
            if (!digits(i, s.size())) throw bad();
            return BigRational(mpq_class(mpz_class(std::string(s[0] == '+' ? s.substr(1) : s))));
        }
        if (!digits(i, slash) || !digits(slash + 1, s.size())) throw bad();
        mpz_class num(std::string(s.substr(s[0] == '+' ? 1 : 0, slash - (s[0] == '+' ? 1 : 0))));
        mpz_class den(std::string(s.substr(slash + 1)));
        return BigRational(num, den);
    }

    std::size_t hash() const {
        return std::hash<std::string>{}(to_string());
    }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

/// a + b*w with w^2 + w + 1 = 0.
class CycloNum {
public:
    CycloNum() = default;
    CycloNum(long a) : re_(a) {} // NOLINT(google-explicit-constructor)
    CycloNum(int a) : re_(static_cast<long>(a)) {} // NOLINT
    CycloNum(BigRational a) : re_(std::move(a)) {} // NOLINT
    CycloNum(BigRational a, BigRational b) : re_(std::move(a)), om_(std::move(b)) {}

    static CycloNum omega() { return {BigRational(0), BigRational(1)}; }

    const BigRational& re_part() const noexcept { return re_; }
    const BigRational& om_part() const noexcept { return om_; }

    bool is_zero() const noexcept { return re_.is_zero() && om_.is_zero(); }
    bool is_rational() const noexcept { return om_.is_zero(); }

    CycloNum operator-() const { return {-re_, -om_}; }
    CycloNum& operator+=(const CycloNum& o) {
        re_.raw() += o.re_.raw();
        om_.raw() += o.om_.raw();
        return *this;
    }
    CycloNum& operator-=(const CycloNum& o) {
        re_.raw() -= o.re_.raw();
        om_.raw() -= o.om_.raw();
        return *this;
    }
    CycloNum& operator*=(const CycloNum& o) {
        // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd) w
        if (o.om_.is_zero()) {
            re_.raw() *= o.re_.raw();
            om_.raw() *= o.re_.raw();
            return *this;
        }
        mpq_class bd = om_.raw() * o.om_.raw();
        mpq_class na = re_.raw() * o.re_.raw() - bd;
        mpq_class nb = re_.raw() * o.om_.raw() + om_.raw() * o.re_.raw() - bd;
        re_.raw() = std::move(na);
        om_.raw() = std::move(nb);
        return *this;
    }
    CycloNum& operator*=(const BigRational& r) {
        re_.raw() *= r.raw();
        om_.raw() *= r.raw();
        return *this;
    }
    CycloNum& operator/=(const CycloNum& o) { return *this *= o.inv(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator*(CycloNum a, const BigRational& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

    friend bool operator==(const CycloNum& x, const CycloNum& y) { return x.re_ == y.re_ && x.om_ == y.om_; }
    friend bool operator!=(const CycloNum& x, const CycloNum& y) { return !(x == y); }

    /// Galois conjugate w -> w^2 (complex conjugation).
    CycloNum conj() const { return {re_ - om_, -om_}; }

    /// |x|^2 = a^2 - ab + b^2.
    BigRational norm_sq() const {
        return BigRational(mpq_class(re_.raw() * re_.raw() - re_.raw() * om_.raw() + om_.raw() * om_.raw()));
    }

    CycloNum inv() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(w)");
        BigRational n = norm_sq();
        CycloNum c = conj();
        c.re_ /= n;
        c.om_ /= n;
        return c;
    }

    CycloNum pow(long k) const {
        if (k < 0) return inv().pow(-k);
        CycloNum r(1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    /// "p/q+r/s*w"; zero parts are omitted, zero itself is "0".
    std::string to_string() const {
        if (om_.is_zero()) return re_.to_string();
        std::string om = om_.to_string() + "*w";
        if (re_.is_zero()) return om;
        if (om_.sign() < 0) return re_.to_string() + om;
        return re_.to_string() + "+" + om;
    }

    static CycloNum parse(std::string_view s) {
        auto bad = [&] { return Error(ErrorKind::Parse, "bad cyclotomic number '" + std::string(s) + "'"); };
        if (s.empty()) throw bad();
        if (s.size() >= 2 && s.substr(s.size() - 2) == "*w") {
            std::string_view body = s.substr(0, s.size() - 2);
            // split at the last sign that is not at position 0
            std::size_t cut = std::string_view::npos;
            for (std::size_t k = body.size(); k-- > 1;) {
                if (body[k] == '+' || body[k] == '-') {
                    cut = k;
                    break;
                }
            }
            if (cut == std::string_view::npos) return {BigRational(0), BigRational::parse(body)};
            BigRational a = BigRational::parse(body.substr(0, cut));
            std::string_view bpart = body.substr(cut);
            if (bpart[0] == '+') bpart.remove_prefix(1);
            if (bpart.empty()) throw bad();
            return {a, BigRational::parse(bpart)};
        }
        if (s.find('w') != std::string_view::npos) throw bad();
        return {BigRational::parse(s), BigRational(0)};
    }

    std::size_t hash() const { return re_.hash() * 1000003u ^ om_.hash(); }

private:
    BigRational re_;
    BigRational om_;
};

inline std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.to_string(); }

/// q = w = e^{2 i pi / 3}; returns w^(k mod 3).
inline CycloNum q_power(long k) {
    long r = ((k % 3) + 3) % 3;
    if (r == 0) return CycloNum(1);
    if (r == 1) return CycloNum::omega();
    return {BigRational(-1), BigRational(-1)};
}

inline CycloNum cyclo_mul(const CycloNum& x, const CycloNum& y) { return x * y; }
inline CycloNum cyclo_inv(const CycloNum& x) { return x.inv(); }
inline BigRational cyclo_norm_sq(const CycloNum& x) { return x.norm_sq(); }

struct CycloHash {
    std::size_t operator()(const CycloNum& x) const { return x.hash(); }
};

} // namespace arches
