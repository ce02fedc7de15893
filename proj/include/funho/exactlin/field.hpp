#pragma once

// Coefficient fields. Every algorithm in the library is a template over one
// of the two field types below; `ScalarField` is the runtime descriptor that
// selects between them at the edges (CLI, JSON, verification suites).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace funho {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed the configured ambient-dimension cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// The field of rational numbers, arbitrary precision.
struct Rationals {
    using value_type = mpq_class;

    static value_type zero() { return value_type(0); }
    static value_type one() { return value_type(1); }
    static value_type from_int(long v) { return value_type(v); }

    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type sub(const value_type& a, const value_type& b) { return a - b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type neg(const value_type& a) { return -a; }
    static value_type inv(const value_type& a) {
        if (sgn(a) == 0) throw Error("division by zero in Q");
        return 1 / a;
    }
    static value_type div(const value_type& a, const value_type& b) { return mul(a, inv(b)); }
    static bool is_zero(const value_type& a) { return sgn(a) == 0; }
    static bool equal(const value_type& a, const value_type& b) { return a == b; }

    /// `num/den` or an integer; denominators must be nonzero.
    static value_type parse(std::string_view text);
    /// `num/den` with den > 1, otherwise the integer.
    static std::string to_string(const value_type& a);
    /// Same as to_string for Q.
    static std::string to_exact_string(const value_type& a) { return to_string(a); }

    static std::string name() { return "Q"; }
    static std::uint32_t characteristic() { return 0; }
};

/// F_p for a prime 2 <= p < 2^31, elements stored reduced in [0, p).
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + static_cast<long>(p_) : r);
    }

    value_type add(value_type a, value_type b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const;
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    bool is_zero(value_type a) const { return a == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }

    /// Accepts integers and `num/den`; the result is reduced mod p.
    value_type parse(std::string_view text) const;
    std::string to_string(value_type a) const { return std::to_string(a); }
    /// `a mod p`, the form used in JSON output.
    std::string to_exact_string(value_type a) const {
        return std::to_string(a) + " mod " + std::to_string(p_);
    }

    std::string name() const { return "F_" + std::to_string(p_); }
    std::uint32_t characteristic() const { return p_; }

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Runtime field descriptor: `q`/`Q`/`rationals`, or `f<p>`, `F_<p>`, `fp:<p>`.
struct ScalarField {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static ScalarField rationals() { return {}; }
    static ScalarField prime(std::uint32_t p);
    static ScalarField parse(std::string_view text);

    /// Canonical short name: "Q" or "F_p".
    std::string name() const;
    /// Token accepted by the CLI: "q" or "f<p>".
    std::string token() const;

    friend bool operator==(const ScalarField&, const ScalarField&) = default;
};

/// Calls fn with a `const Rationals&` or `const PrimeField&`.
template <class Fn>
decltype(auto) visit_field(const ScalarField& field, Fn&& fn) {
    if (field.kind == ScalarField::Kind::rationals) {
        static const Rationals q{};
        return std::forward<Fn>(fn)(q);
    }
    const PrimeField fp(field.p);
    return std::forward<Fn>(fn)(fp);
}

template <class K>
ScalarField descriptor(const K& field) {
    if constexpr (std::is_same_v<K, Rationals>) {
        (void)field;
        return ScalarField::rationals();
    } else {
        return ScalarField::prime(field.modulus());
    }
}

}  // namespace funho
