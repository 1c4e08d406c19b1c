#pragma once

#include <atomic>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hh {

/// Arbitrary-precision rationals, the default coefficient field.
using Rational = mpq_class;

/// Element of the prime field F_p.
///
/// The modulus is process-wide and set once at startup with set_modulus();
/// mixing elements created under different moduli is undefined.
class Fp {
public:
    static constexpr std::uint32_t kDefaultModulus = 32003;

    static void set_modulus(std::uint32_t p);
    static std::uint32_t modulus() noexcept { return p_.load(std::memory_order_relaxed); }

    Fp() = default;
    Fp(long v) noexcept;  // NOLINT: implicit from integers, like mpq_class

    std::uint32_t value() const noexcept { return v_; }
    /// Representative in (-p/2, p/2].
    long symmetric() const noexcept;

    Fp inverse() const;

    Fp& operator+=(Fp o) noexcept;
    Fp& operator-=(Fp o) noexcept;
    Fp& operator*=(Fp o) noexcept;
    Fp& operator/=(Fp o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, Fp b) noexcept { return a += b; }
    friend Fp operator-(Fp a, Fp b) noexcept { return a -= b; }
    friend Fp operator*(Fp a, Fp b) noexcept { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend Fp operator-(Fp a) noexcept { return Fp{} - a; }
    friend bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }

private:
    std::uint32_t v_ = 0;
    static inline std::atomic<std::uint32_t> p_{kDefaultModulus};
};

bool is_odd_prime(std::uint32_t p) noexcept;

/// Per-field operations the engine needs beyond +,-,*,/.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static std::string name() { return "q"; }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static Rational from_int(long v) { return Rational(v); }
    /// Exact value of num/den given as decimal digit strings.
    static Rational from_decimal(std::string_view num, std::string_view den);
    static std::string to_string(const Rational& a) { return a.get_str(); }
    static bool is_negative(const Rational& a) { return sgn(a) < 0; }
    /// Scale a row to a primitive integer vector (content 1, same direction).
    static void make_primitive(std::span<Rational> row);
};

template <>
struct FieldTraits<Fp> {
    static std::string name() { return "fp:" + std::to_string(Fp::modulus()); }
    static bool is_zero(const Fp& a) { return a.value() == 0; }
    static Fp from_int(long v) { return Fp(v); }
    static Fp from_decimal(std::string_view num, std::string_view den);
    static std::string to_string(const Fp& a) { return std::to_string(a.symmetric()); }
    static bool is_negative(const Fp& a) { return a.symmetric() < 0; }
    /// Scale so the first nonzero entry is 1.
    static void make_primitive(std::span<Fp> row);
};

template <class K>
concept ExactField = requires(K a, K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { FieldTraits<K>::is_zero(a) } -> std::same_as<bool>;
    { FieldTraits<K>::from_int(1L) } -> std::same_as<K>;
};

}  // namespace hh
