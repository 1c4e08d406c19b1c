#include "hh/field.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace hh {

bool is_odd_prime(std::uint32_t p) noexcept {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void Fp::set_modulus(std::uint32_t p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("field modulus must be an odd prime, got " + std::to_string(p));
    p_.store(p, std::memory_order_relaxed);
}

Fp::Fp(long v) noexcept {
    const long p = static_cast<long>(modulus());
    long r = v % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
}

long Fp::symmetric() const noexcept {
    const long p = static_cast<long>(modulus());
    const long v = static_cast<long>(v_);
    return v > p / 2 ? v - p : v;
}

Fp& Fp::operator+=(Fp o) noexcept {
    const std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s % modulus());
    return *this;
}

Fp& Fp::operator-=(Fp o) noexcept {
    const std::uint64_t p = modulus();
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + p - o.v_) % p);
    return *this;
}

Fp& Fp::operator*=(Fp o) noexcept {
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % modulus());
    return *this;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = modulus(), x0 = 1, x1 = 0;
    while (b != 0) {
        const std::int64_t q = a / b;
        std::tie(a, b) = std::pair{b, a - q * b};
        std::tie(x0, x1) = std::pair{x1, x0 - q * x1};
    }
    return Fp(static_cast<long>(x0));
}

Rational FieldTraits<Rational>::from_decimal(std::string_view num, std::string_view den) {
    mpz_class n(std::string(num), 10);
    mpz_class d(den.empty() ? std::string("1") : std::string(den), 10);
    if (d == 0) throw std::domain_error("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

void FieldTraits<Rational>::make_primitive(std::span<Rational> row) {
    mpz_class content = 0;
    mpz_class denom = 1;
    for (const auto& a : row) {
        if (sgn(a) == 0) continue;
        content = gcd(content, a.get_num());
        denom = lcm(denom, a.get_den());
    }
    if (content == 0) return;
    const Rational scale(denom, content);
    for (auto& a : row)
        if (sgn(a) != 0) a *= scale;
}

Fp FieldTraits<Fp>::from_decimal(std::string_view num, std::string_view den) {
    auto reduce = [](std::string_view digits) {
        const std::uint64_t p = Fp::modulus();
        std::uint64_t r = 0;
        bool neg = false;
        for (char c : digits) {
            if (c == '-') { neg = true; continue; }
            r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
        }
        Fp v(static_cast<long>(r));
        return neg ? -v : v;
    };
    Fp n = reduce(num);
    if (den.empty()) return n;
    Fp d = reduce(den);
    if (d.value() == 0) throw std::domain_error("denominator vanishes in F_p");
    return n / d;
}

void FieldTraits<Fp>::make_primitive(std::span<Fp> row) {
    auto lead = std::find_if(row.begin(), row.end(), [](Fp a) { return a.value() != 0; });
    if (lead == row.end() || lead->value() == 1) return;
    const Fp inv = lead->inverse();
    for (auto& a : row) a *= inv;
}

}  // namespace hh
