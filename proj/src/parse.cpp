#include "hh/parse.hpp"

#include <cctype>
#include <limits>

namespace hh {

namespace {

template <class K>
class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    AlgebraElement<K> algebra() {
        auto e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

    Cochain<K> cochain() {
        skip_ws();
        if (peek() == '0') {
            const std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (pos_ == s_.size()) return Cochain<K>(0);
            pos_ = save;
        }
        std::optional<int> deg;
        Cochain<K> out;
        bool first = true;
        while (true) {
            skip_ws();
            K sign = FieldTraits<K>::from_int(1);
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = FieldTraits<K>::from_int(-1);
                ++pos_;
            } else if (!first) {
                break;
            }
            first = false;
            skip_ws();
            const std::size_t term_start = pos_;
            K coeff = sign;
            if (std::isdigit(static_cast<unsigned char>(peek())) && !is_label_one()) {
                coeff *= scalar();
                skip_ws();
                expect('*');
            }
            const auto [lam_sign, lam] = wedge_label();
            skip_ws();
            expect('#');
            skip_ws();
            expect('(');
            auto a = expr();
            skip_ws();
            expect(')');
            const int d = degree(lam);
            if (deg && *deg != d) throw ParseError("mixed-degree labels in cochain", term_start);
            deg = d;
            if (out.is_zero()) out = Cochain<K>(d);
            out.add(lam, a * (coeff * FieldTraits<K>::from_int(lam_sign)));
            skip_ws();
            if (pos_ == s_.size()) break;
        }
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return out;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    // "1 #" is the degree-0 label, not a coefficient.
    bool is_label_one() const {
        if (peek() != '1') return false;
        std::size_t p = pos_ + 1;
        while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
        return p < s_.size() && s_[p] == '#';
    }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return s_.substr(start, pos_ - start);
    }

    K scalar() {
        const std::string_view num = digits();
        std::string_view den;
        if (peek() == '/') {
            ++pos_;
            const std::size_t at = pos_;
            den = digits();
            if (den.find_first_not_of('0') == std::string_view::npos) throw ParseError("zero denominator", at);
        }
        return FieldTraits<K>::from_decimal(num, den);
    }

    AlgebraElement<K> expr() {
        skip_ws();
        AlgebraElement<K> acc;
        bool first = true;
        while (true) {
            skip_ws();
            bool negate = false;
            if (peek() == '+' || peek() == '-') {
                negate = peek() == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            first = false;
            auto t = term();
            if (negate) acc -= t;
            else acc += t;
        }
        return acc;
    }

    AlgebraElement<K> term() {
        auto acc = power();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            acc = multiply(acc, power());
        }
        return acc;
    }

    AlgebraElement<K> power() {
        auto base = primary();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        if (peek() == '-') fail("negative exponent");
        const std::size_t at = pos_;
        const std::string_view e = digits();
        if (e.size() > 6) throw ParseError("exponent too large", at);
        const long n = std::stol(std::string(e));
        auto out = AlgebraElement<K>::one();
        for (long k = 0; k < n; ++k) out = multiply(out, base);
        return out;
    }

    AlgebraElement<K> primary() {
        skip_ws();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return AlgebraElement<K>::scalar(scalar());
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            return AlgebraElement<K>::generator(c == 'x' ? Gen::X : c == 'y' ? Gen::Y : Gen::Z);
        }
        if (c == '(') {
            ++pos_;
            auto e = expr();
            skip_ws();
            expect(')');
            return e;
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::pair<int, Wedge> wedge_label() {
        if (peek() == '1') {
            ++pos_;
            return {1, Wedge::One};
        }
        int sign = 1;
        Wedge acc = Wedge::One;
        while (true) {
            skip_ws();
            Wedge letter;
            switch (peek()) {
                case 't': letter = Wedge::T; break;
                case 'u': letter = Wedge::U; break;
                case 'v': letter = Wedge::V; break;
                default: fail("expected a wedge label");
            }
            const auto p = wedge(acc, letter);
            if (p.sign == 0) fail("repeated letter in wedge label");
            ++pos_;
            sign *= p.sign;
            acc = p.label;
            skip_ws();
            if (peek() != '^') break;
            ++pos_;
        }
        return {sign, acc};
    }
};

template <class K>
std::string coefficient_text(const K& c, bool& negative) {
    negative = FieldTraits<K>::is_negative(c);
    return FieldTraits<K>::to_string(negative ? K(-c) : c);
}

}  // namespace

std::string to_text(const PbwMonomial& m) {
    std::string out;
    auto put = [&](char g, std::uint32_t e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += g;
        if (e > 1) out += '^' + std::to_string(e);
    };
    put('x', m.n1);
    put('y', m.n2);
    put('z', m.n3);
    return out.empty() ? "1" : out;
}

std::string to_text(const BasisElement& e) { return std::string(label(e.label)) + " # (" + to_text(e.mono) + ")"; }

template <class K>
AlgebraElement<K> parse_algebra(std::string_view text) {
    return Parser<K>(text).algebra();
}

template <class K>
Cochain<K> parse_cochain(std::string_view text) {
    return Parser<K>(text).cochain();
}

template <class K>
std::string to_text(const AlgebraElement<K>& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        bool negative = false;
        const std::string mag = coefficient_text(c, negative);
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        const bool constant = m == PbwMonomial{};
        if (constant) out += mag;
        else if (mag == "1") out += to_text(m);
        else out += mag + "*" + to_text(m);
    }
    return out;
}

template <class K>
std::string to_text(const Cochain<K>& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [lam, a] : c.components()) {
        if (!out.empty()) out += " + ";
        out += std::string(label(lam)) + " # (" + to_text(a) + ")";
    }
    return out;
}

#define HH_INSTANTIATE(K)                                          \
    template AlgebraElement<K> parse_algebra<K>(std::string_view); \
    template Cochain<K> parse_cochain<K>(std::string_view);        \
    template std::string to_text(const AlgebraElement<K>&);        \
    template std::string to_text(const Cochain<K>&);
HH_INSTANTIATE(Rational)
HH_INSTANTIATE(Fp)
#undef HH_INSTANTIATE

}  // namespace hh
