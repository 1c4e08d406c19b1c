#include "doctest.h"
#include "hh/parse.hpp"
#include "support.hpp"

using namespace hh;
using namespace testing;

namespace {

Elem p(const char* s) { return parse_algebra<Rational>(s); }
Co c(const char* s) { return parse_cochain<Rational>(s); }

std::size_t error_offset(const char* s, bool cochain) {
    try {
        if (cochain) parse_cochain<Rational>(s);
        else parse_algebra<Rational>(s);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("no parse error for " << s);
    return 0;
}

}  // namespace

TEST_CASE("algebra expressions") {
    CHECK(to_text(p("y*x")) == "z - x*y");
    CHECK(p("0").is_zero());
    CHECK(to_text(p("0")) == "0");
    CHECK(to_text(p("2*x^2*y - x*z")) == "-x*z + 2*x^2*y");
    CHECK(p("2*x^2*y - x*z").size() == 2);
    CHECK(p("(x + y)^2") == p("x^2 + z + y^2"));
    CHECK(p("1/2*x + 1/2*x") == p("x"));
    CHECK(p("-x") == -p("x"));
    CHECK(p(" x * y ") == p("x*y"));
    CHECK(p("3") == Elem::scalar(3));
    CHECK(to_text(p("-3/4")) == "-3/4");
    CHECK(to_text(p("x*y - 1")) == "-1 + x*y");
}

TEST_CASE("cochain literals") {
    const auto n1 = c("t^v # (x) - u^v # (y)");
    CHECK(n1.degree() == 2);
    CHECK(n1.component(Wedge::TV) == p("x"));
    CHECK(n1.component(Wedge::UV) == -p("y"));
    const auto zero_cochain = c("1 # (x^2)");
    CHECK(zero_cochain.degree() == 0);
    CHECK(zero_cochain.component(Wedge::One) == p("x^2"));
    CHECK(c("t^u^v # (x*y)").component(Wedge::TUV) == p("x*y"));
    CHECK(c("v^t # (x)") == c("-t^v # (x)"));
    CHECK(c("u^t # (x)") == c("t^u # (x)"));
    CHECK(c("v^u^t # (1)") == c("t^u^v # (1)"));
    CHECK(c("2*t # (x) - 1/2*t # (x)") == c("3/2*t # (x)"));
    CHECK(c("0").is_zero());
    CHECK(to_text(c("t^v # (x) - u^v # (y)")) == "t^v # (x) + u^v # (-y)");
}

TEST_CASE("parse errors carry a byte offset") {
    CHECK(error_offset("x^-1", false) == 2);
    CHECK(error_offset("x + ", false) == 4);
    CHECK(error_offset("x * w", false) == 4);
    CHECK(error_offset("(x + y", false) == 6);
    CHECK(error_offset("1/0", false) == 2);
    CHECK(error_offset("x y", false) == 2);
    CHECK(error_offset("t # (x) + t^u # (y)", true) == 10);
    CHECK(error_offset("t^t # (x)", true) == 2);
    CHECK(error_offset("w # (x)", true) == 0);
    CHECK(error_offset("t (x)", true) == 2);
    CHECK_THROWS_AS(parse_cochain<Rational>("t # x"), ParseError);
}

TEST_CASE("print then parse round trip, 500 cases") {
    std::mt19937_64 rng(67);
    int failures = 0;
    for (int k = 0; k < 500; ++k) {
        const auto e = random_element(rng, 8, 6);
        if (!(parse_algebra<Rational>(to_text(e)) == e)) ++failures;
    }
    CHECK(failures == 0);
    for (int k = 0; k < 200; ++k) {
        const int i = static_cast<int>(pick(rng, 0, 3));
        const auto f = random_cochain(rng, i, static_cast<int>(pick(rng, min_weight(i), 8)));
        if (f.is_zero()) continue;
        CHECK(parse_cochain<Rational>(to_text(f)) == f);
    }
}

TEST_CASE("prime field parsing") {
    Fp::set_modulus(7);
    const auto a = parse_algebra<Fp>("1/2*x + 8*y");
    CHECK(a.coefficient(PbwMonomial{1, 0, 0}) == Fp(4));
    CHECK(a.coefficient(PbwMonomial{0, 1, 0}) == Fp(1));
    CHECK(to_text(parse_algebra<Fp>("6*x")) == "-x");
    CHECK_THROWS_AS(parse_algebra<Fp>("1/7"), std::exception);
    Fp::set_modulus(32003);
}
