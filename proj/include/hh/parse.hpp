#pragma once

// Text form of algebra elements and cochains.
//
//   expr    := [+|-] term { (+|-) term }
//   term    := power { '*' power }
//   power   := primary [ '^' uint ]
//   primary := int [ '/' int ] | x | y | z | '(' expr ')'
//
//   cochain := [+|-] cterm { (+|-) cterm } | '0'
//   cterm   := [ int [ '/' int ] '*' ] label '#' '(' expr ')'
//   label   := '1' | letter { '^' letter },  letter in {t, u, v}
//
// '*' is the (noncommutative) product of A. Labels written out of canonical
// order pick up the exterior sign, so "v^t # (x)" is -t^v (x) x.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hh/complex.hpp"

namespace hh {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

template <class K>
AlgebraElement<K> parse_algebra(std::string_view text);

template <class K>
Cochain<K> parse_cochain(std::string_view text);

/// Canonical text: terms in increasing monomial order, e.g. "z - x*y".
template <class K>
std::string to_text(const AlgebraElement<K>& a);

/// e.g. "t^v # (x) + u^v # (-y)"; "0" for the zero cochain.
template <class K>
std::string to_text(const Cochain<K>& c);

std::string to_text(const PbwMonomial& m);
std::string to_text(const BasisElement& e);

}  // namespace hh
