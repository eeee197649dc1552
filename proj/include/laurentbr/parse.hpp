#pragma once

#include <string>
#include <variant>

#include "laurentbr/brauer.hpp"
#include "laurentbr/laurent.hpp"
#include "laurentbr/quadforms.hpp"

namespace laurentbr {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Variables are the tower names, t for a rational function base and w for
/// the generator of F_q over F_p. Integers are read modulo p.
LaurentPoly parse_element(const std::string& src, const TowerPtr& tower);
/// [a, b)
SymbolAS parse_symbol(const std::string& src, const TowerPtr& tower);
/// [a, b) * [c, d) * ...; "1" is the trivial class.
BrauerClass parse_class(const std::string& src, const TowerPtr& tower);
/// <<a1, ..., an>>
BilPfister parse_bilinear(const std::string& src, const TowerPtr& tower);
/// <<a1, ..., a_{n-1}; b]] or <<b]]
QuadPfister parse_quadratic(const std::string& src, const TowerPtr& tower);
/// c*<<m1, ...>>[1, w] _|_ [1, w'] _|_ <d1, d2>
BlockForm parse_block_form(const std::string& src, const TowerPtr& tower);

using Parsed = std::variant<LaurentPoly, SymbolAS, BrauerClass, BilPfister, QuadPfister, BlockForm>;

/// Whichever of the grammars above accepts the whole input; a class of one
/// symbol comes back as a SymbolAS.
Parsed parse_expression(const std::string& src, const TowerPtr& tower);
std::string to_string(const Parsed& x);

/// "lo..hi" for every variable, or one "lo..hi" per variable separated by commas.
PrecisionWindow parse_window(const std::string& src, int n);

}  // namespace laurentbr
