// Line-oriented text formats: .q4d diagram files (plat or relator mode)
// and .rho representation files (cycle notation), with diagnostics.
#pragma once

#include <q4d/cover.hpp>
#include <q4d/tangle.hpp>

#include <stdexcept>
#include <string>

namespace q4d {

struct ParseError : std::runtime_error {
  int line = 0;  // 1-based; 0 = whole file
  int col = 0;   // 1-based; 0 = whole line
  ParseError(const std::string& msg, int line = 0, int col = 0);
};

// mode: plat    tangleN: s1 s2' s1    (' marks an inverse letter)
// mode: relators    tangleN: x4 x11 ; x5 x6 ; ...    (^-1 suffixes)
FourPlaneDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const FourPlaneDiagram& d);

// Braid word tokens ("s1 s2' s1") on the given strand count.
BraidWord parse_braid(const std::string& text, int strands);

// sheets: n   followed by 2b cycle-notation lines, sheets numbered 1..n;
// "()" (or "id") is the identity. The product over all lines must be the
// identity (sphere relator), or parsing fails.
PermutationRep parse_rho(const std::string& text);
std::string serialize_rho(const PermutationRep& rho);

FourPlaneDiagram load_diagram(const std::string& path);
PermutationRep load_rho(const std::string& path);

}  // namespace q4d
