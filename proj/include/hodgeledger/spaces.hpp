#pragma once

#include <string>

#include "hodgeledger/hodge_class.hpp"

namespace hodgeledger {

enum class Parity { even, odd };

// Cohomology table of a g-dimensional abelian variety:
// m(p+q, p, q) = C(g,p) * C(g,q).  Guarded to g <= 8 (DimensionGuard);
// g < 0 is BadInput.
HodgeClass abelian(int g);

// The sub-table of cells with the given cohomological-degree parity.
HodgeClass parity_part(const HodgeClass& a, Parity parity);

// Smooth projective curve of genus g >= 0: unit + g generators in each of
// bidegrees (1,0) and (0,1) + the degree-2 point class.
HodgeClass curve(int g);

// Projective n-space: one (k,k) generator in each even degree 2k, k <= n.
HodgeClass projective(int n);

// The minimal resolution of the quotient of a 2-dimensional abelian table
// by -1: even part of the input plus 16 exceptional (1,1)-classes.  The
// input must be exactly abelian(2) (BadInput otherwise).
HodgeClass kummer_k3(const HodgeClass& j);

// Adds k >= 0 exceptional degree-2 classes of bidegree (1,1).
HodgeClass add_exceptional(const HodgeClass& a, int k);

// --- named fixtures --------------------------------------------------------

enum class FixtureName {
  J,         // abelian(2)
  A,         // J (x) J, a 4-dimensional abelian table
  U,         // even-degree part of J
  W,         // odd-degree part of J
  KummerK3,  // kummer_k3(J)
  Z,         // even part of J plus 24 exceptional classes
  Sigma,     // even-degree part of A
};

HodgeClass fixture(FixtureName name);

// Parses "J", "A", "U", "W", "KummerK3", "Z", "Sigma"; raises UnknownName.
FixtureName fixture_from_name(const std::string& name);
const char* fixture_to_name(FixtureName name);

}  // namespace hodgeledger
