#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hodgeledger {

// Multiplicities are unbounded integers: convolution products and counted
// sections can exceed any fixed-width type, and nothing here may round.
using Int = boost::multiprecision::cpp_int;

// One cell of a bigraded table: cohomological degree n, bidegree (p, q).
struct CellKey {
  int n = 0;
  int p = 0;
  int q = 0;
  auto operator<=>(const CellKey&) const = default;
};

// A finitely supported integer table over cells.  This is a class in the
// Grothendieck group of bigraded vector spaces: multiplicities may be
// negative (formal differences), and the zero multiplicity is never stored,
// so equality of tables is equality of classes.
class HodgeClass {
 public:
  HodgeClass() = default;

  // Canonicalizes: drops zero entries, merges duplicates.
  static HodgeClass from_entries(const std::vector<std::tuple<int, int, int, Int>>& entries);

  const std::map<CellKey, Int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool operator==(const HodgeClass&) const = default;

  // True when every multiplicity is >= 0 (the class of an actual space).
  bool is_effective() const;

  // True when every cell satisfies p + q == n (mod 2), i.e. the table could
  // carry a weight filtration with the usual parity.
  bool weight_parity() const;

  // Sum of all multiplicities (dimension when effective).
  Int total_dimension() const;

  // Adds m at (n, p, q), erasing the cell if the result is zero.
  void add(int n, int p, int q, const Int& m);

 private:
  std::map<CellKey, Int> entries_;
};

// --- constructors ----------------------------------------------------------

// The unit class: one generator in degree 0, bidegree (0, 0).
HodgeClass unit_class();

// The class of a single generator at (n, p, q).
HodgeClass make_class(int n, int p, int q, const Int& m = 1);

// --- linear and multiplicative structure -----------------------------------

// Integer linear combination sum_i c_i * a_i, computed entrywise.
HodgeClass linear_combine(const std::vector<std::pair<Int, HodgeClass>>& terms);

// Entrywise scalar multiple c * a.
HodgeClass scale(const Int& c, const HodgeClass& a);

// Graded tensor product: cells add componentwise, multiplicities multiply
// (Kuenneth convolution).  Unit is unit_class().
HodgeClass tensor(const HodgeClass& a, const HodgeClass& b);

HodgeClass operator+(const HodgeClass& a, const HodgeClass& b);
HodgeClass operator-(const HodgeClass& a, const HodgeClass& b);
HodgeClass operator*(const HodgeClass& a, const HodgeClass& b);  // tensor

// --- regrading operators ---------------------------------------------------

// Raises cohomological degree by k >= 0: (n,p,q) -> (n+k,p,q).
HodgeClass shift_up(int k, const HodgeClass& a);

// Twist by k (any sign): (n,p,q) -> (n,p-k,q-k).
HodgeClass tate(int k, const HodgeClass& a);

// Combined shift-and-twist <k> := shift_up(2k) then tate(-k), k >= 0:
// (n,p,q) -> (n+2k, p+k, q+k).  Sends the unit to a point-class in
// degree 2k of bidegree (k,k).
HodgeClass angle(int k, const HodgeClass& a);

// Linear dual: (n,p,q) -> (-n,-p,-q), multiplicities unchanged.
HodgeClass dual(const HodgeClass& a);

// --- super symmetric algebra -----------------------------------------------

// k-th symmetric power with the super sign rule: generators in even
// cohomological degree behave polynomially (repeats allowed), generators in
// odd degree square to zero.  Requires an effective input (VirtualInput
// otherwise); k < 0 is BadInput.  k = 0 gives the unit class.
HodgeClass super_sym(int k, const HodgeClass& a);

// k-th exterior power with the super sign rule: even-degree generators are
// pairwise distinct, odd-degree generators may repeat.  Same preconditions
// as super_sym.
HodgeClass super_wedge(int k, const HodgeClass& a);

// --- numerics --------------------------------------------------------------

struct Numerics {
  std::map<int, Int> betti;                     // degree -> total multiplicity
  Int euler = 0;                                // sum (-1)^n * m
  std::map<std::pair<int, int>, Int> e_polynomial;  // (p,q) -> sum (-1)^n * m
};

Numerics numerics(const HodgeClass& a);

// --- symmetry --------------------------------------------------------------

struct SymmetryResult {
  bool poincare = false;  // m(n,p,q) == m(2d-n, d-p, d-q) for all cells
  bool hodge = false;     // m(n,p,q) == m(n,q,p) for all cells
};

// Checks the two symmetries of the table of a smooth compact d-dimensional
// space (or of an intersection-cohomology table of the same dimension).
SymmetryResult symmetry_checks(const HodgeClass& a, int d);

// --- serialization ---------------------------------------------------------

// Canonical JSON: {"format":"hodgeclass/v1","entries":[[n,p,q,m],...]} with
// entries in lexicographic (n,p,q) order and no whitespace.  Byte-identical
// for equal classes.  Multiplicities outside signed-64-bit range raise
// SerializationRange (the wire format stores JSON integers).
std::string serialize(const HodgeClass& a);

// Inverse of serialize; accepts any field order and non-canonical entry
// lists (they are canonicalized).  Raises BadInput on malformed documents.
HodgeClass deserialize(const std::string& json_text);

}  // namespace hodgeledger
