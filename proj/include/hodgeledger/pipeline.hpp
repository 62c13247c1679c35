#pragma once

#include "hodgeledger/hodge_class.hpp"
#include "hodgeledger/ledger.hpp"
#include "hodgeledger/report.hpp"
#include "hodgeledger/spaces.hpp"

namespace hodgeledger {

// Total cohomology carried by one of the four proper strings (BadInput for
// the full-support summand, which is derived, and for the skyscraper):
//   R_plus   : even part of the 4-dimensional abelian table
//   R_minus  : odd part of the same table
//   Npq_plus : U plus two exceptional degree-2 classes
//   Npq_minus: two degree-2 classes
HodgeClass string_cohomology(StringName which);

// Cohomology table of the comparison fibration's total space:
// Sym^3 U + (U (x) U)<1> + 2 (U (x) W)<1> + coeff * U<2> + 256 points <3>.
// The established value of `coeff` is 17; 16 is kept reachable as a
// negative control (it fails verification by exactly one copy of U<2>).
HodgeClass h_N(const Int& coeff = 17);

// What the two total spaces differ by in the Grothendieck group:
// (2 Sigma - A)<1> + 120 U<2> + 256 points <3>.
HodgeClass grothendieck_difference();

// First assembly path: h_N plus the difference class.  The virtual summand
// must cancel against h_N entrywise; NotEffective otherwise.
HodgeClass h_mtilde_via_difference(const Int& hn_coeff = 17);

// The full-support summand's cohomology, obtained from h_N by stripping
// the other strings; depends on the undetermined multiplicity r in {0,1}.
HodgeClass base_string_class(int r, const Int& hn_coeff = 17);

// Second assembly path: full-support summand plus the resolved fibration's
// strings.  Algebraically independent of r (the skyscraper contributions
// cancel); r must be 0 or 1 (BadInput).
HodgeClass h_mtilde_via_strings(int r, const Int& hn_coeff = 17);

// The two closed-form presentations of the same class:
//   via_odd_square: Sym^3 U + (2 U(x)U + W(x)W)<1> + 137 U<2> + 512 pts<3>
//   via_wedge_cube: Sym^3 U + Wedge^3 U + 2 U(x)U<1> + 138 U<2> + 512 pts<3>
enum class ClosedForm { via_odd_square, via_wedge_cube };
HodgeClass closed_form(ClosedForm which);

// Runs the whole battery: the four path equalities, Euler number 1920 and
// the full degree profile, both symmetries in dimension 6, the ledger
// cross-check with its solved unknowns, the coefficient-16/17 controls,
// and the consistency identities between the string fixtures.
VerificationReport verify_og6(const Int& hn_coeff = 17, const Ledger& ledger = builtin_ledger());

}  // namespace hodgeledger
