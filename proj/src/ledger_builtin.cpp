#include "hodgeledger/ledger.hpp"

namespace hodgeledger {

namespace {

// The shipped fixture.  Kept as a JSON document (not constructed in code)
// so that it exercises exactly the same parse/validate path as a
// user-supplied file, and so the cites live next to the numbers they
// justify.
const char* const kBuiltinLedger = R"json({
  "format": "ledger/v1",
  "strata": [
    {"name": "S",  "dim": 3},
    {"name": "N1", "dim": 2},
    {"name": "N2", "dim": 1},
    {"name": "N3", "dim": 0, "count": 240},
    {"name": "R1", "dim": 2},
    {"name": "R2", "dim": 1},
    {"name": "NR", "dim": 0, "count": 16}
  ],
  "specializations": [
    ["NR", "R2"], ["R2", "R1"], ["N3", "N2"], ["N2", "N1"], ["NR", "N2"]
  ],
  "incidence": {
    "lines_total": 120,
    "lines_through_nr_point": 15,
    "lines_through_n3_point": 3
  },
  "stalks": [
    {"fibration": "Mtilde", "string": "base", "stratum": "S",
     "rank": {"const": 1},
     "cite": "full-support summand: the generic fiber is irreducible, so the top direct-image stalk is one-dimensional"},
    {"fibration": "Mtilde", "string": "base", "stratum": "N1",
     "rank": {"const": 1},
     "cite": "full-support summand restricts with rank 1 to generic points of the line-configuration divisor"},
    {"fibration": "Mtilde", "string": "base", "stratum": "N2",
     "rank": {"const": 1},
     "cite": "rank stays 1 over generic points of a single configuration line"},
    {"fibration": "Mtilde", "string": "base", "stratum": "N3",
     "rank": {"const": 1},
     "cite": "rank stays 1 over the 240 triple points of the line configuration"},
    {"fibration": "Mtilde", "string": "base", "stratum": "R1",
     "rank": {"const": 1},
     "cite": "full-support summand restricts with rank 1 to generic points of the quartic divisor"},
    {"fibration": "Mtilde", "string": "base", "stratum": "R2",
     "rank": {"const": 1},
     "cite": "rank stays 1 over the tangent-line locus inside the quartic divisor"},
    {"fibration": "Mtilde", "string": "base", "stratum": "NR",
     "rank": {"const": 1, "r24": 1},
     "cite": "at the 16 deepest points the full-support summand may carry an extra degree-6 skyscraper of undetermined multiplicity r24"},
    {"fibration": "Mtilde", "string": "R_plus", "stratum": "R1",
     "rank": {"const": 1},
     "cite": "invariant half of the rank-2 system of the fourfold double cover over the quartic divisor"},
    {"fibration": "Mtilde", "string": "R_plus", "stratum": "R2",
     "rank": {"const": 1},
     "cite": "invariant half stays rank 1 over the tangent-line locus"},
    {"fibration": "Mtilde", "string": "R_plus", "stratum": "NR",
     "rank": {"const": 1},
     "cite": "at a deepest point the invariant summand contributes the class of an irreducible Kummer quartic surface"},
    {"fibration": "Mtilde", "string": "Npq_plus", "stratum": "N2",
     "rank": {"const": 1},
     "cite": "per incident line: invariant part of the fiber-component lattice of an isotrivial elliptic surface with six I2 and two I0* fibers"},
    {"fibration": "Mtilde", "string": "Npq_plus", "stratum": "N3",
     "rank": {"const": 1},
     "cite": "one invariant class per line through a triple point; three lines meet there"},
    {"fibration": "Mtilde", "string": "Npq_plus", "stratum": "NR",
     "rank": {"const": 1},
     "cite": "one invariant class per line through a deepest point; fifteen lines meet there"},
    {"fibration": "Mtilde", "string": "skyscraper", "stratum": "NR",
     "rank": {"const": 16, "r": 1},
     "cite": "sixteen summands from the surfaces contracted by the symplectic resolution, plus an undetermined skyscraper multiplicity r"},
    {"fibration": "N", "string": "base", "stratum": "S",
     "rank": {"const": 1},
     "cite": "full-support summand of the comparison fibration: generic fiber irreducible, stalk rank 1"},
    {"fibration": "N", "string": "base", "stratum": "N1",
     "rank": {"const": 1},
     "cite": "rank stays 1 over generic points of the line-configuration divisor"},
    {"fibration": "N", "string": "base", "stratum": "N2",
     "rank": {"const": 1},
     "cite": "rank stays 1 over generic points of a single configuration line"},
    {"fibration": "N", "string": "base", "stratum": "N3",
     "rank": {"const": 1},
     "cite": "rank stays 1 over the 240 triple points"},
    {"fibration": "N", "string": "base", "stratum": "R1",
     "rank": {"const": 1},
     "cite": "rank stays 1 over generic points of the quartic divisor"},
    {"fibration": "N", "string": "base", "stratum": "R2",
     "rank": {"const": 1},
     "cite": "rank stays 1 over the tangent-line locus"},
    {"fibration": "N", "string": "base", "stratum": "NR",
     "rank": {"const": 1, "r24": 1},
     "cite": "same undetermined degree-6 skyscraper multiplicity r24 at the 16 deepest points as for the resolved fibration"},
    {"fibration": "N", "string": "R_minus", "stratum": "R1",
     "rank": {"const": 1},
     "cite": "anti-invariant half of the double-cover system: a nontrivial rank-1 local system over the generic quartic stratum"},
    {"fibration": "N", "string": "R_minus", "stratum": "R2",
     "rank": {"const": 1},
     "cite": "anti-invariant half stays rank 1 over the tangent-line locus"},
    {"fibration": "N", "string": "R_minus", "stratum": "NR",
     "rank": {"const": 0},
     "cite": "the anti-invariant summand vanishes at the 16 branch points of the cover"},
    {"fibration": "N", "string": "Npq_minus", "stratum": "N2",
     "rank": {"const": 1},
     "cite": "per incident line: anti-invariant part of the fiber-component lattice, rank 1 over generic line points"},
    {"fibration": "N", "string": "Npq_minus", "stratum": "N3",
     "rank": {"const": 1},
     "cite": "anti-invariant part stays rank 1 per line at the triple points"},
    {"fibration": "N", "string": "Npq_minus", "stratum": "NR",
     "rank": {"const": 0},
     "cite": "the anti-invariant line summands die at the 16 deepest points"},
    {"fibration": "N", "string": "skyscraper", "stratum": "NR",
     "rank": {"r": 1},
     "cite": "the same undetermined skyscraper multiplicity r as for the resolved fibration, with no resolution contribution"}
  ],
  "components": {
    "Mtilde": {"S": 1, "N1": 1, "N2": 2, "N3": 4, "R1": 2, "R2": 2, "NR": 34},
    "M":      {"S": 1, "N1": 1, "N2": 2, "N3": 4, "R1": 1, "R2": 1, "NR": 17},
    "N":      {"S": 1, "N1": 1, "N2": 2, "N3": 4, "R1": 2, "R2": 2, "NR": 2}
  }
})json";

}  // namespace

const std::string& builtin_ledger_json() {
  static const std::string text = kBuiltinLedger;
  return text;
}

const Ledger& builtin_ledger() {
  static const Ledger ledger = load_ledger(builtin_ledger_json());
  return ledger;
}

}  // namespace hodgeledger
