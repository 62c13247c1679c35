#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "hodgeledger/hodge_class.hpp"
#include "hodgeledger/report.hpp"

namespace hodgeledger {

// Strata of the base 3-space of the fibrations: the open stratum S, the
// chain N1 > N2 > N3 inside the first discriminant divisor (N3 = the 240
// triple points of the 120-line configuration), the chain R1 > R2 inside
// the second, and the 16 deepest points NR shared by both.
enum class StratumName { S, N1, N2, N3, R1, R2, NR };

// The three fibrations sharing this base: the resolved total space, the
// singular one it resolves, and the same-base comparison fibration.
enum class Fibration { Mtilde, M, N };

// Direct-image summands ("strings"): the full-support summand, the
// invariant/anti-invariant pair on the R-divisor, the per-line
// invariant/anti-invariant pair, and the skyscraper at the deepest points.
enum class StringName { base, R_plus, R_minus, Npq_plus, Npq_minus, skyscraper };

// c0 + cr*r + cr24*r24 over the two undetermined skyscraper
// multiplicities r and r24.
struct LinearIntExpr {
  Int c0 = 0;
  Int cr = 0;
  Int cr24 = 0;

  bool operator==(const LinearIntExpr&) const = default;
  LinearIntExpr& operator+=(const LinearIntExpr& other);
  LinearIntExpr& operator*=(const Int& factor);
  Int eval(const Int& r, const Int& r24) const;
  bool is_constant() const { return cr == 0 && cr24 == 0; }
  std::string to_string() const;
};

struct Stratum {
  StratumName name{};
  int dim = 0;
  std::optional<Int> count;  // only the two finite strata carry one
};

// Counts for the 120-line configuration cut out on the base.
struct IncidenceData {
  Int lines_total = 0;             // 120 = C(16,2)
  Int lines_through_nr_point = 0;  // 15 = C(6,2)
  Int lines_through_n3_point = 0;  // 3
};

struct StalkKey {
  Fibration fibration{};
  StringName string{};
  StratumName stratum{};
  auto operator<=>(const StalkKey&) const = default;
};

// Degree-6 stalk rank of one string over one stratum, with the provenance
// note that justifies it (mandatory in the fixture).
struct StalkEntry {
  LinearIntExpr rank;
  std::string cite;
};

struct Ledger {
  std::map<StratumName, Stratum> strata;
  std::set<std::pair<StratumName, StratumName>> specializations;
  IncidenceData incidence;
  std::map<StalkKey, StalkEntry> stalks;
  // Observed fiber-component counts per (fibration, stratum): the target
  // the string data is checked against.
  std::map<std::pair<Fibration, StratumName>, Int> components;
};

// --- fixture I/O -----------------------------------------------------------

// Parses and validates a "ledger/v1" JSON document.  Everything structural
// is enforced here (stratum list, dimensions, finite counts, specialization
// poset, incidence numbers, exact stalk-rank expressions, mandatory cites,
// fixed middle component row); the Mtilde and N component rows are data to
// be cross-checked later, constrained only to small nonnegative integers.
// Raises FixtureInvalid naming the first violated invariant.
Ledger load_ledger(const std::string& json_text);

// The built-in fixture (same validation path as external files).
const Ledger& builtin_ledger();
const std::string& builtin_ledger_json();

// --- derived quantities ----------------------------------------------------

// Degree-6 rank of the direct sum of all strings of `fibration` at a point
// of `stratum`: the full-support stalk, plus the divisor string where the
// stratum lies in the R-divisor, plus one per incident line times the line
// string, plus the skyscraper at the deepest points.  Only the two
// fibrations with string data are valid (BadInput for the contracted one).
LinearIntExpr r6_rank(const Ledger& ledger, Fibration fibration, StratumName stratum);

// All nonnegative (r, r24) satisfying r6_rank == components for the 14
// cells with string data.  Raises Inconsistent (with a hint naming a
// conflicting pair of constraints) when the set is empty.
std::set<std::pair<Int, Int>> solve_unknowns(const Ledger& ledger);

// Recomputes all 21 component-table cells from the string data and the
// solved unknowns (the contracted fibration's row is derived from the
// resolved one by removing the exceptional-locus contributions), plus the
// monodromy decompositions over the generic R-divisor and line strata.
// Every fail carries the mismatching values in lhs/rhs.
VerificationReport verify_component_table(const Ledger& ledger);

// --- name tables -----------------------------------------------------------

const char* stratum_to_name(StratumName s);
const char* fibration_to_name(Fibration f);
const char* string_to_name(StringName s);

}  // namespace hodgeledger
