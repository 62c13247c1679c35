#include "hodgeledger/pipeline.hpp"

#include <sstream>

#include "hodgeledger/errors.hpp"

namespace hodgeledger {

namespace {

// One exceptional degree-2 class of bidegree (1,1).
HodgeClass lefschetz() { return make_class(2, 1, 1); }

}  // namespace

HodgeClass string_cohomology(StringName which) {
  switch (which) {
    case StringName::R_plus:
      return fixture(FixtureName::Sigma);
    case StringName::R_minus:
      return parity_part(fixture(FixtureName::A), Parity::odd);
    case StringName::Npq_plus:
      return fixture(FixtureName::U) + scale(2, lefschetz());
    case StringName::Npq_minus:
      return scale(2, lefschetz());
    case StringName::base:
      throw BadInput("string_cohomology: the full-support summand is derived, see base_string_class");
    case StringName::skyscraper:
      throw BadInput("string_cohomology: skyscrapers carry point classes only");
  }
  throw BadInput("string_cohomology: bad enumerator");
}

HodgeClass h_N(const Int& coeff) {
  const HodgeClass u = fixture(FixtureName::U);
  const HodgeClass w = fixture(FixtureName::W);
  return super_sym(3, u) + angle(1, tensor(u, u)) + angle(1, scale(2, tensor(u, w))) +
         angle(2, scale(coeff, u)) + angle(3, scale(256, unit_class()));
}

HodgeClass grothendieck_difference() {
  const HodgeClass sigma = fixture(FixtureName::Sigma);
  const HodgeClass a = fixture(FixtureName::A);
  return angle(1, scale(2, sigma) - a) + angle(2, scale(120, fixture(FixtureName::U))) +
         angle(3, scale(256, unit_class()));
}

HodgeClass h_mtilde_via_difference(const Int& hn_coeff) {
  const HodgeClass total = h_N(hn_coeff) + grothendieck_difference();
  if (!total.is_effective()) {
    const auto& entries = total.entries();
    for (const auto& [key, m] : entries)
      if (m < 0) {
        std::ostringstream msg;
        msg << "difference path fails to cancel: multiplicity " << m.str() << " at ("
            << key.n << "," << key.p << "," << key.q << ")";
        throw NotEffective(msg.str());
      }
  }
  return total;
}

HodgeClass base_string_class(int r, const Int& hn_coeff) {
  if (r != 0 && r != 1)
    throw BadInput("base_string_class: skyscraper multiplicity must be 0 or 1");
  return h_N(hn_coeff) - angle(1, string_cohomology(StringName::R_minus)) -
         angle(2, scale(240, lefschetz())) - angle(3, scale(16 * r, unit_class()));
}

HodgeClass h_mtilde_via_strings(int r, const Int& hn_coeff) {
  if (r != 0 && r != 1)
    throw BadInput("h_mtilde_via_strings: skyscraper multiplicity must be 0 or 1");
  return base_string_class(r, hn_coeff) + angle(1, string_cohomology(StringName::R_plus)) +
         angle(2, scale(120, string_cohomology(StringName::Npq_plus))) +
         angle(3, scale(16 * (r + 16), unit_class()));
}

HodgeClass closed_form(ClosedForm which) {
  const HodgeClass u = fixture(FixtureName::U);
  const HodgeClass w = fixture(FixtureName::W);
  switch (which) {
    case ClosedForm::via_odd_square:
      return super_sym(3, u) + angle(1, scale(2, tensor(u, u)) + tensor(w, w)) +
             angle(2, scale(137, u)) + angle(3, scale(512, unit_class()));
    case ClosedForm::via_wedge_cube:
      return super_sym(3, u) + super_wedge(3, u) + angle(1, scale(2, tensor(u, u))) +
             angle(2, scale(138, u)) + angle(3, scale(512, unit_class()));
  }
  throw BadInput("closed_form: bad enumerator");
}

namespace {

std::string describe_class(const HodgeClass& a) {
  const Numerics num = numerics(a);
  std::ostringstream out;
  out << "dim=" << a.total_dimension().str() << " euler=" << num.euler.str() << " betti=";
  if (num.betti.empty()) {
    out << "0";
  } else {
    const int lo = num.betti.begin()->first;
    const int hi = num.betti.rbegin()->first;
    for (int n = lo; n <= hi; ++n) {
      if (n > lo) out << " ";
      const auto it = num.betti.find(n);
      out << (it == num.betti.end() ? Int(0) : it->second).str();
    }
  }
  return out.str();
}

CheckResult class_check(const std::string& id, const HodgeClass& lhs, const HodgeClass& rhs) {
  CheckResult res;
  res.id = id;
  res.pass = lhs == rhs;
  res.lhs = describe_class(lhs);
  res.rhs = describe_class(rhs);
  res.residual = lhs - rhs;
  return res;
}

CheckResult value_check(const std::string& id, const std::string& lhs, const std::string& rhs) {
  CheckResult res;
  res.id = id;
  res.pass = lhs == rhs;
  res.lhs = lhs;
  res.rhs = rhs;
  return res;
}

}  // namespace

VerificationReport verify_og6(const Int& hn_coeff, const Ledger& ledger) {
  VerificationReport report;

  const HodgeClass via_diff = h_mtilde_via_difference(hn_coeff);
  const HodgeClass odd_square = closed_form(ClosedForm::via_odd_square);

  // (a) every assembly path produces the same bigraded table.
  report.checks.push_back(
      class_check("paths/difference-vs-strings-r0", via_diff, h_mtilde_via_strings(0, hn_coeff)));
  report.checks.push_back(
      class_check("paths/difference-vs-strings-r1", via_diff, h_mtilde_via_strings(1, hn_coeff)));
  report.checks.push_back(class_check("paths/closed-form-vs-difference", odd_square, via_diff));
  report.checks.push_back(class_check("paths/odd-square-vs-wedge-cube-form", odd_square,
                                      closed_form(ClosedForm::via_wedge_cube)));

  // (b) numerics of the result.
  const Numerics num = numerics(via_diff);
  report.checks.push_back(value_check("numerics/euler", num.euler.str(), "1920"));
  {
    std::ostringstream lhs;
    for (int n = 0; n <= 12; ++n) {
      if (n > 0) lhs << " ";
      const auto it = num.betti.find(n);
      lhs << (it == num.betti.end() ? Int(0) : it->second).str();
    }
    report.checks.push_back(
        value_check("numerics/betti", lhs.str(), "1 0 8 0 199 0 1504 0 199 0 8 0 1"));
  }

  // (c) symmetries of a compact 6-dimensional table.
  const SymmetryResult sym = symmetry_checks(via_diff, 6);
  report.checks.push_back(
      value_check("symmetry/poincare-d6", sym.poincare ? "holds" : "broken", "holds"));
  report.checks.push_back(value_check("symmetry/hodge", sym.hodge ? "holds" : "broken", "holds"));

  // (d) the component-count ledger, including the solved unknowns.
  try {
    const VerificationReport table = verify_component_table(ledger);
    std::size_t failed = 0;
    for (const auto& check : table.checks)
      if (!check.pass) ++failed;
    std::ostringstream lhs;
    lhs << (table.checks.size() - failed) << "/" << table.checks.size() << " cells match";
    std::ostringstream rhs;
    rhs << table.checks.size() << "/" << table.checks.size() << " cells match";
    report.checks.push_back(value_check("ledger/component-table", lhs.str(), rhs.str()));

    std::ostringstream sols;
    sols << "{";
    bool first = true;
    for (const auto& [r, r24] : solve_unknowns(ledger)) {
      if (!first) sols << ", ";
      first = false;
      sols << "(" << r.str() << "," << r24.str() << ")";
    }
    sols << "}";
    report.checks.push_back(value_check("ledger/solutions", sols.str(), "{(0,1), (1,0)}"));
  } catch (const Inconsistent& e) {
    report.checks.push_back(value_check("ledger/component-table", std::string("inconsistent: ") + e.what(),
                                        "consistent"));
    report.checks.push_back(value_check("ledger/solutions", "none", "{(0,1), (1,0)}"));
  }

  // (e) coefficient controls: 16 misses the established table by exactly
  // one copy of U<2>, and the two Euler numbers are 440 and 448.
  report.checks.push_back(class_check("control/residual-at-16",
                                      odd_square - h_mtilde_via_difference(16),
                                      angle(2, fixture(FixtureName::U))));
  report.checks.push_back(
      value_check("control/euler-at-16", numerics(h_N(16)).euler.str(), "440"));
  report.checks.push_back(
      value_check("control/euler-at-17", numerics(h_N(17)).euler.str(), "448"));

  // (f) consistency identities between the string fixtures.
  report.checks.push_back(class_check(
      "fixtures/parity-split",
      string_cohomology(StringName::R_plus) + string_cohomology(StringName::R_minus),
      fixture(FixtureName::A)));
  report.checks.push_back(class_check(
      "fixtures/quartic-resolution",
      string_cohomology(StringName::Npq_plus) + scale(14, lefschetz()),
      fixture(FixtureName::KummerK3)));
  report.checks.push_back(class_check(
      "fixtures/isotrivial-total-space",
      string_cohomology(StringName::Npq_plus) + string_cohomology(StringName::Npq_minus) +
          scale(20, lefschetz()),
      fixture(FixtureName::Z)));

  return report;
}

}  // namespace hodgeledger
