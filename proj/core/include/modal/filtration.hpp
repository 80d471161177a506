#pragma once

// Filtrations: equivalence classes modulo a formula set, the smallest and
// largest admissible quotient relations, clause-by-clause auditing of the
// filtration definition, and equivalence-of-truth checking between a model
// and its quotient.
//
// The modal clause of the definition is convention sensitive:
//   (3)  related classes transfer dia: if u |= g then w |= dia g, for dia g
//        in the set (the diamond-primitive reading);
//   (3') related classes transfer box: if w |= box g then u |= g (the
//        box-primitive reading);
//   (3") both at once (both operators primitive).
// The audit always evaluates (3) and (3') separately and marks the
// convention-matched one as normative, so the one-way implication between
// them stays observable.

#include <cstdint>
#include <string>
#include <vector>

#include "modal/formula.hpp"
#include "modal/model.hpp"
#include "modal/semantics.hpp"

namespace modal {

struct Partition {
  std::vector<std::uint64_t> class_masks;  // disjoint, covering, each nonempty
  std::vector<int> class_of;               // world index -> class index
  int size() const { return static_cast<int>(class_masks.size()); }
  // Least-index member of a class (classes are ordered by this).
  int representative(int cls) const;
};

// Groups worlds by identical truth vectors over `sigma`. Classes are ordered
// by their least original world.
Partition equivalence_classes(const KripkeModel& m, const FormulaSet& sigma);

enum class FiltrationKind { Smallest, Largest, Custom };

struct FilteredModel {
  KripkeModel base;     // worlds are class names "c0", "c1", ...
  Partition partition;  // over the original model
  FormulaSet sigma;
  FiltrationKind kind = FiltrationKind::Custom;

  // Serializes in the model wire format plus a "classes" field mapping class
  // name -> member worlds of the original model.
  std::string to_json(const KripkeModel& original) const;
};

// Throws NotClosedError when sigma is not subformula closed.
FilteredModel smallest_filtration(const KripkeModel& m, const FormulaSet& sigma);
FilteredModel largest_filtration(const KripkeModel& m, const FormulaSet& sigma,
                                 Convention conv);

// The dia-formulas (as (dia g, g) pairs) of sigma under the convention:
// Dia nodes when dia is primitive, ~box ~g patterns when only box is.
std::vector<std::pair<Formula, Formula>> dia_members_of(const FormulaSet& sigma,
                                                        Convention conv);
// Likewise for box: Box nodes, or ~dia ~g patterns under diamond-primitive.
std::vector<std::pair<Formula, Formula>> box_members_of(const FormulaSet& sigma,
                                                        Convention conv);

struct ClauseReport {
  std::string clause;  // "(1)", "(2)", "(3)", "(3')", "(4)"
  bool pass = true;
  bool normative = false;
  std::vector<std::string> witnesses;  // "w=.. u=.. phi=.." lines
};

struct FiltrationAudit {
  std::vector<ClauseReport> clauses;
  bool normative_pass() const;
  std::string text() const;  // one "CLAUSE (..) PASS/FAIL ..." line per clause
};

FiltrationAudit audit_filtration(const KripkeModel& m, const FilteredModel& mf,
                                 const FormulaSet& sigma, Convention conv);

struct TheoremViolation {
  std::string world;
  Formula formula;
  bool in_original = false;
  bool in_filtration = false;
};

struct TheoremCheck {
  std::vector<TheoremViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Verifies m,w |= f iff mf,|w| |= f for every world and every f in sigma.
TheoremCheck check_filtration_theorem(const KripkeModel& m, const FilteredModel& mf,
                                      const FormulaSet& sigma);

// Materializes levels 0..depth_cap of the prefix-closure
//   G0 = Sub(phi),  G(n+1) = Gn u box Gn u dia Gn
// with the prefixes expanded per the convention.
FormulaSet popkorn_gamma_star(const Formula& phi, int depth_cap, Convention conv);

}  // namespace modal
