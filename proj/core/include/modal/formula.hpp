#pragma once

// Formula syntax for the basic modal language: parsing, primitive-operator
// conventions, abbreviation expansion, substitution, and the subformula /
// closure operators everything else is built on.
//
// Two layers share one AST type:
//   * surface formulas may contain both `box` and `dia` nodes; the parser
//     produces these (sugar ~ & | <-> true is already gone after parsing);
//   * core formulas are what you get from expand(): under the diamond
//     convention no Box node remains (box f is stored as ~dia ~f), under the
//     box convention no Dia node remains, and under the both convention the
//     modal nodes are kept as written.
// Subformula sets, filtrations and canonical constructions operate on the
// core layer only.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modal/error.hpp"

namespace modal {

// Which modal operator(s) the core layer treats as primitive.
enum class Convention { BoxPrimitive, DiamondPrimitive, BothPrimitive };

std::string to_string(Convention conv);
Convention convention_from_string(std::string_view s);  // "box"|"diamond"|"both"

enum class Kind : std::uint8_t { Var, Neg, Impl, Box, Dia };

struct FormulaNode;

// Immutable formula handle with structural equality and ordering.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula neg(Formula f);
  static Formula impl(Formula lhs, Formula rhs);
  static Formula box(Formula f);
  static Formula dia(Formula f);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  const std::string& name() const;  // Var nodes only
  Formula child() const;            // Neg/Box/Dia
  Formula lhs() const;              // Impl
  Formula rhs() const;              // Impl
  std::size_t hash() const;

  // Pretty-prints in the concrete ASCII grammar; parse(str()) re-reads it.
  std::string str() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const FormulaNode> n_;
};

using FormulaSet = std::set<Formula>;

// Sugar expansions fixed by the external format contract.
Formula make_top();                            // p0 -> p0
Formula make_and(Formula a, Formula b);        // ~(a -> ~b)
Formula make_or(Formula a, Formula b);         // ~a -> b
Formula make_iff(Formula a, Formula b);        // (a -> b) & (b -> a)

// Parses the concrete ASCII grammar into a surface formula (sugar already
// eliminated). Throws SyntaxError / UnknownSymbolError with a byte offset.
Formula parse_surface(std::string_view text);

// Rewrites the non-primitive modal operator away.
Formula expand(const Formula& surface, Convention conv);

// parse + expand in one step.
Formula parse_formula(std::string_view text, Convention conv);

bool is_core(const Formula& f, Convention conv);

// Convention-aware prefixing: the formula `box f` resp. `dia f` as a core
// formula under `conv`.
Formula box_of(const Formula& f, Convention conv);
Formula dia_of(const Formula& f, Convention conv);

std::set<std::string> variables(const Formula& f);

// Sub(f), computed on the core representation (f itself included).
FormulaSet subformulas(const Formula& f);
FormulaSet subformulas(const FormulaSet& set);

// Sub-(f) = { ~g | g in Sub(f) } and Sub+(f) = Sub(f) u Sub-(f).
std::pair<FormulaSet, FormulaSet> sub_minus_plus(const Formula& f);

struct ClosureWitness {
  Formula member;   // element of the set
  Formula missing;  // subformula of `member` absent from the set
};

// First witness in structural order, or nullopt if the set is closed.
std::optional<ClosureWitness> subformula_closure_witness(const FormulaSet& set);
bool is_subformula_closed(const FormulaSet& set);
// All (member, missing) pairs, for reporting.
std::vector<ClosureWitness> closure_defects(const FormulaSet& set);

// The filter set the quoted K5 proof builds under the box convention:
// Sub(phi) u { ~box ~box psi | box psi in Sub(phi) }. Input must be core
// under BoxPrimitive.
FormulaSet chagrov_sigma(const Formula& phi);

// Finite map from variable names to core formulas; unmapped variables are
// fixed. Application commutes with every constructor.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Formula> map) : map_(std::move(map)) {}

  void set(std::string var, Formula f) { map_.insert_or_assign(std::move(var), std::move(f)); }
  const std::map<std::string, Formula>& map() const { return map_; }
  bool empty() const { return map_.empty(); }

  Formula apply(const Formula& f) const;
  // Composition: f^(this.then(tau)) == (f^this)^tau for all f.
  Substitution then(const Substitution& tau) const;

  std::string str() const;  // {p:=..., q:=...}

 private:
  std::map<std::string, Formula> map_;
};

// One-sided matching of `f` against `pattern`, where the pattern's variables
// named in `metavars` may bind arbitrary formulas and all other nodes must
// match structurally. Returns the unique matcher or nullopt.
std::optional<Substitution> match_schema(const Formula& pattern,
                                         const std::set<std::string>& metavars,
                                         const Formula& f);

std::string format_set(const FormulaSet& set);  // { f1, f2, ... } in order

}  // namespace modal
