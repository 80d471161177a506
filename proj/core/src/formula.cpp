#include "modal/formula.hpp"

#include <algorithm>
#include <functional>

namespace modal {

struct FormulaNode {
  Kind kind;
  std::string name;  // Var
  std::shared_ptr<const FormulaNode> a, b;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h * 1000003u ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

std::shared_ptr<const FormulaNode> make_node(Kind k, std::string name,
                                             std::shared_ptr<const FormulaNode> a,
                                             std::shared_ptr<const FormulaNode> b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  std::size_t h = static_cast<std::size_t>(k) + 11;
  if (!n->name.empty()) h = mix(h, std::hash<std::string>{}(n->name));
  if (n->a) h = mix(h, n->a->hash);
  if (n->b) h = mix(h, n->b->hash);
  n->hash = h;
  return n;
}

int cmp_nodes(const FormulaNode* x, const FormulaNode* y) {
  if (x == y) return 0;
  if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
  switch (x->kind) {
    case Kind::Var:
      return x->name.compare(y->name) < 0 ? -1 : (x->name == y->name ? 0 : 1);
    case Kind::Neg:
    case Kind::Box:
    case Kind::Dia:
      return cmp_nodes(x->a.get(), y->a.get());
    case Kind::Impl: {
      int c = cmp_nodes(x->a.get(), y->a.get());
      return c != 0 ? c : cmp_nodes(x->b.get(), y->b.get());
    }
  }
  return 0;
}

}  // namespace

Formula Formula::var(std::string name) {
  return Formula(make_node(Kind::Var, std::move(name), nullptr, nullptr));
}
Formula Formula::neg(Formula f) {
  return Formula(make_node(Kind::Neg, {}, std::move(f.n_), nullptr));
}
Formula Formula::impl(Formula lhs, Formula rhs) {
  return Formula(make_node(Kind::Impl, {}, std::move(lhs.n_), std::move(rhs.n_)));
}
Formula Formula::box(Formula f) {
  return Formula(make_node(Kind::Box, {}, std::move(f.n_), nullptr));
}
Formula Formula::dia(Formula f) {
  return Formula(make_node(Kind::Dia, {}, std::move(f.n_), nullptr));
}

Kind Formula::kind() const { return n_->kind; }
const std::string& Formula::name() const { return n_->name; }
Formula Formula::child() const { return Formula(n_->a); }
Formula Formula::lhs() const { return Formula(n_->a); }
Formula Formula::rhs() const { return Formula(n_->b); }
std::size_t Formula::hash() const { return n_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.n_ == b.n_) return true;
  if (a.n_->hash != b.n_->hash) return false;
  return cmp_nodes(a.n_.get(), b.n_.get()) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  int c = cmp_nodes(a.n_.get(), b.n_.get());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(Convention conv) {
  switch (conv) {
    case Convention::BoxPrimitive: return "box";
    case Convention::DiamondPrimitive: return "diamond";
    case Convention::BothPrimitive: return "both";
  }
  return "?";
}

Convention convention_from_string(std::string_view s) {
  if (s == "box") return Convention::BoxPrimitive;
  if (s == "diamond" || s == "dia") return Convention::DiamondPrimitive;
  if (s == "both") return Convention::BothPrimitive;
  throw Error("unknown convention: " + std::string(s));
}

Formula make_top() { return Formula::impl(Formula::var("p0"), Formula::var("p0")); }
Formula make_and(Formula a, Formula b) {
  return Formula::neg(Formula::impl(std::move(a), Formula::neg(std::move(b))));
}
Formula make_or(Formula a, Formula b) {
  return Formula::impl(Formula::neg(std::move(a)), std::move(b));
}
Formula make_iff(Formula a, Formula b) {
  Formula ab = Formula::impl(a, b);
  Formula ba = Formula::impl(std::move(b), std::move(a));
  return make_and(std::move(ab), std::move(ba));
}

Formula expand(const Formula& f, Convention conv) {
  switch (f.kind()) {
    case Kind::Var:
      return f;
    case Kind::Neg:
      return Formula::neg(expand(f.child(), conv));
    case Kind::Impl:
      return Formula::impl(expand(f.lhs(), conv), expand(f.rhs(), conv));
    case Kind::Box: {
      Formula e = expand(f.child(), conv);
      if (conv == Convention::DiamondPrimitive)
        return Formula::neg(Formula::dia(Formula::neg(std::move(e))));
      return Formula::box(std::move(e));
    }
    case Kind::Dia: {
      Formula e = expand(f.child(), conv);
      if (conv == Convention::BoxPrimitive)
        return Formula::neg(Formula::box(Formula::neg(std::move(e))));
      return Formula::dia(std::move(e));
    }
  }
  throw Error("corrupt formula node");
}

Formula parse_formula(std::string_view text, Convention conv) {
  return expand(parse_surface(text), conv);
}

bool is_core(const Formula& f, Convention conv) {
  switch (f.kind()) {
    case Kind::Var:
      return true;
    case Kind::Neg:
      return is_core(f.child(), conv);
    case Kind::Impl:
      return is_core(f.lhs(), conv) && is_core(f.rhs(), conv);
    case Kind::Box:
      return conv != Convention::DiamondPrimitive && is_core(f.child(), conv);
    case Kind::Dia:
      return conv != Convention::BoxPrimitive && is_core(f.child(), conv);
  }
  return false;
}

Formula box_of(const Formula& f, Convention conv) {
  if (conv == Convention::DiamondPrimitive)
    return Formula::neg(Formula::dia(Formula::neg(f)));
  return Formula::box(f);
}

Formula dia_of(const Formula& f, Convention conv) {
  if (conv == Convention::BoxPrimitive)
    return Formula::neg(Formula::box(Formula::neg(f)));
  return Formula::dia(f);
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case Kind::Var: out.insert(g.name()); break;
      case Kind::Neg:
      case Kind::Box:
      case Kind::Dia: walk(g.child()); break;
      case Kind::Impl: walk(g.lhs()); walk(g.rhs()); break;
    }
  };
  walk(f);
  return out;
}

namespace {
void collect_sub(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case Kind::Var: break;
    case Kind::Neg:
    case Kind::Box:
    case Kind::Dia: collect_sub(f.child(), out); break;
    case Kind::Impl: collect_sub(f.lhs(), out); collect_sub(f.rhs(), out); break;
  }
}
}  // namespace

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  collect_sub(f, out);
  return out;
}

FormulaSet subformulas(const FormulaSet& set) {
  FormulaSet out;
  for (const Formula& f : set) collect_sub(f, out);
  return out;
}

std::pair<FormulaSet, FormulaSet> sub_minus_plus(const Formula& f) {
  FormulaSet sub = subformulas(f);
  FormulaSet minus;
  for (const Formula& g : sub) minus.insert(Formula::neg(g));
  FormulaSet plus = sub;
  plus.insert(minus.begin(), minus.end());
  return {std::move(minus), std::move(plus)};
}

std::optional<ClosureWitness> subformula_closure_witness(const FormulaSet& set) {
  for (const Formula& f : set)
    for (const Formula& g : subformulas(f))
      if (!set.count(g)) return ClosureWitness{f, g};
  return std::nullopt;
}

bool is_subformula_closed(const FormulaSet& set) {
  return !subformula_closure_witness(set).has_value();
}

std::vector<ClosureWitness> closure_defects(const FormulaSet& set) {
  std::vector<ClosureWitness> out;
  for (const Formula& f : set)
    for (const Formula& g : subformulas(f))
      if (!set.count(g)) out.push_back({f, g});
  return out;
}

FormulaSet chagrov_sigma(const Formula& phi) {
  if (!is_core(phi, Convention::BoxPrimitive))
    throw Error("chagrov_sigma expects a box-primitive core formula");
  FormulaSet sigma = subformulas(phi);
  for (const Formula& f : subformulas(phi)) {
    if (f.is(Kind::Box))
      sigma.insert(expand(Formula::dia(f), Convention::BoxPrimitive));
  }
  return sigma;
}

Formula Substitution::apply(const Formula& f) const {
  switch (f.kind()) {
    case Kind::Var: {
      auto it = map_.find(f.name());
      return it == map_.end() ? f : it->second;
    }
    case Kind::Neg: return Formula::neg(apply(f.child()));
    case Kind::Box: return Formula::box(apply(f.child()));
    case Kind::Dia: return Formula::dia(apply(f.child()));
    case Kind::Impl: return Formula::impl(apply(f.lhs()), apply(f.rhs()));
  }
  throw Error("corrupt formula node");
}

Substitution Substitution::then(const Substitution& tau) const {
  std::map<std::string, Formula> out;
  for (const auto& [v, f] : map_) out.insert({v, tau.apply(f)});
  for (const auto& [v, f] : tau.map_) out.insert({v, f});  // keeps existing keys
  return Substitution(std::move(out));
}

std::string Substitution::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, f] : map_) {
    if (!first) out += ", ";
    first = false;
    out += v + ":=" + f.str();
  }
  return out + "}";
}

std::optional<Substitution> match_schema(const Formula& pattern,
                                         const std::set<std::string>& metavars,
                                         const Formula& f) {
  std::map<std::string, Formula> binding;
  std::function<bool(const Formula&, const Formula&)> go = [&](const Formula& p,
                                                               const Formula& g) {
    if (p.is(Kind::Var) && metavars.count(p.name())) {
      auto [it, fresh] = binding.insert({p.name(), g});
      return fresh || it->second == g;
    }
    if (p.kind() != g.kind()) return false;
    switch (p.kind()) {
      case Kind::Var: return p.name() == g.name();
      case Kind::Neg:
      case Kind::Box:
      case Kind::Dia: return go(p.child(), g.child());
      case Kind::Impl: return go(p.lhs(), g.lhs()) && go(p.rhs(), g.rhs());
    }
    return false;
  };
  if (!go(pattern, f)) return std::nullopt;
  return Substitution(std::move(binding));
}

std::string format_set(const FormulaSet& set) {
  std::string out = "{";
  bool first = true;
  for (const Formula& f : set) {
    if (!first) out += ", ";
    first = false;
    out += f.str();
  }
  return out + "}";
}

}  // namespace modal
