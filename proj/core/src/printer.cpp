#include <string>

#include "modal/formula.hpp"

namespace modal {
namespace {

// Precedence levels used for parenthesization; unary operators bind tightest.
constexpr int kPrecImpl = 2;
constexpr int kPrecUnary = 5;
constexpr int kPrecAtom = 10;

int prec(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var: return kPrecAtom;
    case Kind::Impl: return kPrecImpl;
    default: return kPrecUnary;
  }
}

void print(const Formula& f, int min_prec, std::string& out) {
  bool parens = prec(f) < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Kind::Var:
      out += f.name();
      break;
    case Kind::Neg:
      out += '~';
      print(f.child(), kPrecUnary, out);
      break;
    case Kind::Box:
      out += "box ";
      print(f.child(), kPrecUnary, out);
      break;
    case Kind::Dia:
      out += "dia ";
      print(f.child(), kPrecUnary, out);
      break;
    case Kind::Impl:
      // Right-associative: the left operand needs parens when it is an
      // implication itself.
      print(f.lhs(), kPrecImpl + 1, out);
      out += " -> ";
      print(f.rhs(), kPrecImpl, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

}  // namespace modal
