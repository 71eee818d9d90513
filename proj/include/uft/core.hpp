#ifndef UFT_CORE_HPP
#define UFT_CORE_HPP

#include <memory>
#include <string>
#include <vector>

#include "uft/level.hpp"
#include "uft/source.hpp"

namespace uft {

// Node kinds shared by the surface and the nameless core syntax.
enum class Tm {
  Var,        // core: de Bruijn index in `index`; surface: name reference
  Universe,   // levels[0]
  Pi,         // kids: domain, codomain (binder); hint = binder name
  Lambda,     // kids: body (binder); hint = binder name
  App,        // kids: function, argument
  Sigma,      // kids: first type, second type (binder); hint
  Pair,       // kids: first, second
  Fst,        // kids: pair
  Snd,        // kids: pair
  Id,         // kids: type, lhs, rhs
  Refl,       //
  JElim,      // levels[0] = motive universe; kids: motive, base, path
  NatType,    //
  Zero,       //
  Suc,        // kids: argument
  NatElim,    // levels[0]; kids: motive, zero case, suc case, scrutinee
  EmptyType,  // levels[0]
  EmptyElim,  // levels[0]; kids: motive, scrutinee
  UnitType,   // levels[0]
  Star,       //
  SumType,    // kids: left, right
  Inl,        // kids: argument
  Inr,        // kids: argument
  SumElim,    // levels[0]; kids: motive, left case, right case, scrutinee
  Trunc,      // kids: argument type
  TruncIntro, // kids: argument
  TruncElim,  // kids: target type, prop witness, map, scrutinee
  Global,     // index = declaration id; levels = telescope instantiation; hint = name
  Ann,        // kids: term, type
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Nameless core term. Variables count binders inward (innermost is 0); level
// expressions are kept in normal form over the enclosing declaration's
// telescope. Binder hints survive purely for printing.
struct Term {
  Tm kind;
  std::vector<TermPtr> kids;
  std::vector<Level> levels;
  std::vector<bool> holes;  // Global only: which level slots await solving
  int index = -1;           // Var index / Global declaration id
  std::string hint;
  Span span;

  bool hasHoles() const {
    for (bool h : holes)
      if (h) return true;
    return false;
  }
};

TermPtr mkTerm(Tm kind, std::vector<TermPtr> kids = {}, std::vector<Level> levels = {},
               int index = -1, std::string hint = {}, Span span = {});

inline TermPtr mkVar(int index, Span s = {}) { return mkTerm(Tm::Var, {}, {}, index, {}, s); }
inline TermPtr mkUniverse(Level l, Span s = {}) {
  return mkTerm(Tm::Universe, {}, {std::move(l)}, -1, {}, s);
}
inline TermPtr mkPi(TermPtr dom, TermPtr cod, std::string hint = "_", Span s = {}) {
  return mkTerm(Tm::Pi, {std::move(dom), std::move(cod)}, {}, -1, std::move(hint), s);
}
inline TermPtr mkLambda(TermPtr body, std::string hint = "x", Span s = {}) {
  return mkTerm(Tm::Lambda, {std::move(body)}, {}, -1, std::move(hint), s);
}
inline TermPtr mkApp(TermPtr f, TermPtr a, Span s = {}) {
  return mkTerm(Tm::App, {std::move(f), std::move(a)}, {}, -1, {}, s);
}
inline TermPtr mkSigma(TermPtr fst, TermPtr snd, std::string hint = "_", Span s = {}) {
  return mkTerm(Tm::Sigma, {std::move(fst), std::move(snd)}, {}, -1, std::move(hint), s);
}
inline TermPtr mkGlobal(int id, std::vector<Level> inst, std::string name, Span s = {}) {
  return mkTerm(Tm::Global, {}, std::move(inst), id, std::move(name), s);
}

// Structural equality up to hints and spans ("index-identical").
bool termEq(const TermPtr& a, const TermPtr& b);

// True iff all variable indices are below depth plus their binder count.
bool wellScoped(const TermPtr& t, int depth);

// A resolved top-level declaration: a definition or a postulate, under a
// prenex telescope of level variables.
struct Declaration {
  std::string name;
  std::vector<LevelVar> telescope;
  bool isPostulate = false;
  TermPtr type;
  TermPtr body;  // null for postulates
  Span span;
  std::string file;
};

}  // namespace uft

#endif
