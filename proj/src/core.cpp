#include "uft/core.hpp"

namespace uft {

TermPtr mkTerm(Tm kind, std::vector<TermPtr> kids, std::vector<Level> levels, int index,
               std::string hint, Span span) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->kids = std::move(kids);
  t->levels = std::move(levels);
  t->index = index;
  t->hint = std::move(hint);
  t->span = span;
  return t;
}

bool termEq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->index != b->index) return false;
  if (a->levels.size() != b->levels.size() || a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->levels.size(); ++i)
    if (!levelEqual(a->levels[i], b->levels[i])) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!termEq(a->kids[i], b->kids[i])) return false;
  return true;
}

namespace {

// Number of extra binders each kid position introduces.
int binderOffset(Tm kind, size_t kid) {
  switch (kind) {
    case Tm::Pi:
    case Tm::Sigma:
      return kid == 1 ? 1 : 0;
    case Tm::Lambda:
      return 1;
    default:
      return 0;
  }
}

}  // namespace

bool wellScoped(const TermPtr& t, int depth) {
  if (!t) return false;
  if (t->kind == Tm::Var) return t->index >= 0 && t->index < depth;
  for (size_t i = 0; i < t->kids.size(); ++i)
    if (!wellScoped(t->kids[i], depth + binderOffset(t->kind, i))) return false;
  return true;
}

}  // namespace uft
