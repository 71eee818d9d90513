#ifndef UFT_LEVEL_HPP
#define UFT_LEVEL_HPP

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace uft {

struct LevelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A universe-level variable bound by a declaration's telescope. Identity is
// the scope index; the name is a printing hint. Negative indices are reserved
// for the solver's transient metavariables and never appear in checked
// declarations.
struct LevelVar {
  int index = 0;
  std::string name;

  static LevelVar meta(int id) { return LevelVar{-1 - id, "?" + std::to_string(id)}; }
  bool isMeta() const { return index < 0; }

  friend bool operator==(const LevelVar& a, const LevelVar& b) { return a.index == b.index; }
  friend std::strong_ordering operator<=>(const LevelVar& a, const LevelVar& b) {
    return a.index <=> b.index;
  }
};

// Normal form of a universe-level expression: the pointwise maximum of a
// constant atom and finitely many shifted variables v+k. Kept normalized:
// at most one atom per variable (max offset wins), and the constant is 0 or
// strictly greater than every offset (a constant c with some offset k >= c
// is redundant, since variables range over naturals).
class Level {
 public:
  Level() = default;
  explicit Level(unsigned c) : const_(c) {}

  static Level var(LevelVar v, unsigned offset = 0) {
    Level l;
    l.atoms_.emplace(std::move(v), offset);
    return l;
  }

  unsigned constPart() const { return const_; }
  const std::map<LevelVar, unsigned>& atoms() const { return atoms_; }
  bool isConstant() const { return atoms_.empty(); }
  bool hasMeta() const;

  // l with k successors applied (pointwise +k).
  Level shifted(unsigned k) const;

  std::vector<LevelVar> vars() const;

  friend bool operator==(const Level& a, const Level& b) {
    return a.const_ == b.const_ && a.atoms_ == b.atoms_;
  }

 private:
  void normalize();
  friend Level lmax(const Level&, const Level&);

  unsigned const_ = 0;
  std::map<LevelVar, unsigned> atoms_;
};

// Assignment of naturals to level variables, for the semantic oracle.
struct Valuation {
  std::map<int, unsigned> assignment;  // keyed by LevelVar::index

  void set(const LevelVar& v, unsigned n) { assignment[v.index] = n; }
};

// Finite substitution of levels for level variables (telescope instantiation).
struct LevelSubst {
  std::map<int, Level> map;  // keyed by LevelVar::index

  void set(const LevelVar& v, Level l) { map[v.index] = std::move(l); }
};

Level lzero();
Level lsuc(const Level& l);
Level lmax(const Level& a, const Level& b);
bool levelEqual(const Level& a, const Level& b);
bool levelLeq(const Level& a, const Level& b);

// Replaces every atom v+k by lsuc^k(sigma(v)). Throws LevelError if sigma is
// partial on the variables of l.
Level substLevel(const Level& l, const LevelSubst& sigma);

// Semantic value under a valuation. Throws LevelError on a missing variable.
unsigned evaluate(const Level& l, const Valuation& rho);

// Textual form, re-parsable by the surface parser: "0", "lsuc v", "u ⊔ v"
// (ascii: "lmax u v").
std::string show(const Level& l, bool ascii = false);

}  // namespace uft

#endif
