#include "uft/level.hpp"

#include <algorithm>

namespace uft {

bool Level::hasMeta() const {
  for (const auto& [v, k] : atoms_)
    if (v.isMeta()) return true;
  return false;
}

void Level::normalize() {
  for (const auto& [v, k] : atoms_) {
    if (k >= const_) {
      const_ = 0;
      return;
    }
  }
}

Level Level::shifted(unsigned k) const {
  Level r;
  r.const_ = const_ + k;
  for (const auto& [v, off] : atoms_) r.atoms_.emplace(v, off + k);
  r.normalize();
  return r;
}

std::vector<LevelVar> Level::vars() const {
  std::vector<LevelVar> out;
  out.reserve(atoms_.size());
  for (const auto& [v, k] : atoms_) out.push_back(v);
  return out;
}

Level lzero() { return Level(); }

Level lsuc(const Level& l) { return l.shifted(1); }

Level lmax(const Level& a, const Level& b) {
  Level r;
  r.const_ = std::max(a.const_, b.const_);
  r.atoms_ = a.atoms_;
  for (const auto& [v, k] : b.atoms_) {
    auto [it, inserted] = r.atoms_.emplace(v, k);
    if (!inserted) it->second = std::max(it->second, k);
  }
  r.normalize();
  return r;
}

bool levelEqual(const Level& a, const Level& b) { return a == b; }

bool levelLeq(const Level& a, const Level& b) { return lmax(a, b) == b; }

Level substLevel(const Level& l, const LevelSubst& sigma) {
  Level r(l.constPart());
  for (const auto& [v, k] : l.atoms()) {
    auto it = sigma.map.find(v.index);
    if (it == sigma.map.end())
      throw LevelError("substLevel: no binding for level variable " + v.name);
    r = lmax(r, it->second.shifted(k));
  }
  return r;
}

unsigned evaluate(const Level& l, const Valuation& rho) {
  unsigned result = l.constPart();
  for (const auto& [v, k] : l.atoms()) {
    auto it = rho.assignment.find(v.index);
    if (it == rho.assignment.end())
      throw LevelError("evaluate: valuation is partial, missing " + v.name);
    result = std::max(result, it->second + k);
  }
  return result;
}

namespace {

std::string showAtom(const LevelVar& v, unsigned offset) {
  if (offset == 0) return v.name;
  std::string s = "lsuc " + v.name;
  for (unsigned i = 1; i < offset; ++i) s = "lsuc (" + s + ")";
  return s;
}

}  // namespace

std::string show(const Level& l, bool ascii) {
  std::vector<std::string> parts;
  for (const auto& [v, k] : l.atoms()) parts.push_back(showAtom(v, k));
  if (l.constPart() > 0 || parts.empty()) parts.push_back(std::to_string(l.constPart()));
  if (parts.size() == 1) return parts[0];
  if (!ascii) {
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " ⊔ " + parts[i];
    return out;
  }
  // ASCII join is prefix-binary, nested to the right.
  std::string out = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) {
    bool atom = parts[i].find(' ') == std::string::npos;
    bool atomOut = out.find(' ') == std::string::npos;
    out = "lmax " + (atom ? parts[i] : "(" + parts[i] + ")") + " " +
          (atomOut ? out : "(" + out + ")");
  }
  return out;
}

}  // namespace uft
