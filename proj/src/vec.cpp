#include "hopf/vec.hpp"

#include <ostream>

namespace hopf {

void Vec::add(const Label& l, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Vec::add(Label&& l, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(l), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Vec& Vec::operator+=(const Vec& other) {
  for (const auto& [l, c] : other.terms_) add(l, c);
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  for (const auto& [l, c] : other.terms_) add(l, -c);
  return *this;
}

Vec& Vec::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, v] : terms_) v *= c;
  return *this;
}

Int Vec::coefficient(const Label& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Int(0) : it->second;
}

Vec Vec::tensor(const Vec& a, const Vec& b) {
  Vec out;
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) out.add(Label::pair(la, lb), ca * cb);
  }
  return out;
}

std::string Vec::toString() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    first = false;
    Int mag = c < 0 ? Int(-c) : c;
    if (mag != 1) s += mag.str() + "*";
    s += l.encode();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << v.toString(); }

}  // namespace hopf
