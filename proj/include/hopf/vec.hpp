#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "hopf/label.hpp"

namespace hopf {

using Int = boost::multiprecision::cpp_int;

/// Finitely supported integer combination of basis labels. Zero
/// coefficients are never stored.
class Vec {
 public:
  using Terms = std::map<Label, Int>;

  Vec() = default;
  explicit Vec(Label l, Int c = 1) { add(std::move(l), std::move(c)); }

  void add(const Label& l, const Int& c);
  void add(Label&& l, const Int& c);
  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(const Int& c);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) { return a *= -1; }
  friend Vec operator*(const Int& c, Vec a) { return a *= c; }

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Int coefficient(const Label& l) const;
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Bilinear tensor product of two vectors (canonical label pairing).
  static Vec tensor(const Vec& a, const Vec& b);

  std::string toString() const;

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Vec& v);

}  // namespace hopf
