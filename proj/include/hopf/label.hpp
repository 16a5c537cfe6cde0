#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

/// Basis label of a free Z-module.
///
/// Labels are kept in canonical form: tensor products are flat lists of at
/// least two non-unit, non-tensor factors, so the associator and unitors of
/// the monoidal structure act as identities on labels. Direct-sum summands
/// are tagged with Left/Right.
class Label {
 public:
  enum class Kind : std::uint8_t { Unit, Atom, Tensor, Left, Right };

  Label() = default;  // the unit label

  static Label unit() { return Label(); }
  static Label atom(std::string family, std::vector<std::int64_t> index);
  static Label atom(std::string family, std::initializer_list<std::int64_t> index) {
    return atom(std::move(family), std::vector<std::int64_t>(index));
  }
  /// Canonical tensor of two labels (flattens nested tensors, drops units).
  static Label pair(const Label& left, const Label& right);
  /// Canonical label from a factor list: [] -> unit, [x] -> x.
  static Label fromFactors(std::vector<Label> factors);
  static Label left(Label inner);
  static Label right(Label inner);

  Kind kind() const { return kind_; }
  bool isUnit() const { return kind_ == Kind::Unit; }
  const std::string& family() const { return family_; }
  const std::vector<std::int64_t>& index() const { return index_; }
  /// Wrapped label of a Left/Right summand.
  const Label& inner() const;

  /// Tensor factors: [] for the unit, the flat list for a tensor, [*this] otherwise.
  std::vector<Label> factors() const;
  std::size_t arity() const;

  /// Splits a tensor label after its first `leftArity` factors.
  std::pair<Label, Label> split(std::size_t leftArity) const;

  std::string encode() const;
  static Label decode(std::string_view text);

  std::size_t hash() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);

 private:
  Kind kind_ = Kind::Unit;
  std::string family_;
  std::vector<std::int64_t> index_;
  // Tensor: the flat factor list; Left/Right: exactly one element.
  std::vector<Label> children_;
};

std::ostream& operator<<(std::ostream& os, const Label& l);

}  // namespace hopf

template <>
struct std::hash<hopf::Label> {
  std::size_t operator()(const hopf::Label& l) const noexcept { return l.hash(); }
};
