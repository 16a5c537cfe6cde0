#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hopf/label.hpp"

namespace hopf {

/// A based free Z-module: a validity predicate on labels plus a window
/// enumeration. Every label of a space has the same tensor arity.
///
/// Windows are organized in shells: shell(t) lists the labels that first
/// appear at window t, so enumerate(K) is shell(0) ++ ... ++ shell(K) and
/// enumerate(K) is always a prefix of enumerate(K+1).
class Space {
 public:
  using ValidFn = std::function<bool(const Label&)>;
  using ShellFn = std::function<std::vector<Label>(int shell)>;

  Space(std::string name, std::size_t arity, ValidFn valid, ShellFn shell);

  /// The tensor unit I, spanned by the unit label.
  static Space unit();
  /// A finite space with the given basis, all in shell 0.
  static Space finite(std::string name, std::vector<Label> basis);

  const std::string& name() const { return impl_->name; }
  std::size_t arity() const { return impl_->arity; }
  bool valid(const Label& l) const { return impl_->valid(l); }
  std::vector<Label> shell(int t) const;
  std::vector<Label> enumerate(int window) const;
  std::vector<std::pair<Label, int>> enumerateWithShell(int window) const;

  bool isUnit() const { return impl_->arity == 0; }

  friend bool sameSpace(const Space& a, const Space& b) { return a.name() == b.name(); }

 private:
  struct Impl {
    std::string name;
    std::size_t arity;
    ValidFn valid;
    ShellFn shell;
  };
  std::shared_ptr<const Impl> impl_;
};

/// X (x) Y with canonical labels; I (x) X and X (x) I are X itself.
Space tensorSpace(const Space& x, const Space& y);
Space tensorSpace(const std::vector<Space>& factors);
/// X (+) Y with Left/Right-tagged labels.
Space directSumSpace(const Space& x, const Space& y);

}  // namespace hopf
