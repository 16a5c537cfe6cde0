#include "hopf/space.hpp"

#include <algorithm>
#include <set>

#include "hopf/errors.hpp"

namespace hopf {

Space::Space(std::string name, std::size_t arity, ValidFn valid, ShellFn shell)
    : impl_(std::make_shared<const Impl>(
          Impl{std::move(name), arity, std::move(valid), std::move(shell)})) {}

Space Space::unit() {
  return Space(
      "I", 0, [](const Label& l) { return l.isUnit(); },
      [](int t) { return t == 0 ? std::vector<Label>{Label()} : std::vector<Label>{}; });
}

Space Space::finite(std::string name, std::vector<Label> basis) {
  std::size_t arity = basis.empty() ? 1 : basis.front().arity();
  for (const auto& b : basis) {
    if (b.arity() != arity) throw Error("finite space " + name + ": mixed label arities");
  }
  auto members = std::make_shared<const std::set<Label>>(basis.begin(), basis.end());
  if (members->size() != basis.size()) throw Error("finite space " + name + ": repeated label");
  auto list = std::make_shared<const std::vector<Label>>(std::move(basis));
  return Space(
      std::move(name), arity, [members](const Label& l) { return members->count(l) > 0; },
      [list](int t) { return t == 0 ? *list : std::vector<Label>{}; });
}

std::vector<Label> Space::shell(int t) const {
  if (t < 0) return {};
  return impl_->shell(t);
}

std::vector<Label> Space::enumerate(int window) const {
  std::vector<Label> out;
  for (int t = 0; t <= window; ++t) {
    auto s = impl_->shell(t);
    out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  }
  return out;
}

std::vector<std::pair<Label, int>> Space::enumerateWithShell(int window) const {
  std::vector<std::pair<Label, int>> out;
  for (int t = 0; t <= window; ++t) {
    for (auto& l : impl_->shell(t)) out.emplace_back(std::move(l), t);
  }
  return out;
}

Space tensorSpace(const Space& x, const Space& y) {
  if (x.isUnit()) return y;
  if (y.isUnit()) return x;
  const std::size_t ax = x.arity();
  auto valid = [x, y, ax](const Label& l) {
    if (l.arity() != ax + y.arity()) return false;
    auto [lhs, rhs] = l.split(ax);
    return x.valid(lhs) && y.valid(rhs);
  };
  auto shell = [x, y](int t) {
    std::vector<Label> out;
    const auto ex = x.enumerateWithShell(t);
    const auto ey = y.enumerateWithShell(t);
    for (const auto& [lx, sx] : ex) {
      for (const auto& [ly, sy] : ey) {
        if (std::max(sx, sy) == t) out.push_back(Label::pair(lx, ly));
      }
    }
    return out;
  };
  return Space(x.name() + "⊗" + y.name(), ax + y.arity(), valid, shell);
}

Space tensorSpace(const std::vector<Space>& factors) {
  Space out = Space::unit();
  for (const auto& f : factors) out = tensorSpace(out, f);
  return out;
}

Space directSumSpace(const Space& x, const Space& y) {
  auto valid = [x, y](const Label& l) {
    if (l.kind() == Label::Kind::Left) return x.valid(l.inner());
    if (l.kind() == Label::Kind::Right) return y.valid(l.inner());
    return false;
  };
  auto shell = [x, y](int t) {
    std::vector<Label> out;
    for (auto& l : x.shell(t)) out.push_back(Label::left(std::move(l)));
    for (auto& l : y.shell(t)) out.push_back(Label::right(std::move(l)));
    return out;
  };
  return Space("(" + x.name() + "⊕" + y.name() + ")", 1, valid, shell);
}

}  // namespace hopf
