#include "hopf/linmap.hpp"

#include "hopf/errors.hpp"

namespace hopf {

LinMap::LinMap(Space dom, Space cod, ApplyFn fn)
    : dom_(std::move(dom)), cod_(std::move(cod)), fn_(std::move(fn)) {}

LinMap LinMap::identity(const Space& x) {
  return LinMap(x, x, [](const Label& l) { return Vec(l); });
}

LinMap LinMap::zero(const Space& dom, const Space& cod) {
  return LinMap(dom, cod, [](const Label&) { return Vec(); });
}

LinMap LinMap::scalar(const Space& x, const Int& c) {
  return LinMap(x, x, [c](const Label& l) { return Vec(l, c); });
}

Vec LinMap::operator()(const Vec& v) const {
  Vec out;
  for (const auto& [l, c] : v) {
    Vec image = fn_(l);
    if (c == 1) {
      out += image;
    } else {
      image *= c;
      out += image;
    }
  }
  return out;
}

LinMap composeMaps(const LinMap& f, const LinMap& g) {
  if (!sameSpace(f.cod(), g.dom())) {
    throw SpaceMismatch("cannot compose: codomain " + f.cod().name() + " vs domain " +
                        g.dom().name());
  }
  return LinMap(f.dom(), g.cod(), [f, g](const Label& l) { return g(f(l)); });
}

LinMap compose(std::initializer_list<LinMap> maps) {
  if (maps.size() == 0) throw Error("compose of no maps");
  auto it = maps.end();
  --it;
  LinMap out = *it;
  while (it != maps.begin()) {
    --it;
    out = composeMaps(out, *it);
  }
  return out;
}

LinMap tensorMaps(const LinMap& f, const LinMap& g) {
  const std::size_t split = f.dom().arity();
  return LinMap(tensorSpace(f.dom(), g.dom()), tensorSpace(f.cod(), g.cod()),
                [f, g, split](const Label& l) {
                  auto [lhs, rhs] = l.split(split);
                  return Vec::tensor(f(lhs), g(rhs));
                });
}

LinMap tensorMaps(std::initializer_list<LinMap> maps) {
  if (maps.size() == 0) throw Error("tensor of no maps");
  auto it = maps.begin();
  LinMap out = *it;
  for (++it; it != maps.end(); ++it) out = tensorMaps(out, *it);
  return out;
}

LinMap directSumMaps(const LinMap& f, const LinMap& g) {
  return LinMap(directSumSpace(f.dom(), g.dom()), directSumSpace(f.cod(), g.cod()),
                [f, g](const Label& l) {
                  Vec out;
                  if (l.kind() == Label::Kind::Left) {
                    for (const auto& [m, c] : f(l.inner())) out.add(Label::left(m), c);
                  } else if (l.kind() == Label::Kind::Right) {
                    for (const auto& [m, c] : g(l.inner())) out.add(Label::right(m), c);
                  } else {
                    throw Error("direct sum map applied to untagged label " + l.encode());
                  }
                  return out;
                });
}

LinMap addMaps(const LinMap& f, const LinMap& g) {
  if (!sameSpace(f.dom(), g.dom()) || !sameSpace(f.cod(), g.cod())) {
    throw SpaceMismatch("cannot add maps " + f.dom().name() + "->" + f.cod().name() + " and " +
                        g.dom().name() + "->" + g.cod().name());
  }
  return LinMap(f.dom(), f.cod(), [f, g](const Label& l) { return f(l) + g(l); });
}

LinMap scaleMap(const Int& c, const LinMap& f) {
  return LinMap(f.dom(), f.cod(), [c, f](const Label& l) { return c * f(l); });
}

LinMap swapMap(const Space& x, const Space& y) {
  const std::size_t split = x.arity();
  return LinMap(tensorSpace(x, y), tensorSpace(y, x), [split](const Label& l) {
    auto [lhs, rhs] = l.split(split);
    return Vec(Label::pair(rhs, lhs));
  });
}

LinMap permuteMap(const std::vector<Space>& factors, const std::vector<std::size_t>& perm) {
  if (perm.size() != factors.size()) throw Error("permutation size mismatch");
  std::vector<Space> target;
  std::vector<std::size_t> arities;
  for (std::size_t j : perm) {
    if (j >= factors.size()) throw Error("permutation index out of range");
    target.push_back(factors[j]);
  }
  for (const auto& f : factors) arities.push_back(f.arity());
  return LinMap(tensorSpace(factors), tensorSpace(target), [arities, perm](const Label& l) {
    std::vector<Label> parts;
    parts.reserve(arities.size());
    Label rest = l;
    for (std::size_t i = 0; i + 1 < arities.size(); ++i) {
      auto [head, tail] = rest.split(arities[i]);
      parts.push_back(std::move(head));
      rest = std::move(tail);
    }
    parts.push_back(std::move(rest));
    Label out;
    for (std::size_t j : perm) out = Label::pair(out, parts[j]);
    return Vec(std::move(out));
  });
}

LinMap injectLeft(const Space& x, const Space& y) {
  return LinMap(x, directSumSpace(x, y), [](const Label& l) { return Vec(Label::left(l)); });
}

LinMap injectRight(const Space& x, const Space& y) {
  return LinMap(y, directSumSpace(x, y), [](const Label& l) { return Vec(Label::right(l)); });
}

LinMap projectLeft(const Space& x, const Space& y) {
  return LinMap(directSumSpace(x, y), x, [](const Label& l) {
    return l.kind() == Label::Kind::Left ? Vec(l.inner()) : Vec();
  });
}

LinMap projectRight(const Space& x, const Space& y) {
  return LinMap(directSumSpace(x, y), y, [](const Label& l) {
    return l.kind() == Label::Kind::Right ? Vec(l.inner()) : Vec();
  });
}

LinMap relabelMap(const Space& dom, const Space& cod, std::function<Label(const Label&)> fn) {
  return LinMap(dom, cod, [fn = std::move(fn)](const Label& l) { return Vec(fn(l)); });
}

}  // namespace hopf
