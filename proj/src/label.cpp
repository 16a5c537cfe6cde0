#include "hopf/label.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

#include "hopf/errors.hpp"

namespace hopf {

Label Label::atom(std::string family, std::vector<std::int64_t> index) {
  Label l;
  l.kind_ = Kind::Atom;
  l.family_ = std::move(family);
  l.index_ = std::move(index);
  return l;
}

Label Label::fromFactors(std::vector<Label> factors) {
  std::vector<Label> flat;
  flat.reserve(factors.size());
  for (auto& f : factors) {
    switch (f.kind_) {
      case Kind::Unit:
        break;
      case Kind::Tensor:
        for (auto& c : f.children_) flat.push_back(std::move(c));
        break;
      default:
        flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return Label();
  if (flat.size() == 1) return std::move(flat.front());
  Label l;
  l.kind_ = Kind::Tensor;
  l.children_ = std::move(flat);
  return l;
}

Label Label::pair(const Label& left, const Label& right) {
  if (left.isUnit()) return right;
  if (right.isUnit()) return left;
  Label l;
  l.kind_ = Kind::Tensor;
  auto append = [&](const Label& x) {
    if (x.kind_ == Kind::Tensor) {
      l.children_.insert(l.children_.end(), x.children_.begin(), x.children_.end());
    } else {
      l.children_.push_back(x);
    }
  };
  l.children_.reserve(left.arity() + right.arity());
  append(left);
  append(right);
  return l;
}

Label Label::left(Label inner) {
  Label l;
  l.kind_ = Kind::Left;
  l.children_.push_back(std::move(inner));
  return l;
}

Label Label::right(Label inner) {
  Label l;
  l.kind_ = Kind::Right;
  l.children_.push_back(std::move(inner));
  return l;
}

const Label& Label::inner() const {
  if (kind_ != Kind::Left && kind_ != Kind::Right) {
    throw Error("Label::inner on a label that is not a summand: " + encode());
  }
  return children_.front();
}

std::vector<Label> Label::factors() const {
  switch (kind_) {
    case Kind::Unit:
      return {};
    case Kind::Tensor:
      return children_;
    default:
      return {*this};
  }
}

std::size_t Label::arity() const {
  switch (kind_) {
    case Kind::Unit:
      return 0;
    case Kind::Tensor:
      return children_.size();
    default:
      return 1;
  }
}

std::pair<Label, Label> Label::split(std::size_t leftArity) const {
  if (leftArity == 0) return {Label(), *this};
  const std::size_t n = arity();
  if (leftArity == n) return {*this, Label()};
  if (leftArity > n) {
    throw Error("cannot split " + encode() + " after " + std::to_string(leftArity) +
                " factors");
  }
  std::vector<Label> lhs(children_.begin(), children_.begin() + leftArity);
  std::vector<Label> rhs(children_.begin() + leftArity, children_.end());
  return {fromFactors(std::move(lhs)), fromFactors(std::move(rhs))};
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.family_.compare(b.family_); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.index_ <=> b.index_; c != 0) return c;
  const std::size_t n = std::min(a.children_.size(), b.children_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.children_[i] <=> b.children_[i]; c != 0) return c;
  }
  return a.children_.size() <=> b.children_.size();
}

std::size_t Label::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(std::hash<std::string>{}(family_));
  for (auto i : index_) mix(std::hash<std::int64_t>{}(i));
  for (const auto& c : children_) mix(c.hash());
  return h;
}

// Text form:  1 | fam[i,j] | (a*b*c) | L(x) | R(x)
std::string Label::encode() const {
  switch (kind_) {
    case Kind::Unit:
      return "1";
    case Kind::Atom: {
      std::string s = family_ + "[";
      for (std::size_t i = 0; i < index_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(index_[i]);
      }
      return s + "]";
    }
    case Kind::Tensor: {
      std::string s = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) s += '*';
        s += children_[i].encode();
      }
      return s + ")";
    }
    case Kind::Left:
      return "L(" + children_.front().encode() + ")";
    case Kind::Right:
      return "R(" + children_.front().encode() + ")";
  }
  return {};
}

namespace {

class LabelParser {
 public:
  explicit LabelParser(std::string_view text) : s_(text) {}

  Label parseAll() {
    Label l = parse();
    skipSpace();
    if (pos_ != s_.size()) fail("trailing characters");
    return l;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad label '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " +
                     why);
  }

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skipSpace();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Label parse() {
    skipSpace();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '1') {
      ++pos_;
      return Label();
    }
    if (c == '(') {
      ++pos_;
      std::vector<Label> factors;
      factors.push_back(parse());
      while (eat('*')) factors.push_back(parse());
      expect(')');
      if (factors.size() < 2) fail("a tensor needs at least two factors");
      for (const auto& f : factors) {
        if (f.kind() == Label::Kind::Unit || f.kind() == Label::Kind::Tensor) {
          fail("tensor factors must be non-unit, non-tensor labels");
        }
      }
      return Label::fromFactors(std::move(factors));
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected a label");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_' || s_[pos_] == '-')) {
      ++pos_;
    }
    std::string name(s_.substr(start, pos_ - start));
    if ((name == "L" || name == "R") && pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      Label innerLabel = parse();
      expect(')');
      return name == "L" ? Label::left(std::move(innerLabel)) : Label::right(std::move(innerLabel));
    }
    expect('[');
    std::vector<std::int64_t> index;
    if (!eat(']')) {
      do {
        skipSpace();
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc()) fail("expected an integer");
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        index.push_back(v);
      } while (eat(','));
      expect(']');
    }
    return Label::atom(std::move(name), std::move(index));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Label Label::decode(std::string_view text) { return LabelParser(text).parseAll(); }

std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.encode(); }

}  // namespace hopf
