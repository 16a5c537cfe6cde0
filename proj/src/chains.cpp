#include "hopf/chains.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "hopf/errors.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::fromRows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw RankMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) {
    throw RankMismatch("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                       " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw RankMismatch("matrix sum of different shapes");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(const Int& c) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= c;
  return out;
}

bool Matrix::isZero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

nlohmann::json Matrix::toJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < rows_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < cols_; ++c) {
      const Int& v = (*this)(r, c);
      if (v > std::numeric_limits<std::int64_t>::max() ||
          v < std::numeric_limits<std::int64_t>::min()) {
        throw Error("matrix entry does not fit in 64 bits");
      }
      row.push_back(static_cast<std::int64_t>(v));
    }
    rows.push_back(row);
  }
  return rows;
}

Matrix Matrix::fromJson(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
  if (j.size() != rows) throw RankMismatch("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw RankMismatch("matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = j[r][c].get<std::int64_t>();
  }
  return m;
}

// ---------------------------------------------------------------------------
// ChainComplex

ChainComplex ChainComplex::make(std::string name, std::map<int, Basis> basis,
                                std::map<int, Matrix> d, int step) {
  if (step != 1 && step != -1) throw IllegalChain("differential step must be +1 or -1");
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->step = step;
  for (auto& [n, b] : basis) {
    if (b.empty()) continue;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!impl->index.emplace(b[i], std::make_pair(n, i)).second) {
        throw IllegalChain("repeated basis label " + b[i].encode());
      }
    }
    impl->basis.emplace(n, std::move(b));
  }
  auto rankOf = [&](int n) -> std::size_t {
    auto it = impl->basis.find(n);
    return it == impl->basis.end() ? 0 : it->second.size();
  };
  for (auto& [n, m] : d) {
    if (m.rows() != rankOf(n - step) || m.cols() != rankOf(n)) {
      throw IllegalChain("differential at degree " + std::to_string(n) + " has shape " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(rankOf(n - step)) + "x" +
                         std::to_string(rankOf(n)));
    }
    if (m.rows() > 0 && m.cols() > 0 && !m.isZero()) impl->d.emplace(n, std::move(m));
  }
  ChainComplex out(impl);
  if (auto bad = out.squareZeroFailure()) {
    throw IllegalChain("d∘d != 0 starting at degree " + std::to_string(*bad));
  }
  return out;
}

ChainComplex ChainComplex::standard(int lo, const std::vector<std::int64_t>& ranks,
                                    std::map<int, Matrix> d, int step, const std::string& family) {
  std::map<int, Basis> basis;
  std::string name = family + "<" + std::to_string(lo) + ":";
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const int n = lo + static_cast<int>(k);
    if (k) name += ",";
    name += std::to_string(ranks[k]);
    for (std::int64_t i = 0; i < ranks[k]; ++i) basis[n].push_back(Label::atom(family, {n, i}));
  }
  name += ">";
  return make(name, std::move(basis), std::move(d), step);
}

ChainComplex ChainComplex::fromLinear(std::string name, std::map<int, Basis> basis,
                                      const std::function<Vec(const Label&)>& d, int step) {
  std::unordered_map<Label, std::pair<int, std::size_t>> index;
  for (const auto& [n, b] : basis) {
    for (std::size_t i = 0; i < b.size(); ++i) index.emplace(b[i], std::make_pair(n, i));
  }
  std::map<int, Matrix> mats;
  for (const auto& [n, b] : basis) {
    auto target = basis.find(n - step);
    const std::size_t rows = target == basis.end() ? 0 : target->second.size();
    Matrix m(rows, b.size());
    for (std::size_t c = 0; c < b.size(); ++c) {
      for (const auto& [l, coef] : d(b[c])) {
        auto it = index.find(l);
        if (it == index.end() || it->second.first != n - step) {
          throw IllegalChain("differential of " + b[c].encode() + " leaves degree " +
                             std::to_string(n - step) + " at " + l.encode());
        }
        m(it->second.second, c) += coef;
      }
    }
    mats.emplace(n, std::move(m));
  }
  return make(std::move(name), std::move(basis), std::move(mats), step);
}

ChainComplex ChainComplex::unit() { return make("I", {{0, {Label()}}}, {}); }

ChainComplex ChainComplex::sphere(int n, std::int64_t rank, int step) {
  return standard(n, {rank}, {}, step);
}

std::vector<int> ChainComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [n, b] : impl_->basis) out.push_back(n);
  return out;
}

int ChainComplex::lo() const { return impl_->basis.empty() ? 0 : impl_->basis.begin()->first; }
int ChainComplex::hi() const { return impl_->basis.empty() ? -1 : impl_->basis.rbegin()->first; }

std::size_t ChainComplex::rank(int n) const {
  auto it = impl_->basis.find(n);
  return it == impl_->basis.end() ? 0 : it->second.size();
}

std::size_t ChainComplex::totalRank() const { return impl_->index.size(); }

const ChainComplex::Basis& ChainComplex::basis(int n) const {
  static const Basis empty;
  auto it = impl_->basis.find(n);
  return it == impl_->basis.end() ? empty : it->second;
}

std::optional<std::pair<int, std::size_t>> ChainComplex::locate(const Label& l) const {
  auto it = impl_->index.find(l);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

int ChainComplex::degreeOf(const Label& l) const {
  auto p = locate(l);
  if (!p) throw Error("label " + l.encode() + " is not a basis label of " + name());
  return p->first;
}

Matrix ChainComplex::d(int n) const {
  auto it = impl_->d.find(n);
  if (it != impl_->d.end()) return it->second;
  return Matrix(rank(n - step()), rank(n));
}

Vec ChainComplex::applyD(const Label& l) const {
  const auto [n, c] = *locate(l);
  auto it = impl_->d.find(n);
  Vec out;
  if (it == impl_->d.end()) return out;
  const Basis& target = basis(n - step());
  for (std::size_t r = 0; r < target.size(); ++r) {
    if (it->second(r, c) != 0) out.add(target[r], it->second(r, c));
  }
  return out;
}

bool sameComplex(const ChainComplex& a, const ChainComplex& b) {
  if (a.name() != b.name() || a.step() != b.step() || a.degrees() != b.degrees()) return false;
  for (int n : a.degrees()) {
    if (a.basis(n) != b.basis(n) || a.d(n) != b.d(n)) return false;
  }
  return true;
}

Space ChainComplex::space() const {
  std::vector<Label> all;
  for (const auto& [n, b] : impl_->basis) all.insert(all.end(), b.begin(), b.end());
  return Space::finite(name(), std::move(all));
}

LinMap ChainComplex::differential() const {
  const ChainComplex self = *this;
  const Space s = space();
  return LinMap(s, s, [self](const Label& l) { return self.applyD(l); });
}

ChainComplex ChainComplex::forget() const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->d.clear();
  return ChainComplex(impl);
}

std::optional<int> ChainComplex::squareZeroFailure() const {
  for (const auto& [n, m] : impl_->d) {
    auto next = impl_->d.find(n - step());
    if (next == impl_->d.end()) continue;
    if (!(next->second * m).isZero()) return n;
  }
  return std::nullopt;
}

nlohmann::json ChainComplex::toJson() const {
  nlohmann::json ranks = nlohmann::json::object();
  nlohmann::json diffs = nlohmann::json::object();
  for (const auto& [n, b] : impl_->basis) ranks[std::to_string(n)] = b.size();
  for (const auto& [n, m] : impl_->d) diffs[std::to_string(n)] = m.toJson();
  nlohmann::json j = {{"window", {lo(), hi()}}, {"ranks", ranks}, {"differentials", diffs}};
  if (step() != 1) j["step"] = step();
  return j;
}

ChainComplex ChainComplex::fromJson(const nlohmann::json& j, const std::string& family) {
  const int lo = j.at("window").at(0).get<int>();
  const int hi = j.at("window").at(1).get<int>();
  const int step = j.value("step", 1);
  std::vector<std::int64_t> ranks;
  for (int n = lo; n <= hi; ++n) {
    const auto key = std::to_string(n);
    ranks.push_back(j.at("ranks").contains(key) ? j.at("ranks").at(key).get<std::int64_t>() : 0);
  }
  auto rankAt = [&](int n) -> std::size_t {
    return n < lo || n > hi ? 0 : static_cast<std::size_t>(ranks[static_cast<std::size_t>(n - lo)]);
  };
  std::map<int, Matrix> d;
  if (j.contains("differentials")) {
    for (const auto& [key, mat] : j.at("differentials").items()) {
      const int n = std::stoi(key);
      if (n < lo || n > hi) throw IllegalChain("differential outside the window at " + key);
      d.emplace(n, Matrix::fromJson(mat, rankAt(n - step), rankAt(n)));
    }
  }
  return standard(lo, ranks, std::move(d), step, family);
}

// ---------------------------------------------------------------------------
// Chain maps

ChainMap ChainMap::fromLinear(const ChainComplex& source, const ChainComplex& target,
                              const std::function<Vec(const Label&)>& fn) {
  ChainMap f{source, target, {}};
  for (int n : source.degrees()) {
    const auto& b = source.basis(n);
    Matrix m(target.rank(n), b.size());
    for (std::size_t c = 0; c < b.size(); ++c) {
      for (const auto& [l, coef] : fn(b[c])) {
        auto p = target.locate(l);
        if (!p || p->first != n) {
          throw IllegalChain("map from " + source.name() + " sends " + b[c].encode() + " to " +
                             l.encode() + ", not in degree " + std::to_string(n) + " of " +
                             target.name());
        }
        m(p->second, c) += coef;
      }
    }
    f.components.emplace(n, std::move(m));
  }
  return f;
}

ChainMap ChainMap::identity(const ChainComplex& x) {
  return fromLinear(x, x, [](const Label& l) { return Vec(l); });
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  return fromLinear(source, target, [](const Label&) { return Vec(); });
}

Matrix ChainMap::at(int n) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  return Matrix(target.rank(n), source.rank(n));
}

Vec ChainMap::operator()(const Label& l) const {
  const auto p = source.locate(l);
  if (!p) throw Error("label " + l.encode() + " is not in " + source.name());
  const Matrix m = at(p->first);
  const auto& b = target.basis(p->first);
  Vec out;
  for (std::size_t r = 0; r < b.size(); ++r) {
    if (m(r, p->second) != 0) out.add(b[r], m(r, p->second));
  }
  return out;
}

LinMap ChainMap::asLinMap() const {
  const ChainMap self = *this;
  return LinMap(source.space(), target.space(), [self](const Label& l) { return self(l); });
}

std::optional<int> ChainMap::chainMapFailure() const {
  std::set<int> ns;
  for (int n : source.degrees()) ns.insert(n);
  for (int n : target.degrees()) ns.insert(n + source.step());
  for (int n : ns) {
    const int m = n - source.step();
    if (!(target.d(n) * at(n) == at(m) * source.d(n))) return n;
  }
  return std::nullopt;
}

ChainMap composeChainMaps(const ChainMap& f, const ChainMap& g) {
  if (!sameSpace(f.target.space(), g.source.space())) {
    throw SpaceMismatch("cannot compose chain maps through " + f.target.name() + " and " +
                        g.source.name());
  }
  ChainMap out{f.source, g.target, {}};
  for (int n : f.source.degrees()) out.components.emplace(n, g.at(n) * f.at(n));
  return out;
}

bool sameChainMap(const ChainMap& f, const ChainMap& g) {
  if (!sameSpace(f.source.space(), g.source.space()) ||
      !sameSpace(f.target.space(), g.target.space())) {
    return false;
  }
  for (int n : f.source.degrees()) {
    if (!(f.at(n) == g.at(n))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Monoidal closed structure

namespace {

int sign(long long e) { return e % 2 == 0 ? 1 : -1; }

std::string tensorName(const ChainComplex& a, const ChainComplex& b) {
  if (a.name() == "I") return b.name();
  if (b.name() == "I") return a.name();
  return a.name() + "⊗" + b.name();
}

struct TensorEntry {
  Label a, b;
  int i, j;
};

// Basis of A (x) B by total degree, with the factor data of each label.
std::map<int, ChainComplex::Basis> tensorBasis(const ChainComplex& a, const ChainComplex& b,
                                               std::unordered_map<Label, TensorEntry>* entries) {
  std::map<int, ChainComplex::Basis> basis;
  for (int i : a.degrees()) {
    for (int j : b.degrees()) {
      for (const auto& x : a.basis(i)) {
        for (const auto& y : b.basis(j)) {
          const Label l = Label::pair(x, y);
          basis[i + j].push_back(l);
          if (entries) entries->emplace(l, TensorEntry{x, y, i, j});
        }
      }
    }
  }
  return basis;
}

}  // namespace

ChainComplex tensorChains(const ChainComplex& a, const ChainComplex& b) {
  if (a.step() != b.step()) throw IllegalChain("tensor of complexes with different steps");
  auto entries = std::make_shared<std::unordered_map<Label, TensorEntry>>();
  auto basis = tensorBasis(a, b, entries.get());
  return ChainComplex::fromLinear(
      tensorName(a, b), std::move(basis),
      [=](const Label& l) {
        const TensorEntry& e = entries->at(l);
        Vec out = Vec::tensor(a.applyD(e.a), Vec(e.b));
        out += Int(sign(e.i)) * Vec::tensor(Vec(e.a), b.applyD(e.b));
        return out;
      },
      a.step());
}

ChainMap chainSymmetry(const ChainComplex& a, const ChainComplex& b) {
  std::unordered_map<Label, TensorEntry> entries;
  tensorBasis(a, b, &entries);
  return ChainMap::fromLinear(tensorChains(a, b), tensorChains(b, a), [&](const Label& l) {
    const TensorEntry& e = entries.at(l);
    return Vec(Label::pair(e.b, e.a), sign(static_cast<long long>(e.i) * e.j));
  });
}

namespace {

Label homLabel(int n, int j, std::size_t r, std::size_t c) {
  return Label::atom("hom", {n, j, static_cast<std::int64_t>(r), static_cast<std::int64_t>(c)});
}

}  // namespace

ChainComplex internalHom(const ChainComplex& b, const ChainComplex& c) {
  if (b.step() != 1 || c.step() != 1) throw IllegalChain("internal hom needs step-1 complexes");
  std::map<int, ChainComplex::Basis> basis;
  if (b.totalRank() > 0 && c.totalRank() > 0) {
    for (int n = c.lo() - b.hi(); n <= c.hi() - b.lo(); ++n) {
      for (int j : b.degrees()) {
        for (std::size_t r = 0; r < c.rank(j + n); ++r) {
          for (std::size_t col = 0; col < b.rank(j); ++col) basis[n].push_back(homLabel(n, j, r, col));
        }
      }
    }
  }
  return ChainComplex::fromLinear(
      "[" + b.name() + "," + c.name() + "]", std::move(basis), [=](const Label& l) {
        const auto& idx = l.index();
        const int n = static_cast<int>(idx[0]);
        const int j = static_cast<int>(idx[1]);
        const auto r = static_cast<std::size_t>(idx[2]);
        const auto col = static_cast<std::size_t>(idx[3]);
        Vec out;
        // d_C . E_{r,col} in Hom(B_j, C_{j+n-1}).
        const Matrix dc = c.d(j + n);
        for (std::size_t r2 = 0; r2 < dc.rows(); ++r2) {
          if (dc(r2, r) != 0) out.add(homLabel(n - 1, j, r2, col), dc(r2, r));
        }
        // -(-1)^n E_{r,col} . d_B in Hom(B_{j+1}, C_{j+n}).
        const Matrix db = b.d(j + 1);
        for (std::size_t c2 = 0; c2 < db.cols(); ++c2) {
          if (db(col, c2) != 0) out.add(homLabel(n - 1, j + 1, r, c2), -sign(n) * db(col, c2));
        }
        return out;
      });
}

std::map<int, Matrix> homComponents(const ChainComplex& b, const ChainComplex& c, int n,
                                    const Vec& element) {
  std::map<int, Matrix> out;
  for (int j : b.degrees()) out.emplace(j, Matrix(c.rank(j + n), b.rank(j)));
  for (const auto& [l, coef] : element) {
    const auto& idx = l.index();
    if (l.family() != "hom" || idx.size() != 4 || idx[0] != n) {
      throw Error("not an element of [B,C]_" + std::to_string(n) + ": " + l.encode());
    }
    out.at(static_cast<int>(idx[1]))(static_cast<std::size_t>(idx[2]),
                                      static_cast<std::size_t>(idx[3])) += coef;
  }
  return out;
}

Vec homElement(const ChainComplex& b, const ChainComplex& c, int n,
               const std::map<int, Matrix>& components) {
  Vec out;
  for (const auto& [j, m] : components) {
    if (m.rows() != c.rank(j + n) || m.cols() != b.rank(j)) {
      throw RankMismatch("hom component at " + std::to_string(j) + " has the wrong shape");
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t col = 0; col < m.cols(); ++col) {
        if (m(r, col) != 0) out.add(homLabel(n, j, r, col), m(r, col));
      }
    }
  }
  return out;
}

ChainMap curry(const ChainMap& f, const ChainComplex& a, const ChainComplex& b) {
  const ChainComplex& c = f.target;
  const ChainComplex hom = internalHom(b, c);
  return ChainMap::fromLinear(a, hom, [&](const Label& x) {
    const int i = a.degreeOf(x);
    Vec out;
    for (int j : b.degrees()) {
      const auto& bj = b.basis(j);
      for (std::size_t col = 0; col < bj.size(); ++col) {
        for (const auto& [l, coef] : f(Label::pair(x, bj[col]))) {
          out.add(homLabel(i, j, c.locate(l)->second, col), coef);
        }
      }
    }
    return out;
  });
}

ChainMap uncurry(const ChainMap& g, const ChainComplex& b, const ChainComplex& c) {
  const ChainComplex& a = g.source;
  std::unordered_map<Label, TensorEntry> entries;
  tensorBasis(a, b, &entries);
  return ChainMap::fromLinear(tensorChains(a, b), c, [&](const Label& l) {
    const TensorEntry& e = entries.at(l);
    const std::size_t col = b.locate(e.b)->second;
    Vec out;
    for (const auto& [h, coef] : g(e.a)) {
      const auto& idx = h.index();
      if (idx[1] != e.j || static_cast<std::size_t>(idx[3]) != col) continue;
      out.add(c.basis(e.i + e.j)[static_cast<std::size_t>(idx[2])], coef);
    }
    return out;
  });
}

ChainMap evaluation(const ChainComplex& b, const ChainComplex& c) {
  return uncurry(ChainMap::identity(internalHom(b, c)), b, c);
}

// ---------------------------------------------------------------------------
// Adjoint triple

namespace {

// Basis of the two-slot complexes: slot Left holds M_{n+leftShift},
// slot Right holds M_{n+rightShift}.
std::map<int, ChainComplex::Basis> twoSlotBasis(const ChainComplex& m, int leftShift, int rightShift) {
  std::map<int, ChainComplex::Basis> basis;
  std::set<int> ns;
  for (int k : m.degrees()) {
    ns.insert(k - leftShift);
    ns.insert(k - rightShift);
  }
  for (int n : ns) {
    for (const auto& x : m.basis(n + leftShift)) basis[n].push_back(Label::left(x));
    for (const auto& y : m.basis(n + rightShift)) basis[n].push_back(Label::right(y));
  }
  return basis;
}

Vec blockDifferential(const Label& l) {
  if (l.kind() == Label::Kind::Right) return Vec(Label::left(l.inner()));
  return Vec();
}

Vec mapInside(const ChainMap& f, const Label& l) {
  Vec out;
  for (const auto& [x, c] : f(l.inner())) {
    out.add(l.kind() == Label::Kind::Left ? Label::left(x) : Label::right(x), c);
  }
  return out;
}

void requireStepOne(const ChainComplex& x) {
  if (x.step() != 1) throw IllegalChain("the adjoint triple is defined for step-1 complexes");
}

}  // namespace

ChainComplex leftAdjoint(const ChainComplex& m) {
  requireStepOne(m);
  return ChainComplex::fromLinear("L(" + m.name() + ")", twoSlotBasis(m, 1, 0), blockDifferential);
}

ChainComplex rightAdjoint(const ChainComplex& m) {
  requireStepOne(m);
  return ChainComplex::fromLinear("R(" + m.name() + ")", twoSlotBasis(m, 0, -1), blockDifferential);
}

ChainMap leftAdjointMap(const ChainMap& f) {
  return ChainMap::fromLinear(leftAdjoint(f.source), leftAdjoint(f.target),
                              [&](const Label& l) { return mapInside(f, l); });
}

ChainMap rightAdjointMap(const ChainMap& f) {
  return ChainMap::fromLinear(rightAdjoint(f.source), rightAdjoint(f.target),
                              [&](const Label& l) { return mapInside(f, l); });
}

ChainMap unitLU(const ChainComplex& m) {
  return ChainMap::fromLinear(m.forget(), leftAdjoint(m).forget(),
                              [](const Label& l) { return Vec(Label::right(l)); });
}

ChainMap counitLU(const ChainComplex& x) {
  return ChainMap::fromLinear(leftAdjoint(x.forget()), x, [&](const Label& l) {
    if (l.kind() == Label::Kind::Left) return x.applyD(l.inner());
    return Vec(l.inner());
  });
}

ChainMap unitUR(const ChainComplex& x) {
  return ChainMap::fromLinear(x, rightAdjoint(x.forget()), [&](const Label& l) {
    Vec out(Label::left(l));
    for (const auto& [y, c] : x.applyD(l)) out.add(Label::right(y), c);
    return out;
  });
}

ChainMap counitUR(const ChainComplex& m) {
  return ChainMap::fromLinear(rightAdjoint(m).forget(), m.forget(), [](const Label& l) {
    return l.kind() == Label::Kind::Left ? Vec(l.inner()) : Vec();
  });
}

namespace {

Verdict chainMapVerdict(const ChainMap& f) {
  const LinMap lhs = composeMaps(f.asLinMap(), f.target.differential());
  const LinMap rhs = composeMaps(f.source.differential(), f.asLinMap());
  return equalOnWindow(lhs, rhs, 0);
}

Verdict sameMapVerdict(const ChainMap& f, const ChainMap& g) {
  return equalOnWindow(f.asLinMap(), g.asLinMap(), 0);
}

Verdict squareZeroVerdict(const ChainComplex& x) {
  const LinMap d = x.differential();
  return equalOnWindow(composeMaps(d, d), LinMap::zero(x.space(), x.space()), 0);
}

// Forgets the differential on both ends of a map.
ChainMap forgetMap(const ChainMap& f) {
  return ChainMap{f.source.forget(), f.target.forget(), f.components};
}

}  // namespace

LawReport checkAdjointTriple(const ChainComplex& m, const ChainComplex& x) {
  const ChainComplex gm = m.forget();
  const ChainComplex ux = x.forget();
  LawReport r{"adjoint triple L⊣U⊣R", {}};
  r.laws.push_back({"L(M) square-zero", squareZeroVerdict(leftAdjoint(gm))});
  r.laws.push_back({"R(M) square-zero", squareZeroVerdict(rightAdjoint(gm))});
  r.laws.push_back({"L⊣U counit is a chain map", chainMapVerdict(counitLU(x))});
  r.laws.push_back({"U⊣R unit is a chain map", chainMapVerdict(unitUR(x))});

  // epsilon_{LM} . L(eta_M) = id_{LM}
  const ChainComplex lm = leftAdjoint(gm);
  r.laws.push_back({"L⊣U triangle on L(M)",
                    sameMapVerdict(composeChainMaps(leftAdjointMap(unitLU(gm)), counitLU(lm)),
                                   ChainMap::identity(lm))});
  // U(epsilon_X) . eta_{UX} = id_{UX}
  r.laws.push_back({"L⊣U triangle on U(X)",
                    sameMapVerdict(composeChainMaps(unitLU(ux), forgetMap(counitLU(x))),
                                   ChainMap::identity(ux))});
  // epsilon_{UX} . U(eta_X) = id_{UX}
  r.laws.push_back({"U⊣R triangle on U(X)",
                    sameMapVerdict(composeChainMaps(forgetMap(unitUR(x)), counitUR(ux)),
                                   ChainMap::identity(ux))});
  // R(epsilon_M) . eta_{RM} = id_{RM}
  const ChainComplex rm = rightAdjoint(gm);
  r.laws.push_back({"U⊣R triangle on R(M)",
                    sameMapVerdict(composeChainMaps(unitUR(rm), rightAdjointMap(counitUR(gm))),
                                   ChainMap::identity(rm))});
  return r;
}

// ---------------------------------------------------------------------------
// Comonad comparison

ComoduleBimonoid comonadHopfRing() {
  const Coelement c = signCoelement(Bicharacter{{-1}});
  return buildDifferentialHopf(differentialComodule(GradedCarrier{1, {{{1}, 0}}}, c), c);
}

namespace {

// (x, y) -> 1 (x) x + d (x) y from U R M to H (x) M.
LinMap comonadIso(const ComoduleBimonoid& hb, const ChainComplex& m) {
  const ChainComplex rm = rightAdjoint(m.forget());
  const Label one = hopfUnitLabel();
  const Label d = hopfCarrierLabel(Label::atom("d", {1, 0}));
  return LinMap(rm.space(), tensorSpace(hb.h.carrier, m.space()), [=](const Label& l) {
    return Vec(Label::pair(l.kind() == Label::Kind::Left ? one : d, l.inner()));
  });
}

}  // namespace

LawReport comonadComparison(const ChainComplex& x, const std::vector<ChainMap>& samples) {
  requireStepOne(x);
  const ComoduleBimonoid hb = comonadHopfRing();
  const Bimonoid& h = hb.h;
  const ChainComplex m = x.forget();
  const ChainComplex rm = rightAdjoint(m);
  LawReport r{"comonad U R vs H⊗- on " + x.name(), {}};

  // Ranks: (U R X)_n = X_n + X_{n-1} against (H (x) U X)_n = X_n + D_1 (x) X_{n-1}.
  Verdict ranks;
  std::set<int> ns;
  for (int n : m.degrees()) {
    ns.insert(n);
    ns.insert(n + 1);
  }
  for (int n : ns) {
    ++ranks.instances;
    const std::size_t rhs = m.rank(n) + m.rank(n - 1);
    if (rm.rank(n) != rhs && ranks.equal) {
      ranks.equal = false;
      ranks.counterexample = Counterexample{Label::atom("degree", {n}), Vec(Label(), Int(rm.rank(n))),
                                            Vec(Label(), Int(rhs))};
    }
  }
  r.laws.push_back({"component ranks", ranks});

  const LinMap phi = comonadIso(hb, m);
  const LinMap idM = LinMap::identity(m.space());
  // Counit: epsilon_{UX} against epsilon_H (x) 1.
  r.laws.push_back({"comonad counit", equalOnWindow(counitUR(m).asLinMap(),
                                                    composeMaps(phi, tensorMaps(h.epsilon, idM)), 0)});
  // Comultiplication: U eta_{R M} against Delta_H (x) 1, through phi twice.
  const LinMap phi2 = composeMaps(comonadIso(hb, rm), tensorMaps(LinMap::identity(h.carrier), phi));
  const LinMap lhs = composeMaps(forgetMap(unitUR(rm)).asLinMap(), phi2);
  r.laws.push_back(
      {"comonad comultiplication", equalOnWindow(lhs, composeMaps(phi, tensorMaps(h.delta, idM)), 0)});

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const ChainMap& f = samples[k];
    if (!sameSpace(f.source.space(), x.space())) {
      throw SpaceMismatch("naturality sample does not start at " + x.name());
    }
    const ChainComplex target = f.target.forget();
    const LinMap viaR = composeMaps(rightAdjointMap(forgetMap(f)).asLinMap(), comonadIso(hb, target));
    const LinMap viaH = composeMaps(phi, tensorMaps(LinMap::identity(h.carrier), f.asLinMap()));
    r.laws.push_back({"naturality " + std::to_string(k), equalOnWindow(viaR, viaH, 0)});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Bicomplexes

std::size_t Bicomplex::rank(int n, int m) const {
  auto it = ranks.find({n, m});
  return it == ranks.end() ? 0 : static_cast<std::size_t>(it->second);
}

Matrix Bicomplex::dAt(int n, int m) const {
  auto it = d.find({n, m});
  return it != d.end() ? it->second : Matrix(rank(n - 1, m), rank(n, m));
}

Matrix Bicomplex::dPrimeAt(int n, int m) const {
  auto it = dPrime.find({n, m});
  return it != dPrime.end() ? it->second : Matrix(rank(n - shift(), m - 1), rank(n, m));
}

Label Bicomplex::basisLabel(int n, int m, std::size_t i) const {
  return Label::atom("e", {n, m, static_cast<std::int64_t>(i)});
}

namespace {

GradedModule bigradedModule(const Bicomplex& b) {
  GradedModule g{2, {}, "e"};
  for (const auto& [nm, r] : b.ranks) g.components.push_back({{nm.first, nm.second}, r});
  return g.normalized();
}

Vec applyBlock(const Bicomplex& b, const Matrix& m, int n, int m2, std::size_t col) {
  Vec out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m(r, col) != 0) out.add(b.basisLabel(n, m2, r), m(r, col));
  }
  return out;
}

}  // namespace

Space Bicomplex::space() const { return sigmaFunctor(bigradedModule(*this)); }

SecondDifferentialResult secondDifferential(const Bicomplex& b) {
  if (b.kappa != 1 && b.kappa != -1) throw Error("kappa must be +1 or -1");
  if (b.s != 1 && b.s != -1) throw Error("s must be +1 or -1");
  const int sh = b.shift();

  std::set<std::pair<int, int>> cells;
  for (const auto& [nm, r] : b.ranks) {
    if (r < 0) throw IllegalChain("negative rank");
    if (r > 0) cells.insert(nm);
  }
  auto checkShape = [&](const std::map<std::pair<int, int>, Matrix>& ms, int dn, int dm,
                        const char* what) {
    for (const auto& [nm, mat] : ms) {
      if (mat.rows() != b.rank(nm.first - dn, nm.second - dm) ||
          mat.cols() != b.rank(nm.first, nm.second)) {
        throw IllegalChain(std::string(what) + " at (" + std::to_string(nm.first) + "," +
                           std::to_string(nm.second) + ") has the wrong shape");
      }
    }
  };
  checkShape(b.d, 1, 0, "d");
  checkShape(b.dPrime, sh, 1, "d'");

  for (const auto& [n, m] : cells) {
    if (!(b.dAt(n - 1, m) * b.dAt(n, m)).isZero()) {
      throw IllegalChain("d∘d != 0 at (" + std::to_string(n) + "," + std::to_string(m) + ")");
    }
    if (!(b.dPrimeAt(n - sh, m - 1) * b.dPrimeAt(n, m)).isZero()) {
      throw IllegalChain("d'∘d' != 0 at (" + std::to_string(n) + "," + std::to_string(m) + ")");
    }
  }
  for (const auto& [n, m] : cells) {
    const Matrix dpd = b.dPrimeAt(n - 1, m) * b.dAt(n, m);
    const Matrix ddp = b.dAt(n - sh, m - 1) * b.dPrimeAt(n, m);
    const bool ok = b.kappa == -1 ? ddp == dpd : dpd == -ddp;
    if (!ok) {
      throw SquareViolation(std::string(b.kappa == -1 ? "d d' != d' d" : "d' d != -d d'") + " at (" +
                                std::to_string(n) + "," + std::to_string(m) + ")",
                            n, m);
    }
  }

  const Coelement c = signCoelement(Bicharacter{{-1, b.kappa}});
  const ComoduleBimonoid hb =
      buildDifferentialHopf(differentialComodule(GradedCarrier{2, {{{sh, 1}, 0}}}, c), c);
  const GradedModule gm = bigradedModule(b);
  const Comodule bc = gradedToComodule(gm, c.ring);
  const Space bs = bc.carrier();
  const Label one = hopfUnitLabel();
  const Label delta = hopfCarrierLabel(Label::atom("d", {sh, 1, 0}));

  auto located = [](const Label& l) {
    const auto& idx = l.index();
    return std::make_tuple(static_cast<int>(idx[0]), static_cast<int>(idx[1]),
                           static_cast<std::size_t>(idx[2]));
  };
  LinMap dv(bs, bs, [=](const Label& l) {
    auto [n, m, i] = located(l);
    return applyBlock(b, b.dAt(n, m), n - 1, m, i);
  });
  LinMap chi(bs, tensorSpace(hb.h.carrier, bs), [=](const Label& l) {
    auto [n, m, i] = located(l);
    Vec out(Label::pair(one, l));
    out += Vec::tensor(Vec(delta), applyBlock(b, b.dPrimeAt(n, m), n - sh, m - 1, i));
    return out;
  });
  const Comodule overH = Comodule::unchecked(hb.h, bs, chi);

  LawReport rep = checkComoduleLaws(overH, 0);
  rep.subject = "second differential";
  rep.laws.push_back({"coaction is graded",
                      checkComoduleMorphism(chi, bc, tensorComodule(hb.carrier, bc), 0)});
  // H has zero differential, so d on H (x) B is (-1)^{|h|_n} h (x) db.
  LinMap dHB(tensorSpace(hb.h.carrier, bs), tensorSpace(hb.h.carrier, bs), [=](const Label& l) {
    auto [h, x] = l.split(1);
    const int sgn = h.kind() == Label::Kind::Left ? sign(sh) : 1;
    return Int(sgn) * Vec::tensor(Vec(h), dv(x));
  });
  rep.laws.push_back({"coaction commutes with d", equalOnWindow(composeMaps(dv, chi),
                                                                composeMaps(chi, dHB), 0)});
  requireLaws(rep);
  return SecondDifferentialResult{hb, overH, dv, rep};
}

// ---------------------------------------------------------------------------
// Random generators

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random unimodular P with its inverse, as products of elementary moves.
std::pair<Matrix, Matrix> randomUnimodular(std::mt19937_64& rng, std::size_t n) {
  Matrix p = Matrix::identity(n);
  Matrix inv = Matrix::identity(n);
  if (n < 2) {
    if (n == 1 && uniform(rng, 0, 1) == 1) {
      p(0, 0) = -1;
      inv(0, 0) = -1;
    }
    return {p, inv};
  }
  const int moves = uniform(rng, 0, 2 * static_cast<int>(n));
  for (int k = 0; k < moves; ++k) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    const int c = uniform(rng, -2, 2);
    // Row i += c * row j on p; column j -= c * column i on the inverse.
    for (std::size_t col = 0; col < n; ++col) p(i, col) += c * p(j, col);
    for (std::size_t row = 0; row < n; ++row) inv(row, j) -= c * inv(row, i);
  }
  return {p, inv};
}

}  // namespace

ChainComplex randomComplex(std::mt19937_64& rng, int maxLength, int maxRank, int step) {
  const int length = uniform(rng, 1, maxLength);
  const int lo = uniform(rng, -3, 3);
  const int hi = lo + length - 1;
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(length), 0);
  // Disks Z -> Z from degree n+1 to n, then spheres to fill up.
  std::vector<std::pair<int, std::size_t>> disks;  // (upper degree, index pair start)
  std::map<int, Matrix> d;
  std::vector<std::vector<std::pair<std::size_t, int>>> diskAt(static_cast<std::size_t>(length));
  for (int n = lo + 1; n <= hi; ++n) {
    const auto up = static_cast<std::size_t>(n - lo);
    const auto down = up - 1;
    const int room = static_cast<int>(std::min(maxRank - ranks[up], maxRank - ranks[down]));
    const int k = uniform(rng, 0, std::max(0, std::min(room, 2)));
    for (int t = 0; t < k; ++t) {
      diskAt[up].push_back({static_cast<std::size_t>(ranks[up]), n});
      diskAt[down].push_back({static_cast<std::size_t>(ranks[down]), -n});
      ++ranks[up];
      ++ranks[down];
    }
  }
  for (auto& r : ranks) r += uniform(rng, 0, static_cast<int>(maxRank - r));

  // Build the disk differential before conjugation.
  for (int n = lo + 1; n <= hi; ++n) {
    const auto up = static_cast<std::size_t>(n - lo);
    const auto down = up - 1;
    Matrix m(static_cast<std::size_t>(ranks[down]), static_cast<std::size_t>(ranks[up]));
    const auto& ups = diskAt[up];
    const auto& downs = diskAt[down];
    std::size_t u = 0;
    for (const auto& [col, tag] : ups) {
      if (tag != n) continue;
      // Pair with the u-th bottom end of a disk starting at n.
      std::size_t seen = 0;
      for (const auto& [row, tag2] : downs) {
        if (tag2 != -n) continue;
        if (seen++ == u) {
          m(row, col) = 1;
          break;
        }
      }
      ++u;
    }
    d.emplace(n, std::move(m));
  }

  std::vector<std::pair<Matrix, Matrix>> conj;
  for (int n = lo; n <= hi; ++n) {
    conj.push_back(randomUnimodular(rng, static_cast<std::size_t>(ranks[static_cast<std::size_t>(n - lo)])));
  }
  for (auto& [n, m] : d) {
    const auto up = static_cast<std::size_t>(n - lo);
    m = conj[up - 1].first * m * conj[up].second;
  }
  ChainComplex x = ChainComplex::standard(lo, ranks, std::move(d), 1);
  if (step == 1) return x;
  // Reflect degrees: the differential then raises degree.
  std::vector<std::int64_t> reflected(ranks.rbegin(), ranks.rend());
  std::map<int, Matrix> rd;
  for (int n : x.degrees()) {
    if (x.rank(n - 1) > 0) rd.emplace(-n, x.d(n));
  }
  return ChainComplex::standard(-hi, reflected, std::move(rd), -1);
}

ChainMap randomGradedMap(std::mt19937_64& rng, const ChainComplex& source, const ChainComplex& target) {
  ChainMap f{source, target, {}};
  for (int n : source.degrees()) {
    Matrix m(target.rank(n), source.rank(n));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = uniform(rng, -3, 3);
    }
    f.components.emplace(n, std::move(m));
  }
  return f;
}

ChainMap randomChainMap(std::mt19937_64& rng, const ChainComplex& source, const ChainComplex& target) {
  if (source.step() != target.step()) throw IllegalChain("chain map between different steps");
  const int st = source.step();
  // h_n : source_n -> target_{n+st}
  std::map<int, Matrix> h;
  std::set<int> ns;
  for (int n : source.degrees()) ns.insert(n);
  for (int n : target.degrees()) ns.insert(n);
  for (int n : ns) {
    Matrix m(target.rank(n + st), source.rank(n));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = uniform(rng, -2, 2);
    }
    h.emplace(n, std::move(m));
  }
  auto hAt = [&](int n) {
    auto it = h.find(n);
    return it != h.end() ? it->second : Matrix(target.rank(n + st), source.rank(n));
  };
  ChainMap f{source, target, {}};
  for (int n : source.degrees()) {
    f.components.emplace(n, target.d(n + st) * hAt(n) + hAt(n - st) * source.d(n));
  }
  return f;
}

Bicomplex randomBicomplex(std::mt19937_64& rng, int kappa, int s) {
  const ChainComplex x = randomComplex(rng, 4, 2);
  const ChainComplex y = randomComplex(rng, 3, 2);
  Bicomplex b;
  b.kappa = kappa;
  b.s = s;
  const int sh = b.shift();
  // B_{n,m} = X_{n - sh m} (x) Y_m with basis ordered (x, y).
  auto cell = [&](int k, int m) { return std::make_pair(k + sh * m, m); };
  for (int k : x.degrees()) {
    for (int m : y.degrees()) b.ranks[cell(k, m)] = static_cast<std::int64_t>(x.rank(k) * y.rank(m));
  }
  auto kron = [](const Matrix& a, const Matrix& c) {
    Matrix out(a.rows() * c.rows(), a.cols() * c.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t k = 0; k < c.rows(); ++k)
          for (std::size_t l = 0; l < c.cols(); ++l) out(i * c.rows() + k, j * c.cols() + l) = a(i, j) * c(k, l);
    return out;
  };
  for (int k : x.degrees()) {
    for (int m : y.degrees()) {
      const auto nm = cell(k, m);
      b.d.emplace(nm, kron(x.d(k), Matrix::identity(y.rank(m))));
      const int sgn = kappa == -1 ? 1 : sign(k);
      b.dPrime.emplace(nm, kron(Matrix::identity(x.rank(k)), y.d(m)).scaled(sgn));
    }
  }
  return b;
}

}  // namespace hopf
