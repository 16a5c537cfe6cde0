#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopf/diffhopf.hpp"
#include "hopf/laws.hpp"
#include "json.hpp"

namespace hopf {

/// Dense integer matrix; column c is the image of the c-th source basis
/// vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix fromRows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Int& c) const;
  bool isZero() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Row-major nested arrays; entries must fit in 64 bits.
  nlohmann::json toJson() const;
  static Matrix fromJson(const nlohmann::json& j, std::size_t rows, std::size_t cols);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Bounded complex of free f.g. Z-modules with an explicit label basis in
/// each degree. The differential goes from degree n to degree n - step
/// (step = 1 for chain complexes, -1 for cochain-style complexes).
class ChainComplex {
 public:
  using Basis = std::vector<Label>;

  /// Throws IllegalChain on mismatched shapes, repeated labels or d∘d != 0.
  static ChainComplex make(std::string name, std::map<int, Basis> basis, std::map<int, Matrix> d,
                           int step = 1);
  /// Labels family[n, i]; degrees lo, lo+1, ... with the given ranks.
  static ChainComplex standard(int lo, const std::vector<std::int64_t>& ranks,
                               std::map<int, Matrix> d, int step = 1, const std::string& family = "e");
  /// Differential given on basis labels.
  static ChainComplex fromLinear(std::string name, std::map<int, Basis> basis,
                                 const std::function<Vec(const Label&)>& d, int step = 1);
  /// Z in degree 0 spanned by the unit label.
  static ChainComplex unit();
  /// `rank` copies of Z in degree n, zero differential.
  static ChainComplex sphere(int n, std::int64_t rank = 1, int step = 1);

  const std::string& name() const { return impl_->name; }
  int step() const { return impl_->step; }
  /// Degrees with nonzero rank, ascending.
  std::vector<int> degrees() const;
  int lo() const;
  int hi() const;
  std::size_t rank(int n) const;
  std::size_t totalRank() const;
  const Basis& basis(int n) const;
  /// (degree, position) of a basis label.
  std::optional<std::pair<int, std::size_t>> locate(const Label& l) const;
  int degreeOf(const Label& l) const;

  /// Matrix of d: degree n -> degree n - step.
  Matrix d(int n) const;
  Vec applyD(const Label& l) const;

  Space space() const;
  LinMap differential() const;
  /// Same basis and name, zero differential (the forgetful functor U).
  ChainComplex forget() const;
  /// First degree n with d∘d != 0 at n, if any.
  std::optional<int> squareZeroFailure() const;

  /// {window:[lo,hi], ranks:{n:r}, differentials:{n:matrix}, step?} for
  /// complexes with standard labels.
  nlohmann::json toJson() const;
  static ChainComplex fromJson(const nlohmann::json& j, const std::string& family = "e");

 private:
  struct Impl {
    std::string name;
    int step = 1;
    std::map<int, Basis> basis;
    std::map<int, Matrix> d;
    std::unordered_map<Label, std::pair<int, std::size_t>> index;
  };
  explicit ChainComplex(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Same name, step, bases and differentials.
bool sameComplex(const ChainComplex& a, const ChainComplex& b);

/// Degree-preserving map of complexes, f_n given as matrices
/// rank(target, n) x rank(source, n).
struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  std::map<int, Matrix> components;

  static ChainMap fromLinear(const ChainComplex& source, const ChainComplex& target,
                             const std::function<Vec(const Label&)>& fn);
  static ChainMap identity(const ChainComplex& x);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  Matrix at(int n) const;
  Vec operator()(const Label& l) const;
  LinMap asLinMap() const;
  /// First degree where d∘f != f∘d, if any.
  std::optional<int> chainMapFailure() const;
};

/// g after f.
ChainMap composeChainMaps(const ChainMap& f, const ChainMap& g);
bool sameChainMap(const ChainMap& f, const ChainMap& g);

/// (A (x) B)_n = sum_{i+j=n} A_i (x) B_j, labels (a * b),
/// d(a (x) b) = da (x) b + (-1)^i a (x) db.
ChainComplex tensorChains(const ChainComplex& a, const ChainComplex& b);

/// a (x) b -> (-1)^(ij) b (x) a.
ChainMap chainSymmetry(const ChainComplex& a, const ChainComplex& b);

/// [B, C]_n = prod_j Hom(B_j, C_{j+n}) with basis hom[n, j, r, c] (matrix
/// unit r <- c) and (df)_j = d f_j - (-1)^n f_{j-1} d. Both complexes must
/// have step 1.
ChainComplex internalHom(const ChainComplex& b, const ChainComplex& c);

/// The components f_j of an element of [B, C]_n.
std::map<int, Matrix> homComponents(const ChainComplex& b, const ChainComplex& c, int n,
                                    const Vec& element);
Vec homElement(const ChainComplex& b, const ChainComplex& c, int n,
               const std::map<int, Matrix>& components);

/// curry(f)(a)_j(b) = f(a (x) b); no signs are introduced.
ChainMap curry(const ChainMap& f, const ChainComplex& a, const ChainComplex& b);
/// uncurry(g)(a (x) b) = g(a)_j(b) for b in degree j.
ChainMap uncurry(const ChainMap& g, const ChainComplex& b, const ChainComplex& c);
/// [B, C] (x) B -> C, the uncurrying of the identity.
ChainMap evaluation(const ChainComplex& b, const ChainComplex& c);

// Adjoint triple L -| U -| R between graded modules (complexes whose
// differential is ignored) and complexes.

/// L(M)_n = M_{n+1} (+) M_n, labels L(m) and R(m), d(x, y) = (y, 0).
ChainComplex leftAdjoint(const ChainComplex& m);
/// R(M)_n = M_n (+) M_{n-1}, labels L(m) and R(m), d(x, y) = (y, 0).
ChainComplex rightAdjoint(const ChainComplex& m);
ChainMap leftAdjointMap(const ChainMap& f);
ChainMap rightAdjointMap(const ChainMap& f);

/// m -> (0, m).
ChainMap unitLU(const ChainComplex& m);
/// (x, y) -> dx + y.
ChainMap counitLU(const ChainComplex& x);
/// x -> (x, dx).
ChainMap unitUR(const ChainComplex& x);
/// (x, y) -> x.
ChainMap counitUR(const ChainComplex& m);

/// Square-zero of L(M), R(M), chain-map conditions for the units and
/// counits, and the four triangle identities.
LawReport checkAdjointTriple(const ChainComplex& m, const ChainComplex& x);

/// The Hopf ring H = I (+) D with D = Z in degree 1 over the grading ring,
/// used by the comonad comparison.
ComoduleBimonoid comonadHopfRing();

/// Compares the comonad U R on U X with H (x) - through
/// (x, y) -> 1 (x) x + d (x) y: ranks, counit, comultiplication, and
/// naturality against each sample chain map out of X.
LawReport comonadComparison(const ChainComplex& x, const std::vector<ChainMap>& samples = {});

/// Bigraded complex with vertical d: B_{n,m} -> B_{n-1,m} and second
/// differential d': B_{n,m} -> B_{n-shift,m-1}, where shift is 0 for
/// kappa = -1 and s for kappa = +1. Labels e[n, m, i].
struct Bicomplex {
  std::map<std::pair<int, int>, std::int64_t> ranks;
  std::map<std::pair<int, int>, Matrix> d;
  std::map<std::pair<int, int>, Matrix> dPrime;
  int kappa = -1;
  int s = 1;

  int shift() const { return kappa == -1 ? 0 : s; }
  std::size_t rank(int n, int m) const;
  Matrix dAt(int n, int m) const;
  Matrix dPrimeAt(int n, int m) const;
  Label basisLabel(int n, int m, std::size_t i) const;
  Space space() const;
};

struct SecondDifferentialResult {
  ComoduleBimonoid hopf;  // I (+) D over the rank-2 grading ring
  Comodule coaction;      // b -> 1 (x) b + d (x) d'b over H
  LinMap differential;    // the vertical d on the total space
  LawReport legality;
};

/// Checks d^2 = 0 and d'^2 = 0 (IllegalChain), the square law
/// (kappa = -1: d d' = d' d, kappa = +1: d' d = -d d'; SquareViolation at
/// the first offending (n, m)), then builds the H-coaction encoding d' and
/// verifies its comodule laws and that it commutes with the differentials.
SecondDifferentialResult secondDifferential(const Bicomplex& b);

// Random generators (seeded, deterministic).

/// Sums of disks and spheres on a window of length <= maxLength, ranks
/// <= maxRank, conjugated by random unimodular matrices.
ChainComplex randomComplex(std::mt19937_64& rng, int maxLength = 7, int maxRank = 4, int step = 1);
/// Null-homotopic map d h + h d for a random degree-one h.
ChainMap randomChainMap(std::mt19937_64& rng, const ChainComplex& source, const ChainComplex& target);
/// Graded map with random entries (ignores differentials).
ChainMap randomGradedMap(std::mt19937_64& rng, const ChainComplex& source, const ChainComplex& target);
/// Random bicomplex satisfying the square law for (kappa, s).
Bicomplex randomBicomplex(std::mt19937_64& rng, int kappa, int s);

}  // namespace hopf
