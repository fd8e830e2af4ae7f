// The associative algebra of N x N matrix quantum pseudodifferential
// operators and its Lie bracket.
//
// Elements are finite sums of monomials c * z^k * T^m * E[i,j], where T is
// the q-dilation operator (T f(z) = f(qz)) and E[i,j] the matrix units.
// The product follows from the conjugation rule T^m z^k = q^{km} z^k T^m:
//
//   (c1 z^k1 T^m1 E[i1,j1]) (c2 z^k2 T^m2 E[i2,j2])
//       = delta(j1,i2) c1 c2 q^{k2*m1} z^{k1+k2} T^{m1+m2} E[i1,j2].
//
// The principal Z-gradation assigns weight k*N + i - j to each monomial.

#pragma once

#include "qpdo/rational.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace qpdo {

/// Exponent/index key of a monomial z^k T^m E[i,j].  Ordered
/// lexicographically; this fixes the canonical term order.
struct MonoKey {
  long k = 0;
  long m = 0;
  int i = 1;
  int j = 1;
  auto operator<=>(const MonoKey&) const = default;
};

inline long weight_of(int N, const MonoKey& key) {
  return key.k * N + key.i - key.j;
}

/// Raw term for canonicalize(): coefficient plus exponents/indices.
struct RawTerm {
  FieldElement coeff;
  long k = 0;
  long m = 0;
  int i = 1;
  int j = 1;
};

class Element {
 public:
  explicit Element(int N);

  static Element zero(int N) { return Element(N); }
  /// Single monomial; throws std::invalid_argument on out-of-range indices.
  static Element monomial(int N, const FieldElement& c, long k, long m, int i, int j);
  static Element matrix_unit(int N, int i, int j) {
    return monomial(N, FieldElement(1), 0, 0, i, j);
  }
  static Element identity(int N);
  /// c * identity: the embedding of scalars.
  static Element scalar(int N, const FieldElement& c);
  /// c * z^k T^m * identity.
  static Element scalar_op(int N, const FieldElement& c, long k, long m);
  /// Merge like terms and drop zeros; idempotent.
  static Element canonicalize(int N, const std::vector<RawTerm>& raw);

  int size() const { return N_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MonoKey, FieldElement>& terms() const { return terms_; }
  FieldElement coeff(const MonoKey& key) const;

  Element operator-() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element scaled(const FieldElement& c) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }

  bool operator==(const Element& o) const {
    return N_ == o.N_ && terms_ == o.terms_;
  }

  /// Integer powers.  Negative powers are defined only for invertible
  /// operators of the form c * z^k T^m * identity.
  Element pow(long e) const;

  /// Decomposition into principal-gradation bands; absent bands are omitted.
  std::map<long, Element> graded_decompose() const;
  /// Weight of a homogeneous element; returns false when mixed (zero counts
  /// as homogeneous with unset weight).
  bool homogeneous_weight(long& w) const;

  /// plus = positive bands, zero = band 0, minus = negative bands.
  struct TriangularSplit triangular_split() const;

  /// Canonical text form: '+'/'-'-joined monomials in term order, each
  /// printed as c*z^k*T^m*E[i,j] with trivial factors omitted.  The output
  /// re-parses under the expression grammar.
  std::string str() const;

  /// Adds c * z^k T^m E[i,j] in place (drops the term if it cancels).
  void add_term(const FieldElement& c, long k, long m, int i, int j);

 private:
  int N_;
  std::map<MonoKey, FieldElement> terms_;
};

struct TriangularSplit {
  Element plus, zero, minus;
};

/// Associative product; throws std::invalid_argument on size mismatch.
Element multiply(const Element& a, const Element& b);
/// Commutator multiply(a,b) - multiply(b,a).
Element bracket(const Element& a, const Element& b);

}  // namespace qpdo
