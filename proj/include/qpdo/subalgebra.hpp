// Lie subalgebras fixed by minus sigma: projection onto the fixed space,
// the explicit generator families, windowed graded bases computed by exact
// Gaussian elimination over Q(v), and bracket-closure verification.
//
// Every basis claim is relative to explicit z/T cutoffs; each weight band
// of the full algebra is infinite-dimensional through unbounded T-powers,
// so the enumeration is windowed to stay decidable.

#pragma once

#include "qpdo/involution.hpp"

#include <map>
#include <vector>

namespace qpdo {

struct FixedSubalgebraSpec {
  InvolutionParams params;
  long zmin = -1, zmax = 1;  // range of z-exponents k
  long tmin = -1, tmax = 1;  // range of T-exponents m
};

/// Which generator family to instantiate.  The M/B/C/D tags apply
/// when n < N (block decomposition with t = N - n); the Full tags apply when
/// n = N.
enum class FamilyTag {
  MOffdiag,      // 1 <= i < j <= n, positions E[i, n+1-j] / E[j, n+1-i]
  MAntidiag,     // 1 <= i <= n, position E[i, n+1-i]
  BC,            // i in [1..n], j in [1..t], E[i, n+j] paired across blocks
  DOffdiag,      // 1 <= i < j <= t
  DAntidiag,     // 1 <= i <= t
  FullOffdiag,   // n = N, 1 <= i < j <= N
  FullAntidiag,  // n = N, 1 <= i <= N
};

struct FamilyElement {
  FamilyTag tag;
  long k = 0;  // z-exponent of the leading term
  long e = 0;  // T-exponent of the leading term
  int i = 1, j = 1;
  Element value;
};

/// a - sigma(a); the result x always satisfies sigma(x) = -x.
Element fixed_project(const InvolutionParams& p, const Element& a);

/// True iff sigma(a) = -a exactly.
bool is_fixed(const InvolutionParams& p, const Element& a);

/// One family element: x - sigma(x) with leading term
/// x = z^k * (q-power normalization) * T^e at the block position selected by
/// (tag, i, j).  Returns the zero element when the combination cancels.
/// Throws std::invalid_argument when the indices violate the family's
/// constraints or the tag does not match n vs N.
Element generator_element(const InvolutionParams& p, FamilyTag tag, int i,
                          int j, long k, long e);

/// All family elements with leading term inside the cutoff window, zero
/// combinations dropped and antidiagonal duplicates (e vs kr - e) emitted
/// once.
std::vector<FamilyElement> generator_family(const FixedSubalgebraSpec& spec,
                                            FamilyTag tag);

/// Every admissible family tag for the parameters of `spec`.
std::vector<FamilyTag> family_tags(const InvolutionParams& p);

/// Basis of the space of weight-w elements with monomial support inside the
/// cutoff window and sigma(x) = -x.  Computed by projecting every in-window
/// monomial of weight w, discarding projections that leave the window, and
/// reducing to a basis by exact Gaussian elimination with lexicographic
/// pivoting.  Deterministic output order.
std::vector<Element> graded_basis(const FixedSubalgebraSpec& spec, long w);

/// weight -> dimension of graded_basis over an inclusive weight range.
std::map<long, int> dim_table(const FixedSubalgebraSpec& spec, long wmin,
                              long wmax);

struct ClosureReport {
  int checked = 0;
  int passed = 0;
  std::vector<std::string> failures;
  bool ok() const { return checked == passed; }
};

/// Brackets of randomly sampled graded-basis pairs stay in the fixed space.
ClosureReport closure_check(const FixedSubalgebraSpec& spec, int samples,
                            unsigned seed = 20240901);

/// Exact row reduction utility: returns a maximal linearly independent
/// subset (in reduced form) of the given elements, in pivot order.
std::vector<Element> row_reduce(const std::vector<Element>& rows);

/// True iff x lies in the span of `basis` (basis need not be reduced).
bool in_span(const std::vector<Element>& basis, const Element& x);

}  // namespace qpdo
