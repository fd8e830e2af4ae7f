// The module V = K^N[z, z^-1], the operator action on it, and the residue
// bilinear forms realizing the anti-involutions geometrically.
//
// B_{+-}(h, g) = Res_z (Phi_{+-}(h^T) J g), where Phi_{+-}(h)(z) = h(+-z),
// Res_z extracts the z^-1 coefficient, and J is one of
//   diag(z^-2 J_n, z^-1 J_t)   (standard; J_m the anti-diagonal m x m matrix,
//                               degenerating to z^-2 J_N when n = N)
//   diag(z^-2 I_n, z^-1 I_t)   (transpose variant).

#pragma once

#include "qpdo/involution.hpp"

#include <map>
#include <string>
#include <vector>

namespace qpdo {

struct VecKey {
  long u = 0;  // z-exponent
  int p = 1;   // component index in [1..N]
  auto operator<=>(const VecKey&) const = default;
};

/// Finite sum of c * z^u * e_p; canonical (no zero coefficients stored).
class VectorElement {
 public:
  explicit VectorElement(int N);
  static VectorElement basis(int N, long u, int p);

  int size() const { return N_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<VecKey, FieldElement>& terms() const { return terms_; }

  void add_term(const FieldElement& c, long u, int p);
  VectorElement operator-() const;
  VectorElement operator+(const VectorElement& o) const;
  VectorElement operator-(const VectorElement& o) const;
  VectorElement scaled(const FieldElement& c) const;
  bool operator==(const VectorElement& o) const {
    return N_ == o.N_ && terms_ == o.terms_;
  }
  std::string str() const;

 private:
  int N_;
  std::map<VecKey, FieldElement> terms_;
};

enum class FormKind { Standard, Transpose };

struct FormSpec {
  int sign = +1;  // +1 or -1 selects Phi_+ / Phi_-
  FormKind kind = FormKind::Standard;
  int N = 1;
  int n = 1;  // block split; n = N gives the undivided variant
};

/// Operator action: (z^k T^m E[i,j])(z^u e_p) = delta(j,p) q^{mu} z^{k+u} e_i.
VectorElement act(const Element& a, const VectorElement& h);

/// Scalar Laurent polynomial in z (exponent -> coefficient).
using LaurentScalar = std::map<long, FieldElement>;

/// Coefficient of z^-1.
FieldElement residue(const LaurentScalar& f);

/// B_{+-}(h, g) = Res_z(Phi_{+-}(h^T) J g), evaluated literally through the
/// residue of the scalar product.
FieldElement form_eval(const FormSpec& spec, const VectorElement& h,
                       const VectorElement& g);

/// Action of T^{two_alpha/2}: z^u e_p -> v^{two_alpha * u} z^u e_p.  The
/// half T-power is not an algebra element, but its action on V stays in K.
VectorElement t_half_power(const VectorElement& h, long two_alpha);

/// Adjointness: B(L h, g) = B(h, L* g) with the adjoint
///   L* = q^{kr/2} T^{-kr/2} sigma(L) T^{-kr/2}
/// per homogeneous z-degree-k component of L; equivalently, the two sides of
/// B(L h, T^{kr/2} g) = B(T^{kr/2} h, sigma(L) g) agree.  The twist is
/// trivial whenever r = 0, in particular for n < N.  The transpose FormKind
/// uses sigma^T in place of sigma.  Parameters are only required to be
/// structurally sane, matching the geometric normalized family.
bool adjoint_check(const InvolutionParams& p, const FormSpec& spec,
                   const Element& L, const VectorElement& h,
                   const VectorElement& g);

/// G[a][b] = form_eval(spec, basis[a], basis[b]).
std::vector<std::vector<FieldElement>> gram_matrix(
    const FormSpec& spec, const std::vector<VectorElement>& basis);

enum class BlockSymmetry { Symmetric, Antisymmetric, Mixed, Degenerate };

/// Brute-force symmetry classification of the form restricted to one block
/// (components <= n or > n) over |u| <= window.
BlockSymmetry block_symmetry(const FormSpec& spec, bool first_block,
                             long window);

std::string to_string(BlockSymmetry s);

}  // namespace qpdo
