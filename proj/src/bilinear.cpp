#include "qpdo/bilinear.hpp"

#include <stdexcept>

namespace qpdo {

VectorElement::VectorElement(int N) : N_(N) {
  if (N < 1) throw std::invalid_argument("vector size must be positive");
}

VectorElement VectorElement::basis(int N, long u, int p) {
  VectorElement h(N);
  h.add_term(FieldElement(1), u, p);
  return h;
}

void VectorElement::add_term(const FieldElement& c, long u, int p) {
  if (p < 1 || p > N_) throw std::invalid_argument("component out of range");
  if (c.is_zero()) return;
  VecKey key{u, p};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VectorElement VectorElement::operator-() const {
  VectorElement r(N_);
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
  return r;
}

VectorElement VectorElement::operator+(const VectorElement& o) const {
  if (N_ != o.N_) throw std::invalid_argument("size mismatch");
  VectorElement r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(c, key.u, key.p);
  return r;
}

VectorElement VectorElement::operator-(const VectorElement& o) const {
  return *this + (-o);
}

VectorElement VectorElement::scaled(const FieldElement& c) const {
  VectorElement r(N_);
  if (c.is_zero()) return r;
  for (const auto& [key, t] : terms_) r.terms_.emplace(key, t * c);
  return r;
}

std::string VectorElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string piece;
    FieldElement a = c;
    bool neg = a.num().leading() < 0;
    if (neg) a = -a;
    if (!(a == FieldElement(1))) piece += a.str() + "*";
    if (key.u == 1) piece += "z*";
    else if (key.u != 0) piece += "z^" + std::to_string(key.u) + "*";
    piece += "e[" + std::to_string(key.p) + "]";
    if (first)
      out += (neg ? "-" : "") + piece;
    else
      out += (neg ? " - " : " + ") + piece;
    first = false;
  }
  return out;
}

VectorElement act(const Element& a, const VectorElement& h) {
  if (a.size() != h.size()) throw std::invalid_argument("size mismatch");
  VectorElement r(h.size());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kh, ch] : h.terms()) {
      if (ka.j != kh.p) continue;
      // (z^k T^m E_ij)(z^u e_j) = q^{mu} z^{k+u} e_i
      r.add_term(ca * ch * FieldElement::q_power(ka.m * kh.u), ka.k + kh.u,
                 ka.i);
    }
  }
  return r;
}

FieldElement residue(const LaurentScalar& f) {
  auto it = f.find(-1);
  return it == f.end() ? FieldElement() : it->second;
}

FieldElement form_eval(const FormSpec& spec, const VectorElement& h,
                       const VectorElement& g) {
  if (h.size() != spec.N || g.size() != spec.N)
    throw std::invalid_argument("size mismatch");
  if (spec.n < 1 || spec.n > spec.N)
    throw std::invalid_argument("form spec n out of range");
  const int n = spec.n, t = spec.N - spec.n;
  LaurentScalar s;
  for (const auto& [kh, ch] : h.terms()) {
    // Phi_{+-} substitutes z -> +-z in h.
    FieldElement phi = spec.sign < 0 && (kh.u % 2 != 0)
                           ? FieldElement(-1)
                           : FieldElement(1);
    for (const auto& [kg, cg] : g.terms()) {
      const int p = kh.p, qq = kg.p;
      // J entry (p, q) with its z-power.
      long jpow;
      bool hit;
      if (p <= n && qq <= n) {
        jpow = -2;
        hit = spec.kind == FormKind::Standard ? (p + qq == n + 1) : (p == qq);
      } else if (p > n && qq > n) {
        jpow = -1;
        hit = spec.kind == FormKind::Standard ? ((p - n) + (qq - n) == t + 1)
                                              : (p == qq);
      } else {
        continue;  // cross-block entries of J vanish
      }
      if (!hit) continue;
      long zexp = kh.u + kg.u + jpow;
      FieldElement c = phi * ch * cg;
      auto it = s.find(zexp);
      if (it == s.end())
        s.emplace(zexp, c);
      else {
        it->second += c;
        if (it->second.is_zero()) s.erase(it);
      }
    }
  }
  return residue(s);
}

VectorElement t_half_power(const VectorElement& h, long two_alpha) {
  VectorElement r(h.size());
  for (const auto& [key, c] : h.terms())
    r.add_term(c * FieldElement::v_power(two_alpha * key.u), key.u, key.p);
  return r;
}

bool adjoint_check(const InvolutionParams& p, const FormSpec& spec,
                   const Element& L, const VectorElement& h,
                   const VectorElement& g) {
  if (p.N != spec.N || p.n != spec.n)
    throw std::invalid_argument("params and form spec dimensions disagree");
  const bool minus = p.eps == FieldElement(-1);
  if ((spec.sign < 0) != minus)
    throw std::invalid_argument("form sign does not match the case sign");

  FieldElement lhs = form_eval(spec, act(L, h), g);

  // The twist depends on the z-degree, so split L into z-homogeneous parts.
  std::map<long, Element> by_zdeg;
  for (const auto& [key, c] : L.terms()) {
    auto it = by_zdeg.find(key.k);
    if (it == by_zdeg.end()) it = by_zdeg.emplace(key.k, Element(p.N)).first;
    it->second.add_term(c, key.k, key.m, key.i, key.j);
  }

  FieldElement rhs;
  for (const auto& [k, Lk] : by_zdeg) {
    Element sL = spec.kind == FormKind::Standard ? sigma_extend_closed(p, Lk)
                                                 : sigma_transpose_extend(p, Lk);
    // The adjoint of a z-degree-k component is
    //   q^{kr/2} T^{-kr/2} sigma(L) T^{-kr/2},
    // i.e. the twist identity B(L h, T^{kr/2} g) = B(T^{kr/2} h, sigma(L) g)
    // solved for the right-hand operator.  A T-power conjugation alone only
    // rescales sigma(L); the true adjoint shifts its T-exponents by -kr.
    VectorElement rg =
        t_half_power(act(sL, t_half_power(g, -k * p.r)), -k * p.r)
            .scaled(FieldElement::v_power(k * p.r));
    rhs += form_eval(spec, h, rg);
  }
  return lhs == rhs;
}

std::vector<std::vector<FieldElement>> gram_matrix(
    const FormSpec& spec, const std::vector<VectorElement>& basis) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  std::vector<std::vector<FieldElement>> G(basis.size());
  for (size_t a = 0; a < basis.size(); ++a) {
    G[a].reserve(basis.size());
    for (size_t b = 0; b < basis.size(); ++b)
      G[a].push_back(form_eval(spec, basis[a], basis[b]));
  }
  return G;
}

BlockSymmetry block_symmetry(const FormSpec& spec, bool first_block,
                             long window) {
  const int lo = first_block ? 1 : spec.n + 1;
  const int hi = first_block ? spec.n : spec.N;
  if (lo > hi) return BlockSymmetry::Degenerate;
  bool any_nonzero = false, sym = true, antisym = true;
  for (long u = -window; u <= window; ++u)
    for (long s = -window; s <= window; ++s)
      for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b) {
          FieldElement x = form_eval(spec, VectorElement::basis(spec.N, u, a),
                                     VectorElement::basis(spec.N, s, b));
          FieldElement y = form_eval(spec, VectorElement::basis(spec.N, s, b),
                                     VectorElement::basis(spec.N, u, a));
          if (!x.is_zero() || !y.is_zero()) any_nonzero = true;
          if (!(x == y)) sym = false;
          if (!(x == -y)) antisym = false;
        }
  if (!any_nonzero) return BlockSymmetry::Degenerate;
  if (sym && !antisym) return BlockSymmetry::Symmetric;
  if (antisym && !sym) return BlockSymmetry::Antisymmetric;
  if (sym && antisym) return BlockSymmetry::Degenerate;
  return BlockSymmetry::Mixed;
}

std::string to_string(BlockSymmetry s) {
  switch (s) {
    case BlockSymmetry::Symmetric: return "symmetric";
    case BlockSymmetry::Antisymmetric: return "antisymmetric";
    case BlockSymmetry::Mixed: return "mixed";
    case BlockSymmetry::Degenerate: return "degenerate";
  }
  return "?";
}

}  // namespace qpdo
