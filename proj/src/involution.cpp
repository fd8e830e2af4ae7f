#include "qpdo/involution.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qpdo {

namespace {

bool is_pm_one(const FieldElement& x) {
  return x == FieldElement(1) || x == FieldElement(-1);
}

void check_structural(const InvolutionParams& p) {
  if (p.N < 1) throw std::invalid_argument("N must be positive");
  if (p.n < 1 || p.n > p.N) throw std::invalid_argument("n out of range");
  if (p.eps.is_zero()) throw std::invalid_argument("eps/A must be nonzero");
  if (p.B.is_zero()) throw std::invalid_argument("B must be nonzero");
  if (static_cast<int>(p.c.size()) != p.N - 1)
    throw std::invalid_argument("c vector must have N-1 entries");
  for (const auto& ci : p.c)
    if (ci.is_zero()) throw std::invalid_argument("c entries must be nonzero");
}

// If B = v^{2u} (a unit monomial of even degree), returns u: these are the
// parameters reachable from B = q by a theta_s conjugation with half-integer
// s = (u-1)/2.
std::optional<long> even_v_power(const FieldElement& B) {
  const Poly &num = B.num(), &den = B.den();
  long d;
  if (den == Poly(1) && num.is_monomial() && num.leading() == 1)
    d = num.degree();
  else if (num == Poly(1) && den.is_monomial() && den.leading() == 1)
    d = -den.degree();
  else
    return std::nullopt;
  if (d % 2 != 0) return std::nullopt;
  return d / 2;
}

}  // namespace

InvolutionParams InvolutionParams::make(int N, int n, FieldElement eps,
                                        FieldElement B, long r,
                                        std::vector<FieldElement> c) {
  InvolutionParams p;
  p.N = N;
  p.n = n;
  p.eps = std::move(eps);
  p.B = std::move(B);
  p.r = r;
  p.c = std::move(c);
  return p;
}

std::vector<FieldElement> InvolutionParams::ones(int N) {
  return std::vector<FieldElement>(N - 1, FieldElement(1));
}

int pi_n(int n, int N, int i) {
  if (n < 1 || n > N) throw std::invalid_argument("pi_n: n out of range");
  if (i < 1 || i > N) throw std::invalid_argument("pi_n: i out of range");
  return i <= n ? n - i + 1 : N + n + 1 - i;
}

bool ValidityReport::valid() const {
  for (const auto& r : results)
    if (!r.ok) return false;
  return true;
}

std::string ValidityReport::str() const {
  std::ostringstream out;
  for (const auto& r : results)
    out << (r.ok ? "ok    " : "FAIL  ") << r.constraint
        << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
  return out.str();
}

ValidityReport validate_params(const InvolutionParams& p) {
  ValidityReport rep;
  auto push = [&rep](std::string id, bool ok, std::string detail) {
    rep.results.push_back({std::move(id), ok, std::move(detail)});
  };

  try {
    check_structural(p);
  } catch (const std::invalid_argument& e) {
    push("structural", false, e.what());
    return rep;
  }
  push("structural", true, "");

  const int N = p.N, n = p.n, t = p.N - p.n;
  const FieldElement one(1);

  if (n < N) {
    push("r-zero", p.r == 0, p.r == 0 ? "" : "r must be 0 when n < N");
    push("epsilon-sign", is_pm_one(p.eps),
         is_pm_one(p.eps) ? "" : "epsilon must be +1 or -1 when n < N");
    if (p.eps == FieldElement(-1) && N % 2 == 0 && n % 2 == 1) {
      push("minus-case-parity", false,
           "impossible case: N even and n odd admit no anti-involution for "
           "the minus sign");
    }
  } else {
    // A^2 (B q^{-1})^r = 1
    FieldElement lhs =
        p.eps * p.eps * (p.B * FieldElement::q_power(-1)).pow(p.r);
    push("A-B-r", lhs == one,
         lhs == one ? "" : "A^2 (B q^-1)^r = " + lhs.str() + ", expected 1");
  }

  // Pair conditions on c: c_i c_{n-i} = 1 inside the first block and
  // c_{n+i} c_{N-i} = 1 inside the second.
  for (int i = 1; i <= n - 1; ++i) {
    bool ok = p.c[i - 1] * p.c[n - i - 1] == one;
    if (!ok || i <= n - i)
      push("pair-first-block", ok,
           "c_" + std::to_string(i) + " * c_" + std::to_string(n - i) +
               (ok ? " = 1" : " != 1"));
  }
  for (int i = 1; i <= t - 1; ++i) {
    bool ok = p.c[n + i - 1] * p.c[N - i - 1] == one;
    if (!ok || i <= t - i)
      push("pair-second-block", ok,
           "c_" + std::to_string(n + i) + " * c_" + std::to_string(N - i) +
               (ok ? " = 1" : " != 1"));
  }

  // Fixed points (forced to square to 1 by the pair conditions).
  if (n % 2 == 0 && n >= 2)
    push("fixed-point-first", is_pm_one(p.c[n / 2 - 1]),
         "c_" + std::to_string(n / 2) + " = " + p.c[n / 2 - 1].str());
  if (n < N && t % 2 == 0 && t >= 2)
    push("fixed-point-second", is_pm_one(p.c[n + t / 2 - 1]),
         "c_" + std::to_string(n + t / 2) + " = " + p.c[n + t / 2 - 1].str());

  if (n < N) {
    FieldElement prod(1);
    for (int i = 1; i <= N - 1; ++i)
      if (i != n) prod *= p.c[i - 1];
    push("product-sign", prod == p.eps,
         "prod_{i != n} c_i = " + prod.str() +
             (prod == p.eps ? "" : ", expected " + p.eps.str()));
  }

  return rep;
}

void require_valid(const InvolutionParams& p) {
  ValidityReport rep = validate_params(p);
  for (const auto& r : rep.results)
    if (!r.ok)
      throw std::invalid_argument("invalid parameters [" + r.constraint +
                                  "] " + r.detail);
}

CoefficientMatrix::CoefficientMatrix(const InvolutionParams& p) : N_(p.N) {
  check_structural(p);
  entries_.assign(static_cast<size_t>(N_) * N_, FieldElement(1));
  for (int i = 2; i <= N_; ++i) {
    FieldElement acc(1);
    for (int j = i - 1; j >= 1; --j) {
      acc *= p.c[j - 1];  // c_{j+1,j}
      entries_[static_cast<size_t>(i - 1) * N_ + (j - 1)] = acc;
    }
  }
}

const FieldElement& CoefficientMatrix::at(int i, int j) const {
  if (!(i > j && j >= 1 && i <= N_))
    throw std::invalid_argument("CoefficientMatrix::at requires i > j");
  return entries_[static_cast<size_t>(i - 1) * N_ + (j - 1)];
}

FieldElement CoefficientMatrix::factor(int i, int j) const {
  if (i == j) return FieldElement(1);
  if (i > j) return at(i, j);
  return at(j, i).inverse();
}

Element sigma_generator_image(const InvolutionParams& p, const GeneratorTag& g) {
  check_structural(p);
  const int N = p.N, n = p.n;
  auto pi = [&](int i) { return pi_n(n, N, i); };
  const bool full = (n == N);
  const FieldElement q = FieldElement::q();

  switch (g.kind) {
    case GeneratorTag::DiagUnit:
      return Element::monomial(N, FieldElement(1), 0, 0, pi(g.i), pi(g.i));
    case GeneratorTag::ZDiag:
      if (full)  // z E_ii -> A z T^r E_{pi(i),pi(i)}
        return Element::monomial(N, p.eps, 1, p.r, pi(g.i), pi(g.i));
      return Element::monomial(N, p.eps, 1, 0, pi(g.i), pi(g.i));
    case GeneratorTag::ZInvDiag:
      if (full)  // z^-1 E_ii -> A^-1 q^r z^-1 T^-r E_{pi(i),pi(i)}
        return Element::monomial(N, p.eps.inverse() * FieldElement::q_power(p.r),
                                 -1, -p.r, pi(g.i), pi(g.i));
      return Element::monomial(N, p.eps.inverse(), -1, 0, pi(g.i), pi(g.i));
    case GeneratorTag::TDiag: {
      // T E_ii -> B q^{-1 + [i <= n]} T^-1 E_{pi(i),pi(i)}
      FieldElement coeff = p.B * (g.i <= n ? FieldElement(1) : q.inverse());
      return Element::monomial(N, coeff, 0, -1, pi(g.i), pi(g.i));
    }
    case GeneratorTag::TInvDiag: {
      FieldElement coeff = p.B * (g.i <= n ? FieldElement(1) : q.inverse());
      return Element::monomial(N, coeff.inverse(), 0, 1, pi(g.i), pi(g.i));
    }
    case GeneratorTag::OffDiag: {
      const int i = g.i, j = g.j;
      if (i == j) throw std::invalid_argument("OffDiag requires i != j");
      CoefficientMatrix cm(p);
      long zshift = 0;
      if (i > j && i > n && j <= n) zshift = 1;
      if (i < j && i <= n && j > n) zshift = -1;
      return Element::monomial(N, cm.factor(i, j), zshift, 0, pi(j), pi(i));
    }
  }
  throw std::invalid_argument("unknown generator tag");
}

namespace {

// Per-monomial closed form of the anti-multiplicative extension.
//
// n = N:  z^k T^m E_ij -> gamma_ij A^k B^m q^{k(k-1)r/2 - km}
//                          z^k T^{kr-m} E_{pi(j),pi(i)}
// n < N:  z^k T^m E_ij -> gamma_ij eps^k (B q^{chi_i - 1})^m q^{-km}
//                          z^{k + chi_j - chi_i} T^{-m} E_{pi(j),pi(i)}
// where chi_i = [i <= n].  The n < N shape is exactly the assembly of the
// four block maps (sigma-dot on anti-transposed blocks, with the z^{-1}/z
// prefixes on the off-diagonal blocks) composed with Gamma_c.
Element sigma_closed_impl(const InvolutionParams& p, const Element& a) {
  const int N = p.N, n = p.n;
  if (a.size() != N) throw std::invalid_argument("size mismatch");
  const CoefficientMatrix cm(p);
  Element out(N);
  for (const auto& [key, c] : a.terms()) {
    const long k = key.k, m = key.m;
    const int i = key.i, j = key.j;
    FieldElement coeff = c * cm.factor(i, j) * p.eps.pow(k);
    if (n == N) {
      coeff *= p.B.pow(m) *
               FieldElement::q_power(k * (k - 1) / 2 * p.r - k * m);
      out.add_term(coeff, k, k * p.r - m, pi_n(n, N, j), pi_n(n, N, i));
    } else {
      const int chi_i = i <= n ? 1 : 0, chi_j = j <= n ? 1 : 0;
      FieldElement Bi = p.B * FieldElement::q_power(chi_i - 1);
      coeff *= Bi.pow(m) * FieldElement::q_power(-k * m);
      out.add_term(coeff, k + chi_j - chi_i, -m, pi_n(n, N, j), pi_n(n, N, i));
    }
  }
  return out;
}

// Block-map route for n < N with B = q: Gamma_c followed by the four
// sigma-dot block maps
//   M -> sigma-dot_{eps,q,0}(M^dag)            (upper-left,  n x n)
//   B -> z^-1 sigma-dot_{eps,q,0}(B^dag)       (to lower-left)
//   C -> z    sigma-dot_{eps,1,0}(C^dag)       (to upper-right)
//   D -> sigma-dot_{eps,1,0}(D^dag)            (lower-right, t x t)
// assembled so that E_ij lands at E_{pi(j),pi(i)}.
Element sigma_block_impl(const InvolutionParams& p, const Element& a) {
  const int N = p.N, n = p.n;
  Element twisted = apply_gamma(a, p.c);
  Element out(N);
  for (const auto& [key, c] : twisted.terms()) {
    const long k = key.k, m = key.m;
    const int i = key.i, j = key.j;
    const bool ri = i <= n, rj = j <= n;
    // sigma-dot parameter: B = q on rows from the first block, 1 otherwise.
    FieldElement Bt = ri ? FieldElement::q() : FieldElement(1);
    long pre = 0;
    if (ri && !rj) pre = -1;   // B block
    if (!ri && rj) pre = 1;    // C block
    FieldElement coeff =
        c * p.eps.pow(k) * Bt.pow(m) * FieldElement::q_power(-k * m);
    out.add_term(coeff, k + pre, -m, pi_n(n, N, j), pi_n(n, N, i));
  }
  return out;
}

Element sigma_extend_dispatch(const InvolutionParams& p, const Element& a) {
  check_structural(p);
  if (p.n == p.N) return sigma_closed_impl(p, a);
  if (p.B == FieldElement::q()) return sigma_block_impl(p, a);
  if (auto u = even_v_power(p.B)) {
    // theta_s sigma_B theta_{-s} = sigma_{q^{-2s} B}; with s = (u-1)/2 the
    // conjugate has B = q, so sigma_B = theta_{-s} o sigma_q o theta_s.
    long two_s = *u - 1;
    InvolutionParams norm = p;
    norm.B = FieldElement::q();
    return apply_theta(sigma_block_impl(norm, apply_theta(a, two_s)), -two_s);
  }
  return sigma_extend_oracle(p, a);
}

}  // namespace

Element sigma_extend_closed(const InvolutionParams& p, const Element& a) {
  return sigma_extend_dispatch(p, a);
}

Element sigma_apply(const InvolutionParams& p, const Element& a) {
  require_valid(p);
  return sigma_extend_dispatch(p, a);
}

Element sigma_extend_oracle(const InvolutionParams& p, const Element& a) {
  check_structural(p);
  const int N = p.N;
  if (a.size() != N) throw std::invalid_argument("size mismatch");
  Element out(N);
  for (const auto& [key, c] : a.terms()) {
    // Canonical factorization: z-generators, then T-generators, then the
    // chain of adjacent matrix units from i to j.
    std::vector<GeneratorTag> factors;
    const int i = key.i, j = key.j;
    for (long s = 0; s < (key.k >= 0 ? key.k : -key.k); ++s)
      factors.push_back({key.k > 0 ? GeneratorTag::ZDiag : GeneratorTag::ZInvDiag, i, i});
    for (long s = 0; s < (key.m >= 0 ? key.m : -key.m); ++s)
      factors.push_back({key.m > 0 ? GeneratorTag::TDiag : GeneratorTag::TInvDiag, i, i});
    if (i < j)
      for (int l = i; l < j; ++l)
        factors.push_back({GeneratorTag::OffDiag, l, l + 1});
    else if (i > j)
      for (int l = i; l > j; --l)
        factors.push_back({GeneratorTag::OffDiag, l, l - 1});
    if (factors.empty()) factors.push_back({GeneratorTag::DiagUnit, i, i});

    // Anti-multiplicativity: multiply the images in reverse order.
    Element img = sigma_generator_image(p, factors.back());
    for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it)
      img = multiply(img, sigma_generator_image(p, *it));
    out += img.scaled(c);
  }
  return out;
}

Element sigma_apply_oracle(const InvolutionParams& p, const Element& a) {
  require_valid(p);
  return sigma_extend_oracle(p, a);
}

Element dot_sigma(const FieldElement& A, const FieldElement& B, long r,
                  const Element& x) {
  if (x.size() != 1) throw std::invalid_argument("dot_sigma requires N = 1");
  if (A.is_zero() || B.is_zero())
    throw std::invalid_argument("dot_sigma parameters must be nonzero");
  Element out(1);
  for (const auto& [key, c] : x.terms()) {
    const long k = key.k, m = key.m;
    FieldElement coeff = c * A.pow(k) * B.pow(m) *
                         FieldElement::q_power(-k * m + k * (k - 1) / 2 * r);
    out.add_term(coeff, k, k * r - m, 1, 1);
  }
  return out;
}

Element dagger(const Element& a) {
  const int N = a.size();
  Element out(N);
  for (const auto& [key, c] : a.terms())
    out.add_term(c, key.k, key.m, N + 1 - key.j, N + 1 - key.i);
  return out;
}

Element apply_theta(const Element& a, long two_s) {
  Element out(a.size());
  for (const auto& [key, c] : a.terms())
    out.add_term(c * FieldElement::v_power(two_s * key.m), key.k, key.m,
                 key.i, key.j);
  return out;
}

Element apply_gamma(const Element& a, const std::vector<FieldElement>& alpha) {
  const int N = a.size();
  if (static_cast<int>(alpha.size()) != N - 1)
    throw std::invalid_argument("alpha vector must have N-1 entries");
  for (const auto& x : alpha)
    if (x.is_zero()) throw std::invalid_argument("alpha entries must be nonzero");
  // w_i = alpha_{i,1} chain products; the factor on E_ij is w_i / w_j.
  std::vector<FieldElement> w(N + 1, FieldElement(1));
  for (int i = 2; i <= N; ++i) w[i] = w[i - 1] * alpha[i - 2];
  Element out(N);
  for (const auto& [key, c] : a.terms())
    out.add_term(c * w[key.i] / w[key.j], key.k, key.m, key.i, key.j);
  return out;
}

Element apply_ad_j(const Element& a) {
  const int N = a.size();
  Element out(N);
  for (const auto& [key, c] : a.terms())
    out.add_term(c, key.k, key.m, N + 1 - key.i, N + 1 - key.j);
  return out;
}

Element apply_ad_block_j(const Element& a, int n) {
  const int N = a.size();
  Element out(N);
  for (const auto& [key, c] : a.terms())
    out.add_term(c, key.k, key.m, pi_n(n, N, key.i), pi_n(n, N, key.j));
  return out;
}

Element sigma_transpose_extend(const InvolutionParams& p, const Element& a) {
  // Same coefficients as sigma, with the image placed at the ordinary
  // transpose position (j, i) instead of (pi(j), pi(i)).
  return apply_ad_block_j(sigma_extend_dispatch(p, a), p.n);
}

Element sigma_transpose(const InvolutionParams& p, const Element& a) {
  require_valid(p);
  return sigma_transpose_extend(p, a);
}

InvolutionCheck check_anti_involution(const InvolutionParams& p, long kmax,
                                      long mmax) {
  check_structural(p);
  InvolutionCheck rep;
  const int N = p.N;
  auto fail = [&rep](std::string msg) {
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(msg));
  };

  std::vector<Element> monos;
  std::vector<MonoKey> keys;
  for (long k = -kmax; k <= kmax; ++k)
    for (long m = -mmax; m <= mmax; ++m)
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
          monos.push_back(Element::monomial(N, FieldElement(1), k, m, i, j));
          keys.push_back({k, m, i, j});
        }

  std::vector<Element> images;
  images.reserve(monos.size());
  for (const auto& x : monos) images.push_back(sigma_extend_oracle(p, x));

  for (size_t a = 0; a < monos.size(); ++a) {
    if (!(sigma_extend_oracle(p, images[a]) == monos[a])) {
      rep.involutive = false;
      fail("sigma^2 != id at " + monos[a].str());
    }
    long win = weight_of(N, keys[a]), wout = 0;
    if (!images[a].homogeneous_weight(wout) ||
        (!images[a].is_zero() && wout != win)) {
      rep.gradation_preserving = false;
      fail("weight not preserved at " + monos[a].str());
    }
  }

  // Anti-multiplicativity over a smaller window; involutivity above is the
  // constraint discriminator, and sigma^2 = id on generators already
  // determines sigma^2 everywhere.
  const long pk = std::min(kmax, 1L), pm = std::min(mmax, 1L);
  for (size_t a = 0; a < monos.size(); ++a) {
    if (std::abs(keys[a].k) > pk || std::abs(keys[a].m) > pm) continue;
    for (size_t b = 0; b < monos.size(); ++b) {
      if (std::abs(keys[b].k) > pk || std::abs(keys[b].m) > pm) continue;
      if (keys[a].j != keys[b].i) continue;  // product vanishes
      Element lhs = sigma_extend_oracle(p, multiply(monos[a], monos[b]));
      Element rhs = multiply(images[b], images[a]);
      if (!(lhs == rhs)) {
        rep.anti_multiplicative = false;
        fail("anti-multiplicativity fails at " + monos[a].str() + " , " +
             monos[b].str());
        if (rep.failures.size() >= 20) return rep;
      }
    }
  }
  return rep;
}

}  // namespace qpdo
