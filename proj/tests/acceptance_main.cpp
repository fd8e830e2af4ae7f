// Acceptance suite: end-to-end verification at desk scale, exact arithmetic
// throughout.  Each criterion prints one PASS/FAIL line; the process exits
// nonzero when any criterion fails.

#include "qpdo/parse.hpp"
#include "qpdo/subalgebra.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

using namespace qpdo;

namespace {

const FieldElement one(1), minus_one(-1);
const FieldElement Q = FieldElement::q();

int g_failures = 0;

void report(int number, const std::string& what, bool pass,
            const std::string& detail, double seconds) {
  std::printf("[%s] criterion %d: %s (%.1fs)%s\n", pass ? "PASS" : "FAIL",
              number, what.c_str(), seconds,
              detail.empty() ? "" : ("\n       " + detail).c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void run_criterion(int number, const std::string& what,
                   const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0).count();
  report(number, what, pass, detail, secs);
}

struct KeyedMono {
  MonoKey key;
  Element value;
};

std::vector<KeyedMono> monomials(int N, long kmax, long mmax) {
  std::vector<KeyedMono> out;
  for (long k = -kmax; k <= kmax; ++k)
    for (long m = -mmax; m <= mmax; ++m)
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
          out.push_back({MonoKey{k, m, i, j},
                         Element::monomial(N, one, k, m, i, j)});
  return out;
}

// All sign vectors in {+-1}^(N-1) accepted by validate_params.
std::vector<std::vector<FieldElement>> valid_sign_patterns(int N, int n,
                                                           const FieldElement& eps,
                                                           const FieldElement& B,
                                                           long r,
                                                           const FieldElement& A) {
  std::vector<std::vector<FieldElement>> out;
  const int len = N - 1;
  for (int bits = 0; bits < (1 << len); ++bits) {
    std::vector<FieldElement> c;
    for (int i = 0; i < len; ++i)
      c.emplace_back((bits >> i) & 1 ? -1 : 1);
    InvolutionParams p = InvolutionParams::make(N, n, n == N ? A : eps, B, r, c);
    if (validate_params(p).valid()) out.push_back(std::move(c));
  }
  return out;
}

// Square root of (B q^-1)^(-r) when it exists in K as a unit monomial.
std::optional<FieldElement> forced_A(const FieldElement& B, long r) {
  FieldElement x = (B * FieldElement::q_power(-1)).pow(-r);  // A^2 = x
  const Poly &num = x.num(), &den = x.den();
  long d;
  if (den == Poly(1) && num.is_monomial() && num.leading() == 1)
    d = num.degree();
  else if (num == Poly(1) && den.is_monomial() && den.leading() == 1)
    d = -den.degree();
  else
    return std::nullopt;
  if (d % 2 != 0) return std::nullopt;
  return FieldElement::v_power(d / 2);
}

// The full criterion-1 parameter grid.
std::vector<InvolutionParams> criterion1_grid(int Nmax) {
  std::vector<InvolutionParams> grid;
  for (int N = 1; N <= Nmax; ++N) {
    for (int n = 1; n <= N; ++n) {
      if (n < N) {
        for (int e : {+1, -1}) {
          FieldElement eps(e);
          for (auto& c : valid_sign_patterns(N, n, eps, Q, 0, one))
            grid.push_back(InvolutionParams::make(N, n, eps, Q, 0, c));
        }
      } else {
        for (const FieldElement& B :
             {Q, Q * Q, FieldElement::v_power(3)}) {
          for (long r = -2; r <= 2; ++r) {
            auto root = forced_A(B, r);
            if (!root) continue;
            for (int sgn : {+1, -1}) {
              FieldElement A = root->pow(1) * FieldElement(sgn);
              for (auto& c : valid_sign_patterns(N, n, A, B, r, A))
                grid.push_back(InvolutionParams::make(N, n, A, B, r, c));
            }
          }
        }
      }
    }
  }
  return grid;
}

bool criterion1(std::string& detail) {
  auto grid = criterion1_grid(4);
  long params_checked = 0;
  for (const auto& p : grid) {
    if (!validate_params(p).valid()) {
      detail = "grid produced invalid parameters";
      return false;
    }
    const int N = p.N;
    // sigma on every monomial |k|,|m| <= 4 (products of the test window).
    auto wide = monomials(N, 4, 4);
    std::map<MonoKey, Element> image;
    for (const auto& km : wide) image.emplace(km.key, sigma_apply(p, km.value));

    auto window = monomials(N, 2, 2);
    for (const auto& a : window) {
      const Element& sa = image.at(a.key);
      // involutivity and weight preservation
      if (!(sigma_apply(p, sa) == a.value)) {
        detail = "sigma^2 != id at " + a.value.str();
        return false;
      }
      long win = weight_of(N, a.key), wout = 0;
      if (!sa.homogeneous_weight(wout) || wout != win) {
        detail = "weight not preserved at " + a.value.str();
        return false;
      }
    }
    for (const auto& a : window) {
      for (const auto& b : window) {
        if (a.key.j != b.key.i) continue;
        Element ab = multiply(a.value, b.value);
        const MonoKey abkey{a.key.k + b.key.k, a.key.m + b.key.m, a.key.i,
                            b.key.j};
        const FieldElement twist = ab.coeff(abkey);
        Element lhs = image.at(abkey).scaled(twist);
        Element rhs = multiply(image.at(b.key), image.at(a.key));
        if (!(lhs == rhs)) {
          detail = "anti-multiplicativity fails at " + a.value.str() + ", " +
                   b.value.str();
          return false;
        }
      }
    }
    ++params_checked;
  }
  detail = std::to_string(params_checked) + " parameter sets";
  return params_checked > 0;
}

bool criterion2(std::string& detail) {
  std::mt19937 rng(31001);
  long agree = 0, runs = 0;
  const std::vector<FieldElement> pool = {one, minus_one, Q, -Q};

  auto run_one = [&](const InvolutionParams& p) -> bool {
    bool valid = validate_params(p).valid();
    bool anti = check_anti_involution(p, 2, 2).anti_involution();
    ++runs;
    if (valid == anti) {
      ++agree;
      return true;
    }
    detail = "iff violated: validate=" + std::string(valid ? "yes" : "no") +
             " extension=" + std::string(anti ? "yes" : "no");
    return false;
  };

  for (int N : {2, 3}) {
    for (int n = 1; n < N; ++n) {
      for (int e : {+1, -1}) {
        // Exhaustive sign vectors.
        for (int bits = 0; bits < (1 << (N - 1)); ++bits) {
          std::vector<FieldElement> c;
          for (int i = 0; i < N - 1; ++i)
            c.emplace_back((bits >> i) & 1 ? -1 : 1);
          if (!run_one(InvolutionParams::make(N, n, FieldElement(e), Q, 0, c)))
            return false;
        }
      }
    }
  }
  // 20 random vectors with entries in {+-1, +-q}.
  std::uniform_int_distribution<int> Nd(2, 3), ed(0, 1), cd(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    int N = Nd(rng);
    std::uniform_int_distribution<int> nd(1, N - 1);
    int n = nd(rng);
    std::vector<FieldElement> c;
    for (int i = 0; i < N - 1; ++i) c.push_back(pool[cd(rng)]);
    auto p = InvolutionParams::make(N, n, FieldElement(ed(rng) ? -1 : 1), Q, 0, c);
    if (!run_one(p)) return false;
  }
  // Negative certificate: N even, n odd, minus sign admits no valid c.
  int negative = 0;
  for (int bits = 0; bits < 2; ++bits) {
    auto p = InvolutionParams::make(2, 1, minus_one, Q, 0,
                                    {FieldElement(bits ? -1 : 1)});
    if (!validate_params(p).valid() &&
        !check_anti_involution(p, 2, 2).anti_involution())
      ++negative;
  }
  if (negative != 2) {
    detail = "negative certificate incomplete";
    return false;
  }
  detail = std::to_string(runs) + " parameter vectors, " +
           std::to_string(agree) + " agree; minus case (N even, n odd) empty";
  return true;
}

// Normalized parameters: B = q, sign-canonical c (fixed points carry the
// required signs, everything else 1).
std::vector<InvolutionParams> normalized_params(int N, int n) {
  std::vector<InvolutionParams> out;
  if (n < N) {
    for (int e : {+1, -1})
      for (auto& c : valid_sign_patterns(N, n, FieldElement(e), Q, 0, one)) {
        // keep only the canonical ones: off-fixed-point entries all +1
        bool canonical = true;
        int t = N - n;
        for (int i = 1; i <= N - 1; ++i) {
          bool fixed = (n % 2 == 0 && i == n / 2) ||
                       (t % 2 == 0 && i == n + t / 2);
          if (!fixed && !(c[i - 1] == one)) canonical = false;
        }
        if (canonical)
          out.push_back(InvolutionParams::make(N, n, FieldElement(e), Q, 0, c));
      }
  } else {
    for (long r = -2; r <= 2; ++r)
      for (int e : {+1, -1})
        out.push_back(InvolutionParams::make(
            N, N, FieldElement(e), Q, r, InvolutionParams::ones(N)));
  }
  return out;
}

bool criterion3(std::string& detail) {
  long checked = 0;
  for (int N = 1; N <= 4; ++N) {
    for (int n = 1; n <= N; ++n) {
      for (const auto& p : normalized_params(N, n)) {
        if (!validate_params(p).valid()) continue;
        for (const auto& km : monomials(N, 3, 3)) {
          if (!(sigma_apply(p, km.value) == sigma_apply_oracle(p, km.value))) {
            detail = "disagreement at " + km.value.str();
            return false;
          }
          ++checked;
        }
      }
    }
  }
  detail = std::to_string(checked) + " monomial evaluations";
  return true;
}

bool criterion4(std::string& detail) {
  long checked = 0;
  // theta conjugation, n = N and n < N.
  std::vector<InvolutionParams> base = {
      InvolutionParams::make(2, 2, one, Q, 2, {one}),
      InvolutionParams::make(3, 3, minus_one, Q, -1, {one, one}),
      InvolutionParams::make(2, 1, one, Q, 0, {one}),
      InvolutionParams::make(3, 2, minus_one, Q, 0, {minus_one, one}),
  };
  for (const auto& p : base) {
    for (long two_s : {-2L, -1L, 1L, 2L}) {
      InvolutionParams pc = p;
      if (p.n == p.N) pc.eps = p.eps * FieldElement::v_power(two_s * p.r);
      pc.B = p.B * FieldElement::v_power(-2 * two_s);
      if (!validate_params(pc).valid()) {
        detail = "conjugated parameters invalid";
        return false;
      }
      for (const auto& km : monomials(p.N, 2, 2)) {
        Element lhs =
            apply_theta(sigma_apply(p, apply_theta(km.value, -two_s)), two_s);
        if (!(lhs == sigma_apply(pc, km.value))) {
          detail = "theta conjugation fails at " + km.value.str();
          return false;
        }
        ++checked;
      }
    }
  }
  // Gamma identities with 5 random admissible alpha per base set.
  std::mt19937 rng(31004);
  const std::vector<FieldElement> units = {one, minus_one, Q, Q.inverse(),
                                           FieldElement(2)};
  for (const auto& p : base) {
    const int N = p.N, n = p.n, t = N - n;
    for (int trial = 0; trial < 5; ++trial) {
      // Respect the pair conditions; fixed points +-1 with product +1.
      std::vector<FieldElement> alpha(N - 1, one);
      std::uniform_int_distribution<size_t> pick(0, units.size() - 1);
      for (int i = 1; i <= (n - 1) / 2; ++i) {
        alpha[i - 1] = units[pick(rng)];
        alpha[n - i - 1] = alpha[i - 1].inverse();
      }
      for (int i = 1; 2 * i <= t - 1; ++i) {
        alpha[n + i - 1] = units[pick(rng)];
        alpha[N - i - 1] = alpha[n + i - 1].inverse();
      }
      if (n < N) {
        // free cross-block entry
        alpha[n - 1] = units[pick(rng)];
        // fixed points stay +1 so the product stays the sign of c
        if (N % 2 == 0 && n % 2 == 0) {
          std::uniform_int_distribution<int> flip(0, 1);
          if (flip(rng)) {
            alpha[n / 2 - 1] = minus_one;
            alpha[n + t / 2 - 1] = minus_one;
          }
        }
      } else if (N % 2 == 0) {
        std::uniform_int_distribution<int> flip(0, 1);
        if (flip(rng)) alpha[N / 2 - 1] = minus_one;
      }
      InvolutionParams pc = p;
      for (int i = 0; i < N - 1; ++i) pc.c[i] = p.c[i] * alpha[i];
      if (!validate_params(pc).valid()) {
        detail = "c.alpha parameters invalid";
        return false;
      }
      std::vector<FieldElement> alpha_inv;
      for (const auto& a : alpha) alpha_inv.push_back(a.inverse());
      for (const auto& km : monomials(N, 2, 2)) {
        Element lhs = sigma_apply(p, apply_gamma(km.value, alpha));
        Element mid = sigma_apply(pc, km.value);
        Element rhs = apply_gamma(sigma_apply(p, km.value), alpha_inv);
        if (!(lhs == mid) || !(mid == rhs)) {
          detail = "Gamma identity fails at " + km.value.str();
          return false;
        }
        ++checked;
      }
    }
  }
  detail = std::to_string(checked) + " identity instances";
  return true;
}

bool criterion5(std::string& detail) {
  long checked = 0;
  for (const FieldElement& B : {Q, Q * Q, FieldElement::v_power(3)}) {
    for (long r = -2; r <= 2; ++r) {
      auto root = forced_A(B, r);
      if (!root) continue;
      for (int sgn : {+1, -1}) {
        FieldElement A = *root * FieldElement(sgn);
        auto p = InvolutionParams::make(1, 1, A, B, r, {});
        if (!validate_params(p).valid()) {
          detail = "N=1 grid parameters invalid";
          return false;
        }
        for (const auto& km : monomials(1, 2, 2)) {
          if (!(sigma_apply(p, km.value) == dot_sigma(A, B, r, km.value))) {
            detail = "mismatch at " + km.value.str();
            return false;
          }
          ++checked;
        }
      }
    }
  }
  detail = std::to_string(checked) + " scalar evaluations";
  return true;
}

bool criterion6(std::string& detail) {
  long fixed_checked = 0, spans = 0, closure_pairs = 0;
  for (auto [N, n] : std::vector<std::pair<int, int>>{
           {2, 1}, {3, 1}, {3, 2}, {2, 2}, {3, 3}}) {
    for (const auto& p : normalized_params(N, n)) {
      if (!validate_params(p).valid()) continue;
      if (n == N && (p.r < 0 || p.r > 1)) continue;  // keep r in {0,1}
      FixedSubalgebraSpec spec{p, -2, 2, -3, 3};

      std::map<long, std::vector<Element>> fam_by_weight;
      for (FamilyTag tag : family_tags(p)) {
        for (auto& fe : generator_family(spec, tag)) {
          if (!is_fixed(p, fe.value)) {
            detail = "family element not fixed: " + fe.value.str();
            return false;
          }
          ++fixed_checked;
          bool inside = true;
          for (const auto& [key, cc] : fe.value.terms()) {
            (void)cc;
            if (key.k < spec.zmin || key.k > spec.zmax ||
                key.m < spec.tmin || key.m > spec.tmax)
              inside = false;
          }
          if (!inside) continue;
          long w = 0;
          fe.value.homogeneous_weight(w);
          fam_by_weight[w].push_back(fe.value);
        }
      }
      for (long w = -3 * N; w <= 3 * N; ++w) {
        auto basis = graded_basis(spec, w);
        auto fam = fam_by_weight.count(w) ? row_reduce(fam_by_weight[w])
                                          : std::vector<Element>{};
        if (basis.size() != fam.size()) {
          detail = "span dimension mismatch at weight " + std::to_string(w);
          return false;
        }
        for (const Element& b : basis)
          if (!in_span(fam, b)) {
            detail = "graded basis vector outside family span (w=" +
                     std::to_string(w) + ")";
            return false;
          }
        for (const Element& f : fam)
          if (!in_span(basis, f)) {
            detail = "family vector outside graded span (w=" +
                     std::to_string(w) + ")";
            return false;
          }
        ++spans;
      }
      auto rep = closure_check(spec, 200);
      closure_pairs += rep.checked;
      if (!rep.ok()) {
        detail = "closure failure: " + rep.failures.front();
        return false;
      }
    }
  }
  detail = std::to_string(fixed_checked) + " family elements fixed, " +
           std::to_string(spans) + " weight bands span-matched, " +
           std::to_string(closure_pairs) + " bracket pairs closed";
  return true;
}

bool criterion7(std::string& detail) {
  // Geometric normalized family: all-ones c.
  std::vector<InvolutionParams> grid;
  for (auto [N, n] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}) {
    for (int e : {+1, -1}) {
      if (n == N) {
        for (long r : {-1L, 0L, 2L})
          grid.push_back(InvolutionParams::make(N, n, FieldElement(e), Q, r,
                                                InvolutionParams::ones(N)));
      } else {
        grid.push_back(InvolutionParams::make(N, n, FieldElement(e), Q, 0,
                                              InvolutionParams::ones(N)));
      }
    }
  }

  long checks = 0;
  for (const auto& p : grid) {
    for (FormKind kind : {FormKind::Standard, FormKind::Transpose}) {
      FormSpec spec{p.eps == minus_one ? -1 : +1, kind, p.N, p.n};
      std::vector<VectorElement> vecs;
      for (long u = -3; u <= 3; ++u)
        for (int comp = 1; comp <= p.N; ++comp)
          vecs.push_back(VectorElement::basis(p.N, u, comp));
      for (const auto& L : monomials(p.N, 2, 2)) {
        for (const auto& h : vecs) {
          for (const auto& g : vecs) {
            if (!adjoint_check(p, spec, L.value, h, g)) {
              detail = "adjointness fails: L=" + L.value.str() +
                       " h=" + h.str() + " g=" + g.str();
              return false;
            }
            ++checks;
          }
        }
      }
    }
  }

  // Block symmetry signs, frozen from the computed ground truth.
  for (auto [N, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
    FormSpec plus{+1, FormKind::Standard, N, n};
    FormSpec minus{-1, FormKind::Standard, N, n};
    if (block_symmetry(plus, true, 3) != BlockSymmetry::Symmetric ||
        block_symmetry(plus, false, 3) != BlockSymmetry::Symmetric ||
        block_symmetry(minus, true, 3) != BlockSymmetry::Antisymmetric ||
        block_symmetry(minus, false, 3) != BlockSymmetry::Symmetric) {
      detail = "block symmetry signs changed";
      return false;
    }
  }
  for (int N : {1, 2, 3}) {
    FormSpec plus{+1, FormKind::Standard, N, N};
    FormSpec minus{-1, FormKind::Standard, N, N};
    if (block_symmetry(plus, true, 4) != BlockSymmetry::Symmetric ||
        block_symmetry(minus, true, 4) != BlockSymmetry::Antisymmetric) {
      detail = "undivided symmetry signs changed";
      return false;
    }
  }

  // Windowed nondegeneracy, U = 4.
  const long U = 4;
  for (auto [N, n] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    for (int sign : {+1, -1}) {
      for (FormKind kind : {FormKind::Standard, FormKind::Transpose}) {
        FormSpec spec{sign, kind, N, n};
        for (long u = -U; u <= U; ++u) {
          for (int comp = 1; comp <= N; ++comp) {
            bool found = false;
            for (long s = -U - 1; s <= U + 1 && !found; ++s)
              for (int qc = 1; qc <= N && !found; ++qc)
                if (!form_eval(spec, VectorElement::basis(N, u, comp),
                               VectorElement::basis(N, s, qc))
                         .is_zero())
                  found = true;
            if (!found) {
              detail = "no nondegeneracy partner for z^" + std::to_string(u) +
                       " e" + std::to_string(comp);
              return false;
            }
          }
        }
      }
    }
  }

  detail = std::to_string(checks) +
           " adjointness triples; computed minus-form block signs: "
           "antisymmetric on the first block, symmetric on the second. The "
           "opposite assignment is sometimes quoted; it is inconsistent with "
           "the z^-2 / z^-1 pairing degrees, and the computed signs above are "
           "asserted as ground truth";
  return true;
}

bool criterion8(std::string& detail) {
  long checked = 0;
  int witnesses = 0, identity_pairs = 0;
  for (int N = 1; N <= 3; ++N) {
    for (int n = 1; n <= N; ++n) {
      for (const auto& p : normalized_params(N, n)) {
        if (!validate_params(p).valid()) continue;
        if (p.N == p.n && (p.r < -1 || p.r > 1)) continue;
        bool pi_identity = true;
        for (int i = 1; i <= N; ++i)
          if (pi_n(n, N, i) != i) pi_identity = false;

        bool witness_found = false;
        for (const auto& km : monomials(N, 2, 2)) {
          Element st = sigma_transpose(p, km.value);
          // conjugation back to sigma: Ad_J for n = N, diag(J_n, J_t) blocks
          // for n < N.
          Element conj = (n == N) ? apply_ad_j(st) : apply_ad_block_j(st, n);
          if (!(conj == sigma_apply(p, km.value))) {
            detail = "conjugation identity fails at " + km.value.str();
            return false;
          }
          ++checked;
          long win = weight_of(N, km.key), wout = 0;
          if (!st.homogeneous_weight(wout)) {
            detail = "sigma^T image not homogeneous";
            return false;
          }
          if (wout != win) witness_found = true;
          if (pi_identity && !(st == sigma_apply(p, km.value))) {
            detail = "sigma^T != sigma although pi_n is the identity";
            return false;
          }
        }
        if (pi_identity) {
          ++identity_pairs;  // no witness can exist; sigma^T = sigma verified
        } else if (witness_found) {
          ++witnesses;
        } else {
          detail = "no gradation-violation witness for N=" + std::to_string(N) +
                   " n=" + std::to_string(n);
          return false;
        }
      }
    }
  }
  detail = std::to_string(checked) + " conjugation identities; " +
           std::to_string(witnesses) + " parameter sets with gradation "
           "violation witnesses; " + std::to_string(identity_pairs) +
           " sets where pi_n = id and sigma^T = sigma exactly";
  return true;
}

bool criterion9(std::string& detail) {
  std::mt19937 rng(31009);
  std::uniform_int_distribution<int> Nd(1, 4), terms(0, 6), coeff(-9, 9), deg(0, 3);
  std::uniform_int_distribution<long> kd(-4, 4), md(-4, 4);
  auto random_field = [&]() {
    auto poly = [&](bool nonzero) {
      Poly p;
      int d = deg(rng);
      for (int i = 0; i <= d; ++i) p = p + Poly::monomial(Int(coeff(rng)), i);
      if (nonzero && p.is_zero()) p = Poly(1);
      return p;
    };
    return FieldElement(poly(false), poly(true));
  };
  for (int trial = 0; trial < 1000; ++trial) {
    int N = Nd(rng);
    std::uniform_int_distribution<int> idx(1, N);
    Element x(N);
    int nt = terms(rng);
    for (int t = 0; t < nt; ++t)
      x += Element::monomial(N, random_field(), kd(rng), md(rng), idx(rng),
                             idx(rng));
    Element back = parse_element(x.str(), N);
    if (!(back == x)) {
      detail = "round-trip mismatch for " + x.str();
      return false;
    }
  }
  detail = "1000 elements round-tripped";
  return true;
}

}  // namespace

int main() {
  run_criterion(1,
                "anti-involution laws (sigma^2, anti-multiplicativity, "
                "gradation) across the parameter grid",
                criterion1);
  run_criterion(2,
                "classification iff: generator extension is an anti-involution "
                "exactly on validated parameters",
                criterion2);
  run_criterion(3, "closed form agrees with the factorization oracle",
                criterion3);
  run_criterion(4, "theta and Gamma conjugation identities", criterion4);
  run_criterion(5, "N = 1 regression against the scalar family", criterion5);
  run_criterion(6,
                "fixed subalgebras: families fixed, span equality, bracket "
                "closure",
                criterion6);
  run_criterion(7,
                "geometric realization: adjointness, block symmetry signs, "
                "windowed nondegeneracy",
                criterion7);
  run_criterion(8, "transpose family: conjugation to sigma and gradation "
                   "violation witnesses",
                criterion8);
  run_criterion(9, "parser round-trip on generated canonical elements",
                criterion9);

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
