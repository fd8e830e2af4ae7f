#include "qpdo/subalgebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace qpdo {

Element fixed_project(const InvolutionParams& p, const Element& a) {
  return a - sigma_apply(p, a);
}

bool is_fixed(const InvolutionParams& p, const Element& a) {
  return sigma_apply(p, a) == -a;
}

namespace {

struct FamilyPos {
  int row, col;  // position of the leading term
};

// Leading-term position and the q-power normalization exponent style for a
// family: the M/B/C and full families use the q^{(k-1)e/2} normalization,
// the D families use q^{ke/2}.
FamilyPos family_position(const InvolutionParams& p, FamilyTag tag, int i,
                          int j) {
  const int N = p.N, n = p.n, t = N - n;
  auto need = [](bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
  };
  switch (tag) {
    case FamilyTag::MOffdiag:
      need(n < N, "M family requires n < N");
      need(1 <= i && i < j && j <= n, "M-offdiag requires 1 <= i < j <= n");
      return {i, n + 1 - j};
    case FamilyTag::MAntidiag:
      need(n < N, "M family requires n < N");
      need(1 <= i && i <= n, "M-antidiag requires 1 <= i <= n");
      return {i, n + 1 - i};
    case FamilyTag::BC:
      need(n < N, "B/C family requires n < N");
      need(1 <= i && i <= n && 1 <= j && j <= t,
           "B/C requires i in [1..n], j in [1..t]");
      return {i, n + j};
    case FamilyTag::DOffdiag:
      need(n < N, "D family requires n < N");
      need(1 <= i && i < j && j <= t, "D-offdiag requires 1 <= i < j <= t");
      return {n + i, N + 1 - j};
    case FamilyTag::DAntidiag:
      need(n < N, "D family requires n < N");
      need(1 <= i && i <= t, "D-antidiag requires 1 <= i <= t");
      return {n + i, N + 1 - i};
    case FamilyTag::FullOffdiag:
      need(n == N, "full family requires n = N");
      need(1 <= i && i < j && j <= N, "full-offdiag requires 1 <= i < j <= N");
      return {i, N + 1 - j};
    case FamilyTag::FullAntidiag:
      need(n == N, "full family requires n = N");
      need(1 <= i && i <= N, "full-antidiag requires 1 <= i <= N");
      return {i, N + 1 - i};
  }
  throw std::invalid_argument("unknown family tag");
}

bool is_d_block(FamilyTag tag) {
  return tag == FamilyTag::DOffdiag || tag == FamilyTag::DAntidiag;
}

bool is_antidiag(FamilyTag tag) {
  return tag == FamilyTag::MAntidiag || tag == FamilyTag::DAntidiag ||
         tag == FamilyTag::FullAntidiag;
}

}  // namespace

Element generator_element(const InvolutionParams& p, FamilyTag tag, int i,
                          int j, long k, long e) {
  require_valid(p);
  FamilyPos pos = family_position(p, tag, i, j);
  // Leading term z^k q^{(k-1)e/2} T^e (or q^{ke/2} in the D block); its
  // sigma-image supplies the paired term with the parameter-correct sign.
  long vexp = is_d_block(tag) ? k * e : (k - 1) * e;
  Element x = Element::monomial(p.N, FieldElement::v_power(vexp), k, e,
                                pos.row, pos.col);
  return x - sigma_apply(p, x);
}

std::vector<FamilyTag> family_tags(const InvolutionParams& p) {
  if (p.n == p.N) return {FamilyTag::FullOffdiag, FamilyTag::FullAntidiag};
  return {FamilyTag::MOffdiag, FamilyTag::MAntidiag, FamilyTag::BC,
          FamilyTag::DOffdiag, FamilyTag::DAntidiag};
}

std::vector<FamilyElement> generator_family(const FixedSubalgebraSpec& spec,
                                            FamilyTag tag) {
  const InvolutionParams& p = spec.params;
  require_valid(p);
  const int N = p.N, n = p.n, t = N - n;

  const bool full_tag =
      tag == FamilyTag::FullOffdiag || tag == FamilyTag::FullAntidiag;
  if (full_tag != (n == N))
    throw std::invalid_argument("family tag does not match n vs N");

  std::vector<std::pair<int, int>> idx;
  switch (tag) {
    case FamilyTag::MOffdiag:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) idx.emplace_back(i, j);
      break;
    case FamilyTag::MAntidiag:
      for (int i = 1; i <= n; ++i) idx.emplace_back(i, i);
      break;
    case FamilyTag::BC:
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= t; ++j) idx.emplace_back(i, j);
      break;
    case FamilyTag::DOffdiag:
      for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j) idx.emplace_back(i, j);
      break;
    case FamilyTag::DAntidiag:
      for (int i = 1; i <= t; ++i) idx.emplace_back(i, i);
      break;
    case FamilyTag::FullOffdiag:
      for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) idx.emplace_back(i, j);
      break;
    case FamilyTag::FullAntidiag:
      for (int i = 1; i <= N; ++i) idx.emplace_back(i, i);
      break;
  }

  std::vector<FamilyElement> out;
  for (auto [i, j] : idx) {
    for (long k = spec.zmin; k <= spec.zmax; ++k) {
      for (long e = spec.tmin; e <= spec.tmax; ++e) {
        // The antidiagonal families pair e with kr - e at the same
        // position; keep one representative per pair.
        if (is_antidiag(tag) && 2 * e < k * p.r) continue;
        Element g = generator_element(p, tag, i, j, k, e);
        if (g.is_zero()) continue;
        out.push_back({tag, k, e, i, j, std::move(g)});
      }
    }
  }
  return out;
}

std::vector<Element> row_reduce(const std::vector<Element>& rows) {
  std::vector<Element> basis;  // each with a distinct leading (pivot) key
  for (const Element& row : rows) {
    Element cur = row;
    for (const Element& b : basis) {
      if (cur.is_zero()) break;
      const auto& pivot = b.terms().begin()->first;
      FieldElement c = cur.coeff(pivot);
      if (!c.is_zero()) cur = cur - b.scaled(c);
    }
    if (cur.is_zero()) continue;
    // Normalize the pivot coefficient to 1.
    cur = cur.scaled(cur.terms().begin()->second.inverse());
    // Back-substitute to keep earlier rows reduced against the new pivot.
    for (Element& b : basis) {
      FieldElement c = b.coeff(cur.terms().begin()->first);
      if (!c.is_zero()) b = b - cur.scaled(c);
    }
    basis.push_back(std::move(cur));
    // Keep deterministic pivot order: sort by pivot key.
    std::sort(basis.begin(), basis.end(), [](const Element& a, const Element& b) {
      return a.terms().begin()->first < b.terms().begin()->first;
    });
  }
  return basis;
}

bool in_span(const std::vector<Element>& basis, const Element& x) {
  std::vector<Element> reduced = row_reduce(basis);
  Element cur = x;
  for (const Element& b : reduced) {
    if (cur.is_zero()) return true;
    FieldElement c = cur.coeff(b.terms().begin()->first);
    if (!c.is_zero()) cur = cur - b.scaled(c);
  }
  return cur.is_zero();
}

namespace {

bool support_in_window(const Element& x, const FixedSubalgebraSpec& spec) {
  for (const auto& [key, c] : x.terms()) {
    (void)c;
    if (key.k < spec.zmin || key.k > spec.zmax) return false;
    if (key.m < spec.tmin || key.m > spec.tmax) return false;
  }
  return true;
}

}  // namespace

std::vector<Element> graded_basis(const FixedSubalgebraSpec& spec, long w) {
  const InvolutionParams& p = spec.params;
  require_valid(p);
  const int N = p.N;
  std::vector<Element> projections;
  for (long k = spec.zmin; k <= spec.zmax; ++k) {
    for (int i = 1; i <= N; ++i) {
      for (int j = 1; j <= N; ++j) {
        if (weight_of(N, MonoKey{k, 0, i, j}) != w) continue;
        for (long m = spec.tmin; m <= spec.tmax; ++m) {
          Element x = Element::monomial(N, FieldElement(1), k, m, i, j);
          Element proj = fixed_project(p, x);
          if (proj.is_zero()) continue;
          if (!support_in_window(proj, spec)) continue;
          projections.push_back(std::move(proj));
        }
      }
    }
  }
  return row_reduce(projections);
}

std::map<long, int> dim_table(const FixedSubalgebraSpec& spec, long wmin,
                              long wmax) {
  std::map<long, int> out;
  for (long w = wmin; w <= wmax; ++w)
    out[w] = static_cast<int>(graded_basis(spec, w).size());
  return out;
}

ClosureReport closure_check(const FixedSubalgebraSpec& spec, int samples,
                            unsigned seed) {
  const InvolutionParams& p = spec.params;
  require_valid(p);
  ClosureReport rep;

  std::vector<Element> pool;
  const long wspan = spec.params.N * std::max(std::labs(spec.zmin),
                                              std::labs(spec.zmax)) +
                     spec.params.N;
  for (long w = -wspan; w <= wspan; ++w)
    for (Element& b : graded_basis(spec, w)) pool.push_back(std::move(b));
  if (pool.empty()) return rep;

  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int s = 0; s < samples; ++s) {
    const Element& x = pool[pick(rng)];
    const Element& y = pool[pick(rng)];
    Element br = bracket(x, y);
    ++rep.checked;
    if (is_fixed(p, br)) {
      ++rep.passed;
    } else if (rep.failures.size() < 10) {
      rep.failures.push_back("[x,y] not fixed for x=" + x.str() +
                             " y=" + y.str());
    }
  }
  return rep;
}

}  // namespace qpdo
