#include "qpdo/element.hpp"

#include <stdexcept>

namespace qpdo {

Element::Element(int N) : N_(N) {
  if (N < 1) throw std::invalid_argument("matrix size must be positive");
}

Element Element::monomial(int N, const FieldElement& c, long k, long m, int i, int j) {
  Element e(N);
  e.add_term(c, k, m, i, j);
  return e;
}

Element Element::identity(int N) { return scalar(N, FieldElement(1)); }

Element Element::scalar(int N, const FieldElement& c) {
  return scalar_op(N, c, 0, 0);
}

Element Element::scalar_op(int N, const FieldElement& c, long k, long m) {
  Element e(N);
  for (int i = 1; i <= N; ++i) e.add_term(c, k, m, i, i);
  return e;
}

Element Element::canonicalize(int N, const std::vector<RawTerm>& raw) {
  Element e(N);
  for (const auto& t : raw) e.add_term(t.coeff, t.k, t.m, t.i, t.j);
  return e;
}

void Element::add_term(const FieldElement& c, long k, long m, int i, int j) {
  if (i < 1 || i > N_ || j < 1 || j > N_)
    throw std::invalid_argument("matrix index out of range");
  if (c.is_zero()) return;
  MonoKey key{k, m, i, j};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElement Element::coeff(const MonoKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? FieldElement() : it->second;
}

Element Element::operator-() const {
  Element r(N_);
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
  return r;
}

Element Element::operator+(const Element& o) const {
  if (N_ != o.N_) throw std::invalid_argument("size mismatch");
  Element r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(c, key.k, key.m, key.i, key.j);
  return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::scaled(const FieldElement& c) const {
  Element r(N_);
  if (c.is_zero()) return r;
  for (const auto& [key, t] : terms_) r.terms_.emplace(key, t * c);
  return r;
}

Element multiply(const Element& a, const Element& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  Element r(a.size());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.j != kb.i) continue;
      // q^{k2*m1} from commuting T^{m1} past z^{k2}.
      FieldElement c = ca * cb * FieldElement::q_power(kb.k * ka.m);
      r.add_term(c, ka.k + kb.k, ka.m + kb.m, ka.i, kb.j);
    }
  }
  return r;
}

Element bracket(const Element& a, const Element& b) {
  return multiply(a, b) - multiply(b, a);
}

Element Element::pow(long e) const {
  if (e == 0) return identity(N_);
  if (e > 0) {
    Element acc = *this;
    for (long i = 1; i < e; ++i) acc = multiply(acc, *this);
    return acc;
  }
  // Invertible only for c * z^k T^m * identity.
  if (static_cast<int>(terms_.size()) != N_)
    throw std::invalid_argument("cannot invert a non-scalar operator");
  const MonoKey& first = terms_.begin()->first;
  const FieldElement& c0 = terms_.begin()->second;
  for (const auto& [key, c] : terms_) {
    if (key.i != key.j || key.k != first.k || key.m != first.m || !(c == c0))
      throw std::invalid_argument("cannot invert a non-scalar operator");
  }
  // (z^k T^m)^{-1} = q^{km} z^{-k} T^{-m}.
  Element inv = scalar_op(N_, c0.inverse() * FieldElement::q_power(first.k * first.m),
                          -first.k, -first.m);
  return inv.pow(-e);
}

std::map<long, Element> Element::graded_decompose() const {
  std::map<long, Element> bands;
  for (const auto& [key, c] : terms_) {
    long w = weight_of(N_, key);
    auto it = bands.find(w);
    if (it == bands.end()) it = bands.emplace(w, Element(N_)).first;
    it->second.add_term(c, key.k, key.m, key.i, key.j);
  }
  return bands;
}

bool Element::homogeneous_weight(long& w) const {
  bool first = true;
  for (const auto& [key, c] : terms_) {
    (void)c;
    long kw = weight_of(N_, key);
    if (first) {
      w = kw;
      first = false;
    } else if (kw != w) {
      return false;
    }
  }
  return true;
}

TriangularSplit Element::triangular_split() const {
  TriangularSplit t{Element(N_), Element(N_), Element(N_)};
  for (const auto& [key, c] : terms_) {
    long w = weight_of(N_, key);
    Element& dst = w > 0 ? t.plus : (w < 0 ? t.minus : t.zero);
    dst.add_term(c, key.k, key.m, key.i, key.j);
  }
  return t;
}

namespace {

// Renders a coefficient as grammar-safe '*'-joined factor strings (no '/'),
// splitting off the overall sign.  1/x prints as x^-1.
void coeff_pieces(const FieldElement& c, bool& neg, std::vector<std::string>& out) {
  Poly num = c.num();
  neg = num.leading() < 0;
  if (neg) num = -num;
  if (num.is_monomial()) {
    Int a = num.leading();
    int d = num.degree();
    if (a != 1) out.push_back(a.str());
    if (d == 1) out.push_back("v");
    else if (d > 1) out.push_back("v^" + std::to_string(d));
  } else {
    out.push_back("(" + num.str() + ")");
  }
  const Poly& den = c.den();
  if (den == Poly(1)) return;
  if (den.is_monomial()) {
    Int a = den.leading();
    int d = den.degree();
    if (a == 1) {
      out.push_back("v^" + std::to_string(-d));
      return;
    }
    if (d == 0) {
      out.push_back(a.str() + "^-1");
      return;
    }
  }
  out.push_back("(" + den.str() + ")^-1");
}

}  // namespace

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    bool neg = false;
    std::vector<std::string> pieces;
    coeff_pieces(c, neg, pieces);
    if (key.k == 1) pieces.push_back("z");
    else if (key.k != 0) pieces.push_back("z^" + std::to_string(key.k));
    if (key.m == 1) pieces.push_back("T");
    else if (key.m != 0) pieces.push_back("T^" + std::to_string(key.m));
    pieces.push_back("E[" + std::to_string(key.i) + "," + std::to_string(key.j) + "]");

    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    for (size_t p = 0; p < pieces.size(); ++p) {
      if (p) out += "*";
      out += pieces[p];
    }
  }
  return out;
}

}  // namespace qpdo
