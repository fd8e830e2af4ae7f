#include "qpdo/rational.hpp"

#include <numeric>
#include <utility>

namespace qpdo {

namespace {

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced mod b.
Poly pseudo_rem(Poly a, const Poly& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    // a <- lc(b)*a - lc(a)*v^(da-db)*b
    Poly lead = Poly::monomial(a.leading(), a.degree() - db);
    a = a * Poly(b.leading()) - lead * b;
  }
  return a;
}

}  // namespace

void Poly::trim_() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

Poly Poly::monomial(Int c, int deg) {
  Poly p;
  if (c == 0) return p;
  p.coef_.assign(deg + 1, Int(0));
  p.coef_[deg] = std::move(c);
  return p;
}

Int Poly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coef_.size())) return Int(0);
  return coef_[d];
}

const Int& Poly::leading() const {
  static const Int zero(0);
  return coef_.empty() ? zero : coef_.back();
}

bool Poly::is_monomial() const {
  if (coef_.empty()) return false;
  for (size_t d = 0; d + 1 < coef_.size(); ++d)
    if (coef_[d] != 0) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.coef_.resize(std::max(coef_.size(), o.coef_.size()), Int(0));
  for (size_t d = 0; d < coef_.size(); ++d) r.coef_[d] += coef_[d];
  for (size_t d = 0; d < o.coef_.size(); ++d) r.coef_[d] += o.coef_[d];
  r.trim_();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (is_zero() || o.is_zero()) return r;
  r.coef_.assign(coef_.size() + o.coef_.size() - 1, Int(0));
  for (size_t a = 0; a < coef_.size(); ++a) {
    if (coef_[a] == 0) continue;
    for (size_t b = 0; b < o.coef_.size(); ++b)
      r.coef_[a + b] += coef_[a] * o.coef_[b];
  }
  r.trim_();
  return r;
}

Int Poly::content() const {
  Int g(0);
  for (const auto& c : coef_) g = int_gcd(g, c);
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return Poly();
  Int g = content();
  if (leading() < 0) g = -g;
  Poly r = *this;
  for (auto& c : r.coef_) c /= g;
  return r;
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = *this;
  if (rem.is_zero()) return Poly();
  int dq = rem.degree() - d.degree();
  if (dq < 0) throw std::domain_error("inexact polynomial division");
  Poly quot;
  quot.coef_.assign(dq + 1, Int(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    if (rem.leading() % d.leading() != 0)
      throw std::domain_error("inexact polynomial division");
    Int c = rem.leading() / d.leading();
    int deg = rem.degree() - d.degree();
    quot.coef_[deg] = c;
    rem = rem - Poly::monomial(c, deg) * d;
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  quot.trim_();
  return quot;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? Poly() : b.primitive_part() * Poly(b.content());
  if (b.is_zero()) return a.primitive_part() * Poly(a.content());
  Int c = int_gcd(a.content(), b.content());
  Poly pa = a.primitive_part(), pb = b.primitive_part();
  while (!pb.is_zero()) {
    Poly pr = pseudo_rem(pa, pb).primitive_part();
    pa = std::move(pb);
    pb = std::move(pr);
  }
  return pa.primitive_part() * Poly(c);
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    Int c = coeff(d);
    if (c == 0) continue;
    bool neg = c < 0;
    Int a = neg ? Int(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    if (d == 0) {
      out += a.str();
    } else {
      if (a != 1) out += a.str() + "*";
      out += (d == 1) ? "v" : "v^" + std::to_string(d);
    }
  }
  return out;
}

FieldElement::FieldElement(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce_();
}

void FieldElement::reduce_() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  num_ = num_.exact_div(g);
  den_ = den_.exact_div(g);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

FieldElement FieldElement::v_power(long e) {
  if (e >= 0) return FieldElement(Poly::monomial(Int(1), static_cast<int>(e)));
  return FieldElement(Poly(1), Poly::monomial(Int(1), static_cast<int>(-e)));
}

FieldElement FieldElement::q_power_frac(long num, long den) {
  if (den == 0) throw std::domain_error("zero exponent denominator");
  if (den < 0) { num = -num; den = -den; }
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g != 0) { num /= g; den /= g; }
  if (den > 2) throw std::domain_error("q exponent is not a half-integer");
  return den == 1 ? q_power(num) : v_power(num);
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.num_ = -r.num_;
  return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return FieldElement(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  return FieldElement(num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return FieldElement(num_ * o.den_, den_ * o.num_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return FieldElement(den_, num_);
}

FieldElement FieldElement::pow(long e) const {
  if (e == 0) return FieldElement(1);
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string FieldElement::str() const {
  if (den_ == Poly(1)) return num_.str();
  auto wrap = [](const Poly& p) {
    std::string s = p.str();
    bool atom = p.is_monomial() && p.leading() > 0 &&
                (p.degree() == 0 || p.leading() == 1);
    return atom ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace qpdo
