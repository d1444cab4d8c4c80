#include "wittpack/poly.hpp"

#include <algorithm>

namespace wittpack {

namespace {

void trim(std::vector<FieldElement>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void check_same_field(const Poly& a, const Poly& b) {
  if (!a.field()->compatible(*b.field()))
    throw FieldMismatch("polynomials over different fields");
}

FieldElement embed_coeff(const FieldElement& c, const Field& target) {
  if (c.field().compatible(target)) return embed(c, target);
  if (c.field().k() == 1 && c.field().p() == target.p())
    return target.from_residue(c.coeff(0));
  throw FieldMismatch("cannot evaluate: coefficients do not embed into the point's field");
}

std::string term_str(const FieldElement& c, int e, const std::string& var) {
  std::string cs = c.str();
  std::string out;
  if (e == 0) return cs;
  if (cs != "1") {
    if (cs.find('+') != std::string::npos || cs.find('*') != std::string::npos)
      out += "(" + cs + ")";
    else
      out += cs;
  }
  out += var;
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

}  // namespace

Poly::Poly(FieldRef field) : field_(std::move(field)) {}

Poly::Poly(FieldRef field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_) field_->check_element(c);
  trim(c_);
}

Poly Poly::from_terms(const FieldRef& field, const std::map<int, std::int64_t>& terms) {
  std::vector<FieldElement> c;
  for (const auto& [e, v] : terms) {
    if (e < 0) throw DegreeOutOfRange("negative exponent in polynomial");
    if (int(c.size()) <= e) c.resize(e + 1, field->zero());
    c[e] = field->from_residue(v);
  }
  return Poly(field, std::move(c));
}

Poly Poly::monomial(const FieldRef& field, int degree, const FieldElement& c) {
  std::vector<FieldElement> v(degree + 1, field->zero());
  v[degree] = c;
  return Poly(field, std::move(v));
}

FieldElement Poly::coeff(int i) const {
  return (i >= 0 && i < int(c_.size())) ? c_[i] : field_->zero();
}

FieldElement Poly::operator()(const FieldElement& x) const {
  const Field& fx = x.field();
  FieldElement acc = fx.zero();
  for (int i = int(c_.size()) - 1; i >= 0; --i) acc = acc * x + embed_coeff(c_[i], fx);
  return acc;
}

bool operator==(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  std::vector<FieldElement> c(std::max(a.coeffs().size(), b.coeffs().size()), a.field()->zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
  return Poly(a.field(), std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  std::vector<FieldElement> c(std::max(a.coeffs().size(), b.coeffs().size()), a.field()->zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
  return Poly(a.field(), std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  std::vector<FieldElement> c(a.coeffs().size() + b.coeffs().size() - 1, a.field()->zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
  }
  return Poly(a.field(), std::move(c));
}

Poly operator*(const FieldElement& s, const Poly& a) {
  std::vector<FieldElement> c(a.coeffs());
  for (auto& x : c) x = s * x;
  return Poly(a.field(), std::move(c));
}

Poly derivative(const Poly& a) {
  if (a.degree() < 1) return Poly(a.field());
  std::vector<FieldElement> c;
  c.reserve(a.degree());
  for (int i = 1; i <= a.degree(); ++i)
    c.push_back(a.field()->from_residue(i) * a.coeff(i));
  return Poly(a.field(), std::move(c));
}

Poly interpolate(const FieldRef& field,
                 const std::vector<std::pair<FieldElement, FieldElement>>& points) {
  if (points.empty()) throw DuplicateAbscissa("interpolation needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw DuplicateAbscissa("duplicate abscissa " + points[i].first.str());

  // master = prod (x - x_j); per-point basis by synthetic division
  std::vector<FieldElement> master = {field->one()};
  for (const auto& [x, y] : points) {
    std::vector<FieldElement> next(master.size() + 1, field->zero());
    for (std::size_t i = 0; i < master.size(); ++i) {
      next[i + 1] = next[i + 1] + master[i];
      next[i] = next[i] - x * master[i];
    }
    master = std::move(next);
  }
  std::vector<FieldElement> acc(points.size(), field->zero());
  for (const auto& [xi, yi] : points) {
    // q = master / (x - xi)
    std::vector<FieldElement> q(points.size(), field->zero());
    FieldElement carry = field->zero();
    for (int d = int(points.size()); d >= 1; --d) {
      carry = master[d] + xi * carry;
      q[d - 1] = carry;
    }
    FieldElement den = field->zero();
    {
      FieldElement xp = field->one();
      for (std::size_t i = 0; i < q.size(); ++i) {
        den = den + q[i] * xp;
        xp = xp * xi;
      }
    }
    FieldElement scale = yi * inv(den);
    for (std::size_t i = 0; i < q.size(); ++i) acc[i] = acc[i] + scale * q[i];
  }
  return Poly(field, std::move(acc));
}

std::vector<FieldElement> roots(const Poly& a, int ext_k, std::uint32_t ceiling) {
  if (a.is_zero()) throw ZeroPolynomial("root finding on the zero polynomial");
  FieldRef target;
  if (ext_k == a.field()->k()) {
    target = a.field();
  } else if (a.field()->k() == 1) {
    target = Field::make(a.field()->p(), ext_k);
  } else {
    throw FieldMismatch("roots: coefficient field must be prime or match ext_k");
  }
  std::vector<FieldElement> out;
  for (const FieldElement& x : target->elements(ceiling))
    if (a(x).is_zero()) out.push_back(x);
  return out;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw DivisionByZeroPolynomial("division by the zero polynomial");
  std::vector<FieldElement> r(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {Poly(a.field()), a};
  std::vector<FieldElement> q(a.degree() - db + 1, a.field()->zero());
  FieldElement lead_inv = inv(b.coeff(db));
  for (int d = a.degree(); d >= db; --d) {
    FieldElement c = r[d] * lead_inv;
    if (c.is_zero()) continue;
    q[d - db] = c;
    for (int i = 0; i <= db; ++i) r[d - db + i] = r[d - db + i] - c * b.coeff(i);
  }
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

bool coeffs_in_prime_subfield(const Poly& a) {
  return std::all_of(a.coeffs().begin(), a.coeffs().end(),
                     [](const FieldElement& c) { return in_prime_subfield(c); });
}

Poly to_prime_field(const Poly& a) {
  if (!coeffs_in_prime_subfield(a))
    throw FieldMismatch("coefficients do not all lie in the prime subfield");
  FieldRef fp = Field::make(a.field()->p(), 1);
  std::vector<FieldElement> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(fp->from_residue(x.coeff(0)));
  return Poly(fp, std::move(c));
}

bool is_odd_polynomial(const Poly& a) {
  for (int i = 0; i <= a.degree(); i += 2)
    if (!a.coeff(i).is_zero()) return false;
  return true;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    if (c_[e].is_zero()) continue;
    if (!out.empty()) out += "+";
    out += term_str(c_[e], e, var);
  }
  return out;
}

LaurentPoly::LaurentPoly(FieldRef field) : field_(std::move(field)) {}

LaurentPoly::LaurentPoly(FieldRef field, int offset, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), offset_(offset), c_(std::move(coeffs)) {
  for (const auto& c : c_) field_->check_element(c);
  trim(c_);
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + long(lead));
    offset_ += int(lead);
  }
  if (c_.empty()) offset_ = 0;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p, int shift) {
  return LaurentPoly(p.field(), shift, p.coeffs());
}

FieldElement LaurentPoly::coeff(int exponent) const {
  int i = exponent - offset_;
  return (i >= 0 && i < int(c_.size())) ? c_[i] : field_->zero();
}

std::vector<int> LaurentPoly::support() const {
  std::vector<int> s;
  for (int i = 0; i < int(c_.size()); ++i)
    if (!c_[i].is_zero()) s.push_back(offset_ + i);
  return s;
}

FieldElement LaurentPoly::operator()(const FieldElement& x) const {
  if (x.is_zero()) throw DivisionByZero("Laurent evaluation at zero");
  const Field& fx = x.field();
  FieldElement acc = fx.zero();
  for (int i = int(c_.size()) - 1; i >= 0; --i)
    acc = acc * x + embed_coeff(c_[i], fx);
  return acc * pow(x, offset_);
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.field()->compatible(*b.field()))
    throw FieldMismatch("Laurent polynomials over different fields");
  if (a.offset_ != b.offset_ || a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.min_exp(), b.min_exp());
  int hi = std::max(a.max_exp(), b.max_exp());
  std::vector<FieldElement> c;
  c.reserve(hi - lo + 1);
  for (int e = lo; e <= hi; ++e) c.push_back(a.coeff(e) + b.coeff(e));
  return LaurentPoly(a.field(), lo, std::move(c));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.field());
  int lo = a.min_exp() + b.min_exp();
  std::vector<FieldElement> c(std::size_t(a.max_exp() - a.min_exp() + b.max_exp() - b.min_exp() + 1),
                              a.field()->zero());
  for (int i = a.min_exp(); i <= a.max_exp(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = b.min_exp(); j <= b.max_exp(); ++j)
      c[std::size_t(i + j - lo)] = c[std::size_t(i + j - lo)] + a.coeff(i) * b.coeff(j);
  }
  return LaurentPoly(a.field(), lo, std::move(c));
}

LaurentPoly laurent_substitute(const Poly& f, int scale, int pre) {
  if (scale == 0) throw DegreeOutOfRange("exponent scale must be nonzero");
  if (f.is_zero()) return LaurentPoly(f.field());
  int e0 = pre, e1 = pre + scale * f.degree();
  int lo = std::min(e0, e1), hi = std::max(e0, e1);
  std::vector<FieldElement> c(std::size_t(hi - lo + 1), f.field()->zero());
  for (int i = 0; i <= f.degree(); ++i) {
    int e = pre + scale * i;
    c[std::size_t(e - lo)] = c[std::size_t(e - lo)] + f.coeff(i);
  }
  return LaurentPoly(f.field(), lo, std::move(c));
}

std::optional<FieldElement> equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return a.field()->one();  // zero-equals-zero convention
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  if (a.min_exp() != b.min_exp() || a.max_exp() != b.max_exp()) return std::nullopt;
  FieldElement c = a.coeff(a.min_exp()) * inv(b.coeff(b.min_exp()));
  for (int e = a.min_exp(); e <= a.max_exp(); ++e)
    if (a.coeff(e) != c * b.coeff(e)) return std::nullopt;
  return c;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = max_exp(); e >= min_exp(); --e) {
    FieldElement c = coeff(e);
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    out += term_str(c, e, var);
  }
  return out;
}

}  // namespace wittpack
