#include "wittpack/gf.hpp"

#include <algorithm>
#include <map>

namespace wittpack {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Remainder of a mod b over F_p, both low-to-high, b monic.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  const int db = int(b.size()) - 1;
  for (int d = int(a.size()) - 1; d >= db; --d) {
    int c = a[d] % p;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) {
      a[d - db + i] = ((a[d - db + i] - c * b[i]) % p + p * p) % p;
    }
  }
  a.resize(db);
  for (int& c : a) c %= p;
  return a;
}

bool is_irreducible(const std::vector<int>& m, int p) {
  const int k = int(m.size()) - 1;
  if (k == 1) return true;
  // No roots in F_p rules out linear factors (enough for k = 2, 3).
  for (int x = 0; x < p; ++x) {
    long long v = 0;
    for (int i = k; i >= 0; --i) v = (v * x + m[i]) % p;
    if (v == 0) return false;
  }
  if (k <= 3) return true;
  // Degree 4: also exclude irreducible quadratic divisors by trial division.
  for (int c1 = 0; c1 < p; ++c1) {
    for (int c0 = 0; c0 < p; ++c0) {
      std::vector<int> q = {c0, c1, 1};
      bool q_has_root = false;
      for (int x = 0; x < p && !q_has_root; ++x)
        if ((x * x + c1 * x + c0) % p == 0) q_has_root = true;
      if (q_has_root) continue;  // reducible quadratics are covered by roots
      std::vector<int> r = poly_mod(m, q, p);
      if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

namespace {

// Fields are interned for the lifetime of the process: elements carry raw
// pointers to their field, and the handful of tiny fields a run touches is
// not worth reference-counting per element.
FieldRef intern_field(FieldRef fresh) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, std::vector<int>>, FieldRef> table;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(fresh->p(), fresh->k(), fresh->modulus());
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  table.emplace(std::move(key), fresh);
  return fresh;
}

}  // namespace

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < k_; ++i) q_ *= std::uint32_t(p_);

  // Reduction rows: red_[j] = t^{k+j} mod modulus.
  if (k_ > 1) {
    std::array<int, 2 * kMaxExtensionDegree> cur{};
    for (int i = 0; i < k_; ++i) cur[i] = ((-modulus_[i]) % p_ + p_) % p_;  // t^k
    for (int j = 0; j < k_ - 1; ++j) {
      for (int i = 0; i < k_; ++i) red_[j][i] = std::uint8_t(cur[i]);
      // multiply by t
      int top = cur[k_ - 1];
      for (int i = k_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (int i = 0; i < k_; ++i) cur[i] = (cur[i] + top * red_[0][i]) % p_;
    }
  }

  // binom(p, i) via Pascal's triangle mod p^2; the division by p is exact.
  const int pp = p_ * p_;
  std::vector<int> row(p_ + 1, 0);
  row[0] = 1;
  for (int n = 1; n <= p_; ++n)
    for (int j = n; j >= 1; --j) row[j] = (row[j] + row[j - 1]) % pp;
  carry_.reserve(p_ - 1);
  for (int i = 1; i < p_; ++i) carry_.push_back(std::uint8_t((row[i] / p_) % p_));
}

FieldRef Field::make(int p, int k, const std::vector<int>& modulus) {
  if (!is_prime(p) || p % 2 == 0 || p < 3 || p > kMaxPrime)
    throw NotPrime("p must be an odd prime in [3, " + std::to_string(kMaxPrime) +
                   "], got " + std::to_string(p));
  if (k < 1 || k > kMaxExtensionDegree)
    throw DegreeOutOfRange("extension degree must be in [1, " +
                           std::to_string(kMaxExtensionDegree) + "], got " + std::to_string(k));
  if (int(modulus.size()) != k + 1)
    throw ReducibleModulus("modulus must have degree exactly k");
  std::vector<int> m(modulus);
  for (int& c : m) c = (c % p + p) % p;
  if (m[k] != 1) throw ReducibleModulus("modulus must be monic");
  if (!is_irreducible(m, p)) throw ReducibleModulus("modulus is reducible over F_p");
  return intern_field(FieldRef(new Field(p, k, std::move(m))));
}

FieldRef Field::make(int p, int k) {
  if (!is_prime(p) || p % 2 == 0 || p < 3 || p > kMaxPrime)
    throw NotPrime("p must be an odd prime in [3, " + std::to_string(kMaxPrime) +
                   "], got " + std::to_string(p));
  if (k < 1 || k > kMaxExtensionDegree)
    throw DegreeOutOfRange("extension degree must be in [1, " +
                           std::to_string(kMaxExtensionDegree) + "], got " + std::to_string(k));
  // Smallest (c_0, ..., c_{k-1}) in lexicographic order, c_0 most significant.
  std::vector<int> m(k + 1, 0);
  m[k] = 1;
  std::vector<int> idx(k, 0);
  while (true) {
    for (int i = 0; i < k; ++i) m[i] = idx[i];
    if (is_irreducible(m, p)) return intern_field(FieldRef(new Field(p, k, m)));
    int i = k - 1;
    while (i >= 0 && ++idx[i] == p) idx[i--] = 0;
    if (i < 0) break;
  }
  throw ReducibleModulus("no irreducible modulus found");  // unreachable for prime p
}

bool Field::compatible(const Field& other) const {
  return this == &other ||
         (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

void Field::check_element(const FieldElement& a) const {
  if (a.field_ == nullptr) throw FieldMismatch("uninitialized field element");
  if (!compatible(*a.field_)) throw FieldMismatch("elements belong to different fields");
}

FieldElement Field::zero() const {
  FieldElement e;
  e.field_ = this;
  return e;
}

FieldElement Field::one() const { return from_residue(1); }

FieldElement Field::from_residue(std::int64_t r) const {
  FieldElement e;
  e.field_ = this;
  e.c_[0] = std::uint8_t(((r % p_) + p_) % p_);
  return e;
}

FieldElement Field::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  if (int(coeffs.size()) > k_) throw DegreeOutOfRange("too many coefficients");
  FieldElement e;
  e.field_ = this;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    e.c_[i] = std::uint8_t(((coeffs[i] % p_) + p_) % p_);
  return e;
}

FieldElement Field::element(std::uint32_t index) const {
  if (index >= q_) throw DegreeOutOfRange("element index out of range");
  FieldElement e;
  e.field_ = this;
  for (int i = 0; i < k_; ++i) {
    e.c_[i] = std::uint8_t(index % std::uint32_t(p_));
    index /= std::uint32_t(p_);
  }
  return e;
}

std::uint32_t Field::index_of(const FieldElement& a) const {
  check_element(a);
  std::uint32_t idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * std::uint32_t(p_) + a.c_[i];
  return idx;
}

std::vector<FieldElement> Field::elements(std::uint32_t ceiling) const {
  if (q_ > ceiling)
    throw FieldTooLarge("field of size " + std::to_string(q_) +
                        " exceeds enumeration ceiling " + std::to_string(ceiling));
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.push_back(element(i));
  return out;
}

const Field& FieldElement::field() const {
  if (field_ == nullptr) throw FieldMismatch("uninitialized field element");
  return *field_;
}

bool FieldElement::is_zero() const {
  field();
  return std::all_of(c_.begin(), c_.end(), [](std::uint8_t c) { return c == 0; });
}

int FieldElement::coeff(int i) const {
  field();
  return (i >= 0 && i < field_->k_) ? c_[i] : 0;
}

std::string FieldElement::str() const {
  const Field& f = field();
  if (f.k_ == 1) return std::to_string(int(c_[0]));
  std::string out;
  for (int i = 0; i < f.k_; ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(int(c_[0]));
    } else {
      if (c_[i] != 1) out += std::to_string(int(c_[i])) + "*";
      out += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.field().check_element(b);
  return a.c_ == b.c_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = a.field();
  f.check_element(b);
  FieldElement r;
  r.field_ = a.field_;
  for (int i = 0; i < f.k_; ++i) r.c_[i] = std::uint8_t((a.c_[i] + b.c_[i]) % f.p_);
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = a.field();
  f.check_element(b);
  FieldElement r;
  r.field_ = a.field_;
  for (int i = 0; i < f.k_; ++i) r.c_[i] = std::uint8_t((a.c_[i] - b.c_[i] + f.p_) % f.p_);
  return r;
}

FieldElement operator-(const FieldElement& a) {
  const Field& f = a.field();
  FieldElement r;
  r.field_ = a.field_;
  for (int i = 0; i < f.k_; ++i) r.c_[i] = std::uint8_t((f.p_ - a.c_[i]) % f.p_);
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = a.field();
  f.check_element(b);
  const int k = f.k_, p = f.p_;
  FieldElement r;
  r.field_ = a.field_;
  if (k == 1) {
    r.c_[0] = std::uint8_t((int(a.c_[0]) * int(b.c_[0])) % p);
    return r;
  }
  std::array<int, 2 * kMaxExtensionDegree> acc{};
  for (int i = 0; i < k; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < k; ++j) acc[i + j] += int(a.c_[i]) * int(b.c_[j]);
  }
  for (int d = 2 * k - 2; d >= k; --d) {
    int v = acc[d] % p;
    if (v == 0) continue;
    const auto& row = f.red_[d - k];
    for (int i = 0; i < k; ++i) acc[i] += v * int(row[i]);
  }
  for (int i = 0; i < k; ++i) r.c_[i] = std::uint8_t(acc[i] % p);
  return r;
}

FieldElement pow(const FieldElement& a, std::int64_t n) {
  const Field& f = a.field();
  if (n < 0) return pow(inv(a), -n);
  FieldElement r = f.one();
  FieldElement base = a;
  std::uint64_t e = std::uint64_t(n);
  while (e != 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FieldElement inv(const FieldElement& a) {
  const Field& f = a.field();
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  return pow(a, std::int64_t(f.q_) - 2);
}

FieldElement frobenius(const FieldElement& a) { return pow(a, a.field().p()); }

namespace {
constexpr std::uint32_t kNone = 0xffffffffu;
}

std::optional<FieldElement> sqrt(const FieldElement& a) {
  const Field& f = a.field();
  if (f.q_ <= kEnumerationCeiling) {
    std::call_once(f.sqrt_once_, [&f] {
      f.sqrt_table_.assign(f.q_, kNone);
      for (std::uint32_t i = 0; i < f.q_; ++i) {
        FieldElement b = f.element(i);
        std::uint32_t s = f.index_of(b * b);
        if (f.sqrt_table_[s] == kNone) f.sqrt_table_[s] = i;
      }
    });
    std::uint32_t r = f.sqrt_table_[f.index_of(a)];
    if (r == kNone) return std::nullopt;
    return f.element(r);
  }
  for (std::uint32_t i = 0; i < f.q_; ++i) {
    FieldElement b = f.element(i);
    if (b * b == a) return b;
  }
  return std::nullopt;
}

bool in_prime_subfield(const FieldElement& a) {
  const Field& f = a.field();
  for (int i = 1; i < f.k(); ++i)
    if (a.coeff(i) != 0) return false;
  return true;
}

FieldElement embed(const FieldElement& a, const Field& target) {
  const Field& src = a.field();
  if (src.compatible(target)) {
    std::vector<std::int64_t> c;
    for (int i = 0; i < src.k(); ++i) c.push_back(a.coeff(i));
    return target.from_coeffs(c);
  }
  if (src.p() != target.p() || target.k() % src.k() != 0)
    throw FieldMismatch("no embedding between these fields");
  if (src.k() == 1) return target.from_residue(a.coeff(0));

  // Map t to the first root of the source modulus in the target field.
  static std::mutex mu;
  static std::map<std::pair<const Field*, const Field*>, FieldElement> cache;
  std::optional<FieldElement> root;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({&src, &target});
    if (it != cache.end()) root = it->second;
  }
  if (!root) {
    for (std::uint32_t i = 0; i < target.size() && !root; ++i) {
      FieldElement cand = target.element(i);
      FieldElement v = target.zero();
      for (int d = src.k(); d >= 0; --d) v = v * cand + target.from_residue(src.modulus()[d]);
      if (v.is_zero()) root = cand;
    }
    if (!root) throw FieldMismatch("modulus has no root in target field");  // unreachable
    std::lock_guard<std::mutex> lock(mu);
    cache.insert({{&src, &target}, *root});
  }
  FieldElement out = target.zero();
  for (int d = src.k() - 1; d >= 0; --d) out = out * (*root) + target.from_residue(a.coeff(d));
  return out;
}

}  // namespace wittpack
