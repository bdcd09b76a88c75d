#include "affa/cyclotomic.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace affa {

namespace {

using Poly = std::vector<mpq_class>;

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  std::vector<long> q(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial m.
Poly reduce_mod(Poly p, const std::vector<long>& m) {
  int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= dm; --i) {
    if (p[i] == 0) continue;
    mpq_class c = p[i];
    for (int j = 0; j <= dm; ++j) p[i - dm + j] -= c * m[j];
  }
  p.resize(dm);
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Polynomial division with remainder over Q.
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    mpq_class c = a[i] / b[db];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  r = a;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic order must be positive");
  thread_local std::unordered_map<int, std::vector<long>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<long> num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) num = poly_divide_exact(num, cyclotomic_polynomial(e));
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  return cache.emplace(d, std::move(num)).first->second;
}

int euler_phi(int d) { return static_cast<int>(cyclotomic_polynomial(d).size()) - 1; }

int lcm_order(int a, int b) { return std::lcm(a, b); }

Cyclo::Cyclo(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  c_.assign(euler_phi(order), 0);
}

Cyclo Cyclo::from_rational(const mpq_class& q, int order) {
  Cyclo r(order);
  r.c_[0] = q;
  r.c_[0].canonicalize();
  return r;
}

Cyclo Cyclo::canonicalize(const std::vector<mpq_class>& poly, int order) {
  Cyclo r(order);
  Poly p = poly;
  if (static_cast<int>(p.size()) < euler_phi(order)) p.resize(euler_phi(order), 0);
  r.c_ = reduce_mod(std::move(p), cyclotomic_polynomial(order));
  for (auto& c : r.c_) c.canonicalize();
  return r;
}

Cyclo Cyclo::root_power(int order, long k) {
  long e = ((k % order) + order) % order;
  Poly p(e + 1, 0);
  p[e] = 1;
  return canonicalize(p, order);
}

std::vector<mpq_class> Cyclo::padded() const {
  std::vector<mpq_class> p = c_;
  p.resize(order_, 0);
  return p;
}

bool Cyclo::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyclo Cyclo::embed(int target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) throw std::invalid_argument("embed: target order not a multiple");
  int s = target / order_;
  Poly p(static_cast<size_t>(s) * (c_.size() ? c_.size() - 1 : 0) + 1, 0);
  for (size_t k = 0; k < c_.size(); ++k) p[k * s] = c_[k];
  return canonicalize(p, target);
}

Cyclo Cyclo::conj() const {
  Poly p(order_, 0);
  for (size_t k = 0; k < c_.size(); ++k) p[(order_ - static_cast<int>(k)) % order_] += c_[k];
  return canonicalize(p, order_);
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // extended Euclid: find s with s*a = 1 mod Phi
  const auto& phi = cyclotomic_polynomial(order_);
  Poly m(phi.begin(), phi.end());
  Poly a = c_;
  trim(a);
  Poly r0 = m, r1 = a, s0{}, s1{mpq_class(1)};
  while (!(r1.size() == 1)) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw std::logic_error("inverse: non-invertible element");
  }
  mpq_class inv = 1 / r1[0];
  for (auto& c : s1) c *= inv;
  return canonicalize(s1, order_);
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result = one(order_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> s = 0;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    double ang = 2.0 * M_PI * static_cast<double>(k) / order_;
    s += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    mpq_class c = c_[k];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "z" << order_;
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

Cyclo arith(ArithOp op, const Cyclo& a, const Cyclo* b) {
  if (op == ArithOp::Neg) return -a;
  if (op == ArithOp::Conj) return a.conj();
  if (!b) throw std::invalid_argument("arith: missing operand");
  if (a.order() != b->order()) throw std::invalid_argument("arith: mismatched root orders");
  return op == ArithOp::Add ? a + *b : a * *b;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  if (a.order_ != b.order_) {
    int d = lcm_order(a.order_, b.order_);
    return a.embed(d) + b.embed(d);
  }
  Cyclo r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.order_ != b.order_) {
    int d = lcm_order(a.order_, b.order_);
    return a.embed(d) * b.embed(d);
  }
  if (a.is_rational() || b.is_rational()) {
    const Cyclo& s = a.is_rational() ? a : b;
    const Cyclo& o = a.is_rational() ? b : a;
    Cyclo r = o;
    for (auto& c : r.c_) c *= s.c_[0];
    return r;
  }
  return Cyclo::canonicalize(poly_mul(a.c_, b.c_), a.order_);
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) {
  if (a.order_ != b.order_) {
    int d = lcm_order(a.order_, b.order_);
    return a.embed(d) / b.embed(d);
  }
  return a * b.inverse();
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.order_ != b.order_) {
    int d = lcm_order(a.order_, b.order_);
    return a.embed(d).c_ == b.embed(d).c_;
  }
  return a.c_ == b.c_;
}

}  // namespace affa
