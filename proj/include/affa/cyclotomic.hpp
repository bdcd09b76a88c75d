// Exact arithmetic in cyclotomic fields Q(zeta_d).
#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace affa {

struct RootSpec {
  int order = 1;
  bool operator==(const RootSpec&) const = default;
};

// Integer coefficients of the d-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int d);
int euler_phi(int d);

class Cyclo {
 public:
  Cyclo() : Cyclo(1) {}
  explicit Cyclo(int order);  // zero at the given order

  static Cyclo zero(int order = 1) { return Cyclo(order); }
  static Cyclo one(int order = 1) { return from_rational(mpq_class(1), order); }
  static Cyclo from_int(long v, int order = 1) { return from_rational(mpq_class(v), order); }
  static Cyclo from_rational(const mpq_class& q, int order = 1);
  // Reduces sum_k poly[k] x^k modulo Phi_d.
  static Cyclo canonicalize(const std::vector<mpq_class>& poly, int order);
  static Cyclo root_power(int order, long k);

  int order() const { return order_; }
  RootSpec root() const { return RootSpec{order_}; }
  // Reduced coefficients, length phi(order).
  const std::vector<mpq_class>& coeffs() const { return c_; }
  // Coefficients padded with zeros to length `order`.
  std::vector<mpq_class> padded() const;

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_part() const { return c_.empty() ? mpq_class(0) : c_[0]; }

  Cyclo embed(int target_order) const;
  Cyclo conj() const;
  Cyclo inverse() const;
  Cyclo pow(long e) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
  Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
  Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

 private:
  int order_;
  std::vector<mpq_class> c_;
};

enum class ArithOp { Add, Mul, Neg, Conj };

// Strict form: both operands must live at the same order.
Cyclo arith(ArithOp op, const Cyclo& a, const Cyclo* b = nullptr);

int lcm_order(int a, int b);

}  // namespace affa
