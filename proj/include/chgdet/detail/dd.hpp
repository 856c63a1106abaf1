#pragma once

// Minimal double-double arithmetic (error-free transformations) used by the
// Kummer power series, where term cancellation eats roughly 0.43*|Im z|
// decimal digits and plain doubles run out near |z| ~ 30.  Internal detail,
// not part of the public API.

#include <cmath>

#include "chgdet/types.hpp"

namespace chgdet::detail {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return quick_two_sum(s.hi, lo);
}

inline DD sub(DD a, DD b) { return add(a, {-b.hi, -b.lo}); }

inline DD mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, lo);
}

inline DD div(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = sub(a, mul(b, {q1, 0.0}));
  double q2 = r.hi / b.hi;
  r = sub(r, mul(b, {q2, 0.0}));
  double q3 = r.hi / b.hi;
  DD q = quick_two_sum(q1, q2);
  return add(q, {q3, 0.0});
}

struct CDD {
  DD re, im;

  CDD() = default;
  CDD(DD r, DD i) : re(r), im(i) {}
  CDD(Complex z) : re(z.real()), im(z.imag()) {}

  Complex value() const { return {re.value(), im.value()}; }
};

inline CDD add(CDD a, CDD b) { return {add(a.re, b.re), add(a.im, b.im)}; }

inline CDD mul(CDD a, CDD b) {
  return {sub(mul(a.re, b.re), mul(a.im, b.im)),
          add(mul(a.re, b.im), mul(a.im, b.re))};
}

inline CDD div(CDD a, CDD b) {
  DD denom = add(mul(b.re, b.re), mul(b.im, b.im));
  DD re = add(mul(a.re, b.re), mul(a.im, b.im));
  DD im = sub(mul(a.im, b.re), mul(a.re, b.im));
  return {div(re, denom), div(im, denom)};
}

inline double abs_estimate(CDD a) { return std::hypot(a.re.hi, a.im.hi); }

}  // namespace chgdet::detail
