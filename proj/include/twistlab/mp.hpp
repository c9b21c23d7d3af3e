#pragma once
#include <boost/multiprecision/mpfr.hpp>
#include <complex>

namespace twistlab {

namespace bmp = boost::multiprecision;

// 64 decimal digits: enough head-room to absorb the exp(pi*t/2) cancellation
// in the critical-line series up to t = 40 with ~25 digits to spare.
using mp_real = bmp::number<bmp::mpfr_float_backend<64>, bmp::et_off>;

struct MpComplex {
  mp_real re, im;

  MpComplex() : re(0), im(0) {}
  MpComplex(double r) : re(r), im(0) {}
  MpComplex(const mp_real& r) : re(r), im(0) {}
  MpComplex(const mp_real& r, const mp_real& i) : re(r), im(i) {}

  MpComplex operator+(const MpComplex& o) const { return {re + o.re, im + o.im}; }
  MpComplex operator-(const MpComplex& o) const { return {re - o.re, im - o.im}; }
  MpComplex operator*(const MpComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  MpComplex operator*(const mp_real& s) const { return {re * s, im * s}; }
  MpComplex operator/(const MpComplex& o) const {
    mp_real n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  MpComplex& operator+=(const MpComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  MpComplex conj() const { return {re, -im}; }
  mp_real abs2() const { return re * re + im * im; }
  std::complex<double> to_double() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

inline MpComplex operator*(const mp_real& s, const MpComplex& z) { return z * s; }

}  // namespace twistlab
