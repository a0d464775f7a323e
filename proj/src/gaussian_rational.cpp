#include "liereach/gaussian_rational.hpp"

#include "liereach/errors.hpp"

namespace liereach {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_parts(long re_num, long re_den, long im_num, long im_den) {
  if (re_den == 0 || im_den == 0) throw ArgumentError("GaussianRational: zero denominator");
  return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ArgumentError("GaussianRational: inverse of zero");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

// "i", "-i", "3i", "i/2", "-3i/2"
std::string imag_str(const mpq_class& q) {
  std::string s = sgn(q) < 0 ? "-" : "";
  mpz_class num = abs(q.get_num());
  if (num != 1) s += num.get_str();
  s += "i";
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

}  // namespace

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_str(im_);
  std::string im = imag_str(im_);
  return re_.get_str() + (im.front() == '-' ? "" : "+") + im;
}

}  // namespace liereach
