#include "hesnil/gaussian_rational.hpp"

#include "hesnil/error.hpp"

namespace hesnil {

GaussianRational GaussianRational::rational(std::string_view text) {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 ||
      sgn(q.get_den()) == 0) {
    throw DomainError("invalid rational literal '" + std::string(text) + "'");
  }
  q.canonicalize();
  return GaussianRational(std::move(q));
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(i)");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw DomainError("division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

void GaussianRational::add_product(const GaussianRational& a,
                                   const GaussianRational& b) {
  const bool a_real = sgn(a.im_) == 0;
  const bool b_real = sgn(b.im_) == 0;
  if (a_real && b_real) {
    re_ += a.re_ * b.re_;
  } else if (a_real) {
    re_ += a.re_ * b.re_;
    im_ += a.re_ * b.im_;
  } else if (b_real) {
    re_ += a.re_ * b.re_;
    im_ += a.im_ * b.re_;
  } else {
    re_ += a.re_ * b.re_ - a.im_ * b.im_;
    im_ += a.re_ * b.im_ + a.im_ * b.re_;
  }
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) < 0) {
    mpq_class abs_im = -im_;
    return "(" + re_.get_str() + " - " +
           (abs_im == 1 ? std::string("i") : abs_im.get_str() + "*i") + ")";
  }
  return "(" + re_.get_str() + " + " + imag + ")";
}

std::size_t GaussianRational::hash() const {
  auto limb_hash = [](const mpz_class& z) {
    return std::hash<long>{}(mpz_get_si(z.get_mpz_t())) ^
           (static_cast<std::size_t>(mpz_size(z.get_mpz_t())) << 7);
  };
  std::size_t h = limb_hash(re_.get_num());
  h = h * 31 + limb_hash(re_.get_den());
  h = h * 31 + limb_hash(im_.get_num());
  h = h * 31 + limb_hash(im_.get_den());
  return h;
}

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

GaussianRational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return GaussianRational(mpq_class(f));
}

GaussianRational binomial(unsigned n, unsigned k) {
  if (k > n) return GaussianRational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return GaussianRational(mpq_class(b));
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) {
  return os << c.to_string();
}

}  // namespace hesnil
