#include "ahscatter/exact.hpp"

#include <sstream>

#include "ahscatter/errors.hpp"

namespace ahscatter {

QComplex& QComplex::operator/=(const QComplex& o) {
  Rational den = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(den) == 0) throw SingularError("QComplex: division by zero");
  Rational r = (re_ * o.re_ + im_ * o.im_) / den;
  Rational i = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string QComplex::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QComplex& z) {
  if (sgn(z.imag()) == 0) return os << z.real();
  return os << '(' << z.real() << (sgn(z.imag()) < 0 ? " - " : " + ") << abs(z.imag()) << "i)";
}

}  // namespace ahscatter
