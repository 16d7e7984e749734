#include "spinstat/scalar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace spinstat {

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Unsigned "p" or "p/q".
Rational parse_unsigned_rational(std::string_view text, std::string_view whole) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw FormatError("malformed rational in scalar '" + std::string(whole) + "'");
  }
  const Integer d{std::string(den)};
  if (d == 0) {
    throw FormatError("zero denominator in scalar '" + std::string(whole) + "'");
  }
  return Rational(Integer{std::string(num)}, d);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw FormatError("empty rational");
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational q = parse_unsigned_rational(body, text);
  return negative ? Rational(-q) : q;
}

int sign(const Rational& q) {
  if (q == 0) return 0;
  return q > 0 ? 1 : -1;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (im_ == 0 && o.im_ == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.im_ == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Scalar::str() const {
  std::string out = to_string(re_);
  if (im_ < 0) {
    out += "-" + to_string(Rational(-im_));
  } else {
    out += "+" + to_string(im_);
  }
  out += "i";
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw FormatError("empty scalar");
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw FormatError("whitespace inside scalar '" + std::string(text) + "'");
    }
  }
  if (text.back() != 'i') return Scalar(parse_rational(text));

  // Imaginary part present: split at the last sign that is not leading.
  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view{}
                                                              : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);

  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part);
  }
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return {std::move(re), std::move(im)};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace spinstat
