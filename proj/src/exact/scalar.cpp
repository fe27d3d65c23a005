#include "dcx/exact/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "dcx/error.hpp"

namespace dcx {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// rat := ['-'|'+'] int [ '/' posint ]
mpq_class parse_rational(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  if (!all_digits(num)) {
    throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
  }
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(mpz_class(std::string(num)));
  } else {
    const std::string_view den = s.substr(slash + 1);
    if (!all_digits(den)) {
      throw std::invalid_argument("malformed denominator in '" + std::string(s) + "'");
    }
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator");
    q = mpq_class(mpz_class(std::string(num)), d);
    q.canonicalize();
  }
  return negative ? mpq_class(-q) : q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

std::optional<Scalar> Scalar::try_inv() const {
  if (is_zero()) return std::nullopt;
  if (is_real()) return Scalar(mpq_class(1) / re_);
  const mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar Scalar::inv() const {
  auto r = try_inv();
  if (!r) throw DivisionByZero();
  return *r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_real() && b.is_real()) {
    re_ += a.re_ * b.re_;
    return;
  }
  *this += a * b;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  const int c = cmp(a.re_, b.re_);
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int d = cmp(a.im_, b.im_);
  if (d != 0) return d < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string out;
  if (sgn(re_) != 0) out = rational_to_string(re_);
  const mpq_class mag = abs(im_);
  if (sgn(im_) < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  if (mag != 1) out += rational_to_string(mag);
  out += 'i';
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  if (s.back() != 'i') return Scalar(parse_rational(s));

  s.pop_back();
  // The imaginary coefficient starts at the last sign that is not leading.
  std::size_t split = 0;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  const std::string real_part = s.substr(0, split);
  const std::string imag_part = s.substr(split);
  mpq_class re = real_part.empty() ? mpq_class(0) : parse_rational(real_part);
  mpq_class im;
  if (imag_part.empty() || imag_part == "+") {
    im = 1;
  } else if (imag_part == "-") {
    im = -1;
  } else {
    im = parse_rational(imag_part);
  }
  return Scalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace dcx
