#include "weil/rational.hpp"

#include <cctype>

#include "weil/error.hpp"

namespace weil {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (sgn(n) == 0) throw DomainError("division by zero in Q(i)");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (is_zero(z.im)) return to_string(z.re);
  return to_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + to_string(abs(z.im)) + "i";
}

GaussianRational parse_gaussian(std::string_view text) {
  if (text.empty() || text.back() != 'i') return GaussianRational(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  const auto split = body.find_last_of("+-");
  std::string_view re = split == std::string_view::npos || split == 0 ? std::string_view() : body.substr(0, split);
  std::string_view im = re.empty() ? body : body.substr(split);
  Rational imag;
  if (im.empty() || im == "+")
    imag = 1;
  else if (im == "-")
    imag = -1;
  else
    imag = parse_rational(im);
  return GaussianRational(re.empty() ? Rational(0) : parse_rational(re), imag);
}

}  // namespace weil
