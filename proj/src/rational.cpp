#include "wfm/rational.hpp"

#include <stdexcept>

namespace wfm {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q{Integer{std::to_string(num)}, Integer{std::to_string(den)}};
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s{text};
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");

  auto check_digits = [&](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };

  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_digits(num, true) || !check_digits(den, false))
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(num.begin());

  Integer n{num}, d{den};
  if (d == 0) throw std::invalid_argument("rational with zero denominator '" + s + "'");
  Rational q{n, d};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("expected an integer, got " + to_string(q));
  const Integer& n = q.get_num();
  if (!n.fits_slong_p()) throw std::domain_error("integer out of range: " + to_string(q));
  return n.get_si();
}

Rational abs(const Rational& q) { return q < 0 ? Rational{-q} : q; }

RationalVector to_rational_vector(const std::vector<std::int64_t>& v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(make_rational(x));
  return out;
}

}  // namespace wfm
