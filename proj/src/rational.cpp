#include "pointsep/rational.hpp"

#include <cctype>

namespace pointsep {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<BigInt> parse_integer(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (!all_digits(body)) return std::nullopt;
  BigInt v(body, 10);
  if (neg) v = -v;
  return v;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    Rational q(*num, *den);
    q.canonicalize();
    return q;
  }

  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = false;
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
      neg = head[0] == '-';
      head = head.substr(1);
    }
    if (head.empty() && frac.empty()) return std::nullopt;
    if (!head.empty() && !all_digits(head)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    BigInt ipart = head.empty() ? BigInt(0) : BigInt(head, 10);
    BigInt fpart = frac.empty() ? BigInt(0) : BigInt(frac, 10);
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = ipart * scale + fpart;
    if (neg) num = -num;
    Rational q(num, scale);
    q.canonicalize();
    return q;
  }

  auto num = parse_integer(text);
  if (!num) return std::nullopt;
  return Rational(*num);
}

std::string format_rational(const Rational& q) { return q.get_str(); }

BigInt ceil_rational(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

long ceil_div(long a, long b) { return (a + b - 1) / b; }

}  // namespace pointsep
