#include "wallach/rational.hpp"

#include <cctype>
#include <cstddef>

#include "wallach/errors.hpp"

namespace wallach {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InputError("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw InputError("malformed rational literal '" + text + "'");
    BigInt n(num), d(den);
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(n, d);
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    bool neg = false;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
      neg = head[0] == '-';
      head.erase(head.begin());
    }
    if (head.empty()) head = "0";
    if (tail.empty()) tail = "0";
    if (!is_integer_token(head) || !is_integer_token(tail))
      throw InputError("malformed decimal literal '" + text + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    BigInt n = BigInt(head) * scale + BigInt(tail);
    if (neg) n = -n;
    return Rational(n, scale);
  }

  if (!is_integer_token(s)) throw InputError("malformed rational literal '" + text + "'");
  return Rational(BigInt(s));
}

std::string rational_str(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

}  // namespace wallach
