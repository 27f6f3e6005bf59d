#include "ancas/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ancas {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int ipow(const Int& base, long e) {
  if (e < 0) throw std::invalid_argument("ipow with negative exponent");
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Rat rpow(const Rat& base, long e) {
  if (e < 0) throw std::invalid_argument("rpow with negative exponent");
  Rat r(ipow(base.get_num(), e), ipow(base.get_den(), e));
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto check_digits = [](std::string_view part, bool sign_ok) {
    if (part.empty()) return false;
    size_t i = 0;
    if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos
                             ? std::string_view("1")
                             : s.substr(slash + 1);
  if (!check_digits(num, true) || !check_digits(den, false))
    throw std::invalid_argument("malformed rational literal: " + std::string(s));
  Rat r(std::string(num) + "/" + std::string(den));
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal");
  r.canonicalize();
  return r;
}

} // namespace ancas
