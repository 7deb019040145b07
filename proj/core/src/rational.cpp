#include "simpdim/rational.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace simpdim {

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // d.ddd -> integer mantissa over a power of ten
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad decimal literal: " + s);
    Int num(digits, 10);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string decimal_str(const Rat& r, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  bool neg = r < 0;
  Rat a = neg ? Rat(-r) : r;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // round(|r| * 10^digits), half away from zero
  Int num = a.get_num() * scale;
  Int den = a.get_den();
  Int q = (2 * num + den) / (2 * den);
  std::string s = q.get_str();
  if (digits == 0) return (neg && q != 0 ? "-" : "") + s;
  if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (neg && q != 0 ? "-" : "") + s;
}

int digit_count(const Int& n) {
  Int a = abs(n);
  // sizeinbase may overestimate by one for base 10
  std::size_t est = mpz_sizeinbase(a.get_mpz_t(), 10);
  if (est <= 1) return 1;
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, est - 1);
  return a >= p ? (int)est : (int)est - 1;
}

double log_abs(const Rat& r) {
  if (r == 0) throw std::domain_error("log of zero");
  signed long exp_num = 0, exp_den = 0;
  double mant_num = mpz_get_d_2exp(&exp_num, r.get_num().get_mpz_t());
  double mant_den = mpz_get_d_2exp(&exp_den, r.get_den().get_mpz_t());
  constexpr double ln2 = 0.6931471805599453;
  return std::log(std::fabs(mant_num)) - std::log(std::fabs(mant_den)) +
         ln2 * (double)(exp_num - exp_den);
}

}  // namespace simpdim
