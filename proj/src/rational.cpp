#include "monolift/rational.hpp"

#include <limits>

#include "monolift/errors.hpp"

namespace monolift {

std::string to_pq(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_pq(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

BigInt pow_big(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt pow2(unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

bool leq_pow2_neg(const Rational& x, unsigned long num, unsigned long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in exponent");
  if (sgn(x) <= 0) return true;
  // x = p/q: (p/q)^den * 2^num <= 1  <=>  p^den * 2^num <= q^den
  const BigInt lhs = pow_big(x.get_num(), den) * pow2(num);
  return lhs <= pow_big(x.get_den(), den);
}

bool less_than_pow2(const BigInt& s, unsigned long num, unsigned long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in exponent");
  if (s < 0) return true;
  return pow_big(s, den) < pow2(num);
}

std::uint64_t max_size_below_pow2(unsigned long num, unsigned long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in exponent");
  // floor(2^(num/den)) is an upper bound for the answer; step down while not strict.
  if (num / den >= 63) return std::numeric_limits<std::uint64_t>::max();
  BigInt root;
  mpz_root(root.get_mpz_t(), pow2(num).get_mpz_t(), den);
  while (root > 0 && !less_than_pow2(root, num, den)) --root;
  while (less_than_pow2(root + 1, num, den)) ++root;
  return root.get_ui();
}

bool pow2_leq_power(const Rational& x, const BigInt& s, unsigned long e) {
  if (sgn(x) < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  // 2^(p/q) <= s^e  <=>  2^p <= s^(e*q)
  const unsigned long p = x.get_num().get_ui();
  const unsigned long q = x.get_den().get_ui();
  return pow2(p) <= pow_big(s, e * q);
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace monolift
