#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace monolift {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms, always with an explicit denominator ("0/1", "1/1").
std::string to_pq(const Rational& r);

/// Inverse of to_pq; also accepts a bare integer.
Rational parse_pq(const std::string& text);

BigInt pow_big(const BigInt& base, unsigned long exponent);
BigInt pow2(unsigned long exponent);

/// Exact test of x <= 2^(-num/den) for num >= 0, den >= 1.
/// Non-positive x always satisfies it; otherwise x^den * 2^num <= 1.
bool leq_pow2_neg(const Rational& x, unsigned long num, unsigned long den);

/// Exact test of s < 2^(num/den), i.e. s^den < 2^num.
bool less_than_pow2(const BigInt& s, unsigned long num, unsigned long den);

/// Largest integer s >= 0 with s < 2^(num/den). Saturates at UINT64_MAX.
std::uint64_t max_size_below_pow2(unsigned long num, unsigned long den);

/// Exact test of 2^x <= s^e for rational x >= 0 (s >= 1).
bool pow2_leq_power(const Rational& x, const BigInt& s, unsigned long e);

double to_double(const Rational& r);

}  // namespace monolift
