/* Copyright 2026 The sizematch Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "sizematch/real.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sizematch {

namespace {

Real pow10(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Real(p);
  Real r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

}  // namespace

Real parse_decimal(std::string_view text) {
  auto fail = [&]() -> Real {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (i == end) return fail();

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits.push_back(text[i++]);
    seen_digit = true;
  }
  if (i < end && text[i] == '.') {
    ++i;
    while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits.push_back(text[i++]);
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) return fail();
  if (i < end && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    long exponent = 0;
    const char* first = text.data() + i;
    const char* last = text.data() + end;
    if (first < last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last) return fail();
    if (exponent > 100000 || exponent < -100000) return fail();
    scale += exponent;
    i = end;
  }
  if (i != end) return fail();

  Real value(mpz_class(digits, 10));
  value *= pow10(scale);
  if (negative) value = -value;
  return value;
}

Real from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("non-finite value");
  }
  std::array<char, 64> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) throw std::invalid_argument("cannot format double");
  return parse_decimal(std::string_view(buffer.data(), static_cast<std::size_t>(ptr - buffer.data())));
}

double to_double(const Real& value) {
  // mpq_get_d truncates; go through the exact decimal text when it is short
  // so that decimals round-trip to the nearest double.
  const std::string text = to_string(value);
  if (text.find('/') == std::string::npos && text.size() < 40) {
    return std::strtod(text.c_str(), nullptr);
  }
  return value.get_d();
}

std::string to_string(const Real& value) {
  mpz_class den = value.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
  }
  const unsigned long places = std::max(twos, fives);
  if (places == 0) return value.get_num().get_str();

  mpz_class scaled;
  mpz_ui_pow_ui(scaled.get_mpz_t(), 10, places);
  scaled = scaled * value.get_num() / value.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return (negative ? "-" : "") + digits;
}

Real make_real(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Real r(numerator, denominator);
  r.canonicalize();
  return r;
}

Real abs(const Real& value) { return value < 0 ? Real(-value) : value; }

const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }

const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }

std::string to_string(const ExtendedReal& value) {
  return value.infinite ? std::string("inf") : to_string(value.value);
}

}  // namespace sizematch
