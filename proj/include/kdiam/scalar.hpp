#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

#include "kdiam/errors.hpp"

namespace kdiam {

using Rational = mpq_class;

/// Comparison tolerance for float-mode decisions. Exact mode ignores it.
struct Tolerance {
  double rel = 1e-9;
};

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "exact";
  static constexpr const char* scalar_name = "rational";

  static int sign(const Rational& x, const Tolerance& = {}, double = 1.0) { return sgn(x); }
  static bool equal(const Rational& a, const Rational& b, const Tolerance& = {}) { return a == b; }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_int(long v) { return Rational(v); }

  static Rational parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw Error(ErrorKind::parse_error, "empty rational literal");
    // Decimal literals such as "0.25" or "-1.5e-3" are converted exactly.
    if (s.find_first_of(".eE") != std::string::npos) {
      auto exp_pos = s.find_first_of("eE");
      std::string mantissa = s.substr(0, exp_pos);
      long exponent = 0;
      if (exp_pos != std::string::npos) {
        auto e = s.substr(exp_pos + 1);
        auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exponent);
        if (ec != std::errc{} || ptr != e.data() + e.size())
          throw Error(ErrorKind::parse_error, "bad exponent in '" + s + "'");
      }
      auto dot = mantissa.find('.');
      std::string digits = mantissa;
      if (dot != std::string::npos) {
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
        digits.erase(dot, 1);
      }
      mpz_class num;
      if (digits.empty() || digits == "-" || digits == "+" || num.set_str(digits, 10) != 0)
        throw Error(ErrorKind::parse_error, "bad decimal literal '" + s + "'");
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
      Rational q = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
      q.canonicalize();
      return q;
    }
    if (s.front() == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorKind::parse_error, "bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::parse_error, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  }

  static std::string format(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "numerical";
  static constexpr const char* scalar_name = "float";

  // `scale` is the magnitude of the quantities that produced `x`.
  static int sign(double x, const Tolerance& tol = {}, double scale = 1.0) {
    double eps = tol.rel * std::max(1.0, std::fabs(scale));
    if (x > eps) return 1;
    if (x < -eps) return -1;
    return 0;
  }
  static bool equal(double a, double b, const Tolerance& tol = {}) {
    double m = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= tol.rel * m;
  }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static double from_int(long v) { return static_cast<double>(v); }

  static double parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Rational q = ScalarTraits<Rational>::parse(s);
      return q.get_d();
    }
    try {
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) throw Error(ErrorKind::parse_error, "bad float literal '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::parse_error, "bad float literal '" + s + "'");
    }
  }

  static std::string format(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

template <Scalar T>
int sign_of(const T& x, const Tolerance& tol = {}, double scale = 1.0) {
  return ScalarTraits<T>::sign(x, tol, scale);
}

template <Scalar T>
bool scalar_equal(const T& a, const T& b, const Tolerance& tol = {}) {
  return ScalarTraits<T>::equal(a, b, tol);
}

template <Scalar T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

template <Scalar T>
std::string format_scalar(const T& x) {
  return ScalarTraits<T>::format(x);
}

template <Scalar To, Scalar From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, double>) {
    return to_double(x);
  } else {
    // Exact binary value of the double.
    return Rational(x);
  }
}

}  // namespace kdiam
