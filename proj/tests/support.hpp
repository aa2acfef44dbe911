#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <string>

#include "lfl/scalar.hpp"
#include "lfl/satake.hpp"

namespace lfl::test {

inline Scalar S(const std::string& text) { return Scalar(parse_rational(text)); }

inline SatakeParameter params(std::initializer_list<const char*> xs) {
  SatakeParameter out;
  for (const char* x : xs) out.push_back(S(x));
  return out;
}

/// Nonzero rational n/d with |n| <= span, 1 <= d <= max_den.
inline Scalar random_rational(std::mt19937_64& rng, int span = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  int n = 0;
  while (n == 0) n = num(rng);
  return Scalar(Rational(n, den(rng)));
}

/// Asserts that f throws E whose message contains `needle`.
template <class E = std::exception>
::testing::AssertionResult throws_with(const std::function<void()>& f, const std::string& needle) {
  try {
    f();
  } catch (const E& e) {
    if (std::string(e.what()).find(needle) != std::string::npos) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "message \"" << e.what() << "\" lacks \"" << needle << "\"";
  } catch (...) {
    return ::testing::AssertionFailure() << "threw an unexpected exception type";
  }
  return ::testing::AssertionFailure() << "did not throw";
}

}  // namespace lfl::test
