#include <array>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qlangevin/errors.hpp"
#include "qlangevin/friction.hpp"

namespace qlangevin {

namespace {

using boost::multiprecision::cpp_rational;

constexpr unsigned kMaxIndex = 30;

// Akiyama-Tanigawa, exact in rationals.
const std::array<cpp_rational, kMaxIndex + 1>& table() {
  static const std::array<cpp_rational, kMaxIndex + 1> numbers = [] {
    std::array<cpp_rational, kMaxIndex + 1> out;
    std::array<cpp_rational, kMaxIndex + 1> a;
    for (unsigned m = 0; m <= kMaxIndex; ++m) {
      a[m] = cpp_rational(1, m + 1);
      for (unsigned j = m; j >= 1; --j) {
        a[j - 1] = j * (a[j - 1] - a[j]);
      }
      out[m] = a[0];
    }
    return out;
  }();
  return numbers;
}

const cpp_rational& lookup(unsigned k) {
  if (k > kMaxIndex) {
    throw ParameterError("Bernoulli numbers are tabulated up to B_30, asked for B_" +
                         std::to_string(k));
  }
  return table()[k];
}

}  // namespace

double bernoulli_number(unsigned k) {
  return lookup(k).convert_to<double>();
}

std::string bernoulli_fraction(unsigned k) {
  const cpp_rational& b = lookup(k);
  return boost::multiprecision::numerator(b).str() + "/" +
         boost::multiprecision::denominator(b).str();
}

}  // namespace qlangevin
