#include "dynr/bernoulli.hpp"

#include <stdexcept>

namespace dynr {

std::vector<Rational> bernoulli_numbers(int n) {
  if (n < 0 || n > BERNOULLI_MAX)
    throw OverflowError("bernoulli_numbers: index outside exact table range");
  std::vector<Rational> out(n + 1);
  std::vector<Rational> row(n + 1);
  for (int m = 0; m <= n; ++m) {
    row[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
    }
    out[m] = row[0]; // Akiyama-Tanigawa yields B_m with B_1 = +1/2
  }
  if (n >= 1) out[1] = Rational(-1, 2);
  return out;
}

const Rational& bernoulli(int k) {
  static const std::vector<Rational> table = bernoulli_numbers(BERNOULLI_MAX);
  if (k < 0 || k > BERNOULLI_MAX)
    throw OverflowError("bernoulli: index outside exact table range");
  return table[static_cast<size_t>(k)];
}

} // namespace dynr
