// Shared helpers for the test suites: deterministic rational/polynomial
// generators (seeded, platform-independent draws) and transcriptions of the
// published closed-form chain elements used as independent oracles.

#ifndef ROOTCFG_TEST_SUPPORT_HPP
#define ROOTCFG_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rootcfg/polynomial.hpp"
#include "rootcfg/rational.hpp"

namespace rootcfg::test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rat rat(int max_num = 10, int max_den = 6) {
    return Rat(Int(range(-max_num, max_num)), Int(range(1, max_den)));
  }

  Rat nonzero_rat(int max_num = 10, int max_den = 6) {
    Rat v = rat(max_num, max_den);
    while (v == 0) v = rat(max_num, max_den);
    return v;
  }

  Poly poly(int max_degree, int max_num = 10, int max_den = 6) {
    const int degree = static_cast<int>(range(0, max_degree));
    std::vector<Rat> coeffs;
    for (int i = 0; i < degree; ++i) coeffs.push_back(rat(max_num, max_den));
    coeffs.push_back(nonzero_rat(max_num, max_den));
    return Poly{std::move(coeffs)};
  }

  Poly nonzero_poly(int max_degree, int max_num = 10, int max_den = 6) {
    return poly(max_degree, max_num, max_den);  // leading coeff is nonzero
  }

  std::vector<Rat> distinct_rats(int k, int max_num = 10, int max_den = 6) {
    std::vector<Rat> values;
    while (static_cast<int>(values.size()) < k) {
      Rat v = rat(max_num, max_den);
      bool fresh = true;
      for (const Rat& u : values) fresh = fresh && u != v;
      if (fresh) values.push_back(v);
    }
    return values;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rootcfg::test

#endif  // ROOTCFG_TEST_SUPPORT_HPP
