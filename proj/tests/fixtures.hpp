#ifndef PIMAC_TESTS_FIXTURES_HPP
#define PIMAC_TESTS_FIXTURES_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "pimac/model.hpp"
#include "pimac/regions.hpp"

namespace fixtures {

using pimac::ChannelParams;

// Reference parameter sets: one per interference regime plus a weak one.
inline ChannelParams strong() { return {10, 10, 10, 1.2, 1.5, 1.3}; }
inline ChannelParams vsi_tx3() { return {10, 10, 10, 4.3, 2.0, 4.6}; }
inline ChannelParams full_vsi() { return {10, 10, 10, 3.5, 3.5, 4.6}; }
inline ChannelParams weak(double p = 10) { return {p, p, p, 0.2, 0.1, 0.2}; }

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // Powers in [0, max_power], with an occasional exact zero.
  double power(double max_power = 100) { return coin(0.05) ? 0.0 : uniform(0, max_power); }

  // Any sign, magnitudes spanning weak to very strong.
  ChannelParams unconstrained() {
    ChannelParams p{power(), power(), power(), 0, 0, 0};
    for (double* h : {&p.h12, &p.h22, &p.h31}) *h = coin(0.05) ? 0.0 : (coin() ? 1 : -1) * std::exp(uniform(-3, 3));
    return p;
  }

  ChannelParams weak_interference(double max_power = 100) {
    ChannelParams p{power(max_power), power(max_power), power(max_power), 0, 0, 0};
    for (double* h : {&p.h12, &p.h22, &p.h31}) *h = uniform(-1, 1);
    return p;
  }

  // Rejection sampler for h12^2, h22^2, h31^2 >= 1 and
  // h12^2 P1 + h22^2 P2 + P3 >= P1 + P2 + h31^2 P3.
  ChannelParams strong_capacity() {
    for (;;) {
      ChannelParams p{power(), power(), power(), 0, 0, 0};
      p.h12 = (coin() ? 1 : -1) * std::sqrt(uniform(1, 30));
      p.h22 = (coin() ? 1 : -1) * std::sqrt(uniform(1, 30));
      p.h31 = (coin() ? 1 : -1) * std::sqrt(uniform(1, 30));
      if (p.h12 * p.h12 * p.p1 + p.h22 * p.h22 * p.p2 + p.p3 >= p.p1 + p.p2 + p.h31 * p.h31 * p.p3) return p;
    }
  }

  // Gains drawn on a log scale up to very strong, so that several regimes
  // frequently hold at once.
  ChannelParams strong_gains() {
    ChannelParams p{power(20), power(20), power(20), 0, 0, 0};
    for (double* h : {&p.h12, &p.h22, &p.h31}) *h = (coin() ? 1 : -1) * std::exp(uniform(0, 3.5));
    return p;
  }

  // Random canonical polytope with every rate bounded.
  pimac::RatePolytope<double> polytope() {
    std::vector<pimac::RateConstraint<double>> cs;
    for (unsigned bits = 1; bits < 8; ++bits)
      if (coin(0.6)) cs.push_back({pimac::Subset::from_bits(bits), uniform(0, 3)});
    pimac::Subset covered;
    for (const auto& c : cs) covered = covered | c.mask;
    for (int i = 1; i <= 3; ++i)
      if (!covered.contains(i)) cs.push_back({pimac::Subset{i}, uniform(0, 3)});
    return pimac::RatePolytope<double>(std::move(cs));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<oracle::Halfspace> halfspaces(const pimac::RatePolytope<double>& p) {
  std::vector<oracle::Halfspace> hs;
  for (const auto& c : p.constraints())
    hs.push_back({{int(c.mask.contains(1)), int(c.mask.contains(2)), int(c.mask.contains(3))}, c.rhs});
  return hs;
}

}  // namespace fixtures

#endif  // PIMAC_TESTS_FIXTURES_HPP
