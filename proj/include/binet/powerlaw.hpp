#ifndef BINET_POWERLAW_HPP
#define BINET_POWERLAW_HPP

// Power-law exponent estimation for integer degree samples.
//
//   mle      discrete maximum likelihood, P(k) = k^-gamma / zeta(gamma, k_min).
//            When k_min is not given it is the candidate minimizing the
//            Kolmogorov-Smirnov distance between the tail and its fit.
//            goodness = KS distance (smaller is better).
//   ccdf_ls  least-squares line through (ln k, ln P(K >= k)); the CCDF slope
//            is 1 - gamma. goodness = R^2 of the line.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "binet/error.hpp"

namespace binet {

enum class GammaMethod { mle, ccdf_ls };

inline std::string_view to_string(GammaMethod m) {
  return m == GammaMethod::mle ? "mle" : "ccdf_ls";
}

inline GammaMethod parse_gamma_method(std::string_view name) {
  if (name == "mle") return GammaMethod::mle;
  if (name == "ccdf-ls" || name == "ccdf_ls") return GammaMethod::ccdf_ls;
  throw InvalidArgument("unknown gamma method '" + std::string(name) + "'");
}

struct PowerLawFit {
  double gamma = 0;
  std::uint64_t k_min = 1;
  GammaMethod method = GammaMethod::mle;
  double goodness = 0;
  std::size_t sample_size = 0;
};

/// Hurwitz zeta function sum_{k>=0} (q + k)^-s for s > 1, q > 0.
inline double hurwitz_zeta(double s, double q) {
  // Direct sum up to a shift point, then an Euler-Maclaurin tail.
  static constexpr double bernoulli_over_factorial[] = {
      1.0 / 12.0,                        // B2 / 2!
      -1.0 / 720.0,                      // B4 / 4!
      1.0 / 30240.0,                     // B6 / 6!
      -1.0 / 1209600.0,                  // B8 / 8!
      1.0 / 47900160.0,                  // B10 / 10!
      -691.0 / 1307674368000.0,          // B12 / 12!
      1.0 / 74724249600.0,               // B14 / 14!
  };
  const double shift = std::max(10.0, s);
  double sum = 0;
  double a = q;
  while (a < shift) {
    sum += std::pow(a, -s);
    a += 1.0;
  }
  double tail = std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  double rising = s;  // s (s+1) ... (s+2j-2)
  double power = std::pow(a, -s - 1.0);
  for (std::size_t j = 0; j < std::size(bernoulli_over_factorial); ++j) {
    tail += bernoulli_over_factorial[j] * rising * power;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    power /= a * a;
  }
  return sum + tail;
}

namespace detail {

constexpr double kGammaLower = 1.0 + 1e-6;
constexpr double kGammaUpper = 50.0;

struct Tail {
  std::vector<std::uint64_t> values;  // sorted ascending
  double sum_log = 0;
};

inline Tail make_tail(const std::vector<std::uint64_t>& sorted, std::uint64_t k_min) {
  Tail t;
  auto first = std::lower_bound(sorted.begin(), sorted.end(), k_min);
  t.values.assign(first, sorted.end());
  for (auto v : t.values) t.sum_log += std::log(static_cast<double>(v));
  return t;
}

inline double discrete_mle(const Tail& tail, std::uint64_t k_min) {
  const double n = static_cast<double>(tail.values.size());
  const double q = static_cast<double>(k_min);
  auto neg_log_likelihood = [&](double a) { return n * std::log(hurwitz_zeta(a, q)) + a * tail.sum_log; };
  auto [gamma, value] = boost::math::tools::brent_find_minima(
      neg_log_likelihood, kGammaLower, kGammaUpper, std::numeric_limits<double>::digits / 2);
  (void)value;
  return gamma;
}

/// Sup distance between the tail's empirical CDF and the fitted discrete
/// power-law CDF over every integer k >= k_min.
inline double ks_distance(const Tail& tail, std::uint64_t k_min, double gamma) {
  const double n = static_cast<double>(tail.values.size());
  const double norm = hurwitz_zeta(gamma, static_cast<double>(k_min));
  auto model_cdf = [&](std::uint64_t k) {
    return 1.0 - hurwitz_zeta(gamma, static_cast<double>(k) + 1.0) / norm;
  };
  double worst = 0;
  double below = 0;  // empirical CDF just before the current value
  std::size_t i = 0;
  while (i < tail.values.size()) {
    const std::uint64_t k = tail.values[i];
    std::size_t j = i;
    while (j < tail.values.size() && tail.values[j] == k) ++j;
    // Flat stretch of the empirical CDF ends at k - 1.
    if (k > k_min) worst = std::max(worst, std::abs(below - model_cdf(k - 1)));
    const double at = static_cast<double>(j) / n;
    worst = std::max(worst, std::abs(at - model_cdf(k)));
    below = at;
    i = j;
  }
  return std::min(worst, 1.0);
}

inline std::vector<std::uint64_t> filtered_sorted(const std::vector<std::uint64_t>& degrees,
                                                  std::uint64_t floor) {
  std::vector<std::uint64_t> out;
  out.reserve(degrees.size());
  for (auto d : degrees) {
    if (d >= floor && d > 0) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void check_fit_input(const std::vector<std::uint64_t>& sorted) {
  if (sorted.size() < 2) {
    throw InsufficientData("power-law fit needs at least 2 positive samples, got " +
                           std::to_string(sorted.size()));
  }
  if (sorted.front() == sorted.back()) {
    throw AllDegreesEqual("every sample equals " + std::to_string(sorted.front()));
  }
}

inline PowerLawFit fit_mle(const std::vector<std::uint64_t>& degrees, std::optional<std::uint64_t> k_min) {
  const auto sorted = filtered_sorted(degrees, k_min.value_or(1));
  check_fit_input(sorted);

  auto fit_at = [&](std::uint64_t xmin) {
    Tail tail = make_tail(sorted, xmin);
    PowerLawFit fit;
    fit.method = GammaMethod::mle;
    fit.k_min = xmin;
    fit.gamma = discrete_mle(tail, xmin);
    fit.goodness = ks_distance(tail, xmin, fit.gamma);
    fit.sample_size = tail.values.size();
    return fit;
  };
  if (k_min) return fit_at(std::max<std::uint64_t>(*k_min, 1));

  // Candidates leave at least two distinct values and a tail of
  // min(10, n) samples.
  const std::size_t min_tail = std::min<std::size_t>(10, sorted.size());
  std::optional<PowerLawFit> best;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    if (sorted.size() - i < min_tail || sorted[i] == sorted.back()) break;
    PowerLawFit fit = fit_at(sorted[i]);
    if (!best || fit.goodness < best->goodness) best = fit;
  }
  return *best;
}

inline PowerLawFit fit_ccdf_ls(const std::vector<std::uint64_t>& degrees, std::optional<std::uint64_t> k_min) {
  const auto sorted = filtered_sorted(degrees, k_min.value_or(1));
  check_fit_input(sorted);

  const double n = static_cast<double>(sorted.size());
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    xs.push_back(std::log(static_cast<double>(sorted[i])));
    ys.push_back(std::log(static_cast<double>(sorted.size() - i) / n));
  }
  const double m = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0;
  double sxy = 0;
  double syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double r2 = syy > 0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;

  PowerLawFit fit;
  fit.method = GammaMethod::ccdf_ls;
  fit.gamma = 1.0 - slope;
  fit.k_min = sorted.front();
  fit.goodness = r2;
  fit.sample_size = sorted.size();
  return fit;
}

}  // namespace detail

/// Zero degrees are ignored. Throws InsufficientData for fewer than two
/// samples at or above k_min and AllDegreesEqual when they are all equal.
inline PowerLawFit fit_power_law(const std::vector<std::uint64_t>& degrees,
                                 GammaMethod method = GammaMethod::mle,
                                 std::optional<std::uint64_t> k_min = std::nullopt) {
  return method == GammaMethod::mle ? detail::fit_mle(degrees, k_min)
                                    : detail::fit_ccdf_ls(degrees, k_min);
}

}  // namespace binet

#endif  // BINET_POWERLAW_HPP
