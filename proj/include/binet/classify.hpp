#ifndef BINET_CLASSIFY_HPP
#define BINET_CLASSIFY_HPP

// Qualitative verdicts from NetworkMetrics. Every verdict keeps the numbers
// and cutoffs that produced it.
//
//   scale-free      gamma defined, fit goodness acceptable, gamma > min_gamma
//   small-world     k1 < max_k1 and average local clustering at least
//                   clustering_factor times the random-graph value <K>/N
//   assortativity   r < -band disassortative, r > band assortative,
//                   otherwise neutral; undefined without r

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "binet/error.hpp"
#include "binet/metrics.hpp"

namespace binet {

struct Thresholds {
  double max_ks = 0.1;          // mle fits: KS distance at most this
  double min_r_squared = 0.9;   // ccdf_ls fits: R^2 at least this
  double min_gamma = 2.0;
  double max_k1 = 3.0;
  double clustering_factor = 10.0;
  double assortativity_band = 0.1;

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

enum class AssortativityClass { assortative, neutral, disassortative, undefined };

inline std::string_view to_string(AssortativityClass c) {
  switch (c) {
    case AssortativityClass::assortative: return "assortative";
    case AssortativityClass::neutral: return "neutral";
    case AssortativityClass::disassortative: return "disassortative";
    case AssortativityClass::undefined: return "undefined";
  }
  return "undefined";
}

inline AssortativityClass parse_assortativity_class(std::string_view s) {
  if (s == "assortative") return AssortativityClass::assortative;
  if (s == "neutral") return AssortativityClass::neutral;
  if (s == "disassortative") return AssortativityClass::disassortative;
  if (s == "undefined") return AssortativityClass::undefined;
  throw InvalidArgument("unknown assortativity class '" + std::string(s) + "'");
}

struct Verdict {
  bool value = false;
  std::string reason;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ClassificationEvidence {
  std::optional<double> gamma;
  std::optional<double> gamma_goodness;
  GammaMethod gamma_method = GammaMethod::mle;
  double k1 = 0;
  double clustering_avg_local = 0;
  double clustering_baseline = 0;  // <K>/N
  std::optional<double> pearson_r;

  friend bool operator==(const ClassificationEvidence&, const ClassificationEvidence&) = default;
};

struct NetworkClassification {
  Verdict scale_free;
  Verdict small_world;
  AssortativityClass assortativity_class = AssortativityClass::undefined;
  std::string assortativity_reason;
  ClassificationEvidence evidence;
  Thresholds thresholds_used;

  friend bool operator==(const NetworkClassification&, const NetworkClassification&) = default;
};

namespace detail {

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace detail

/// Needs N >= 2 (so k1 is defined); throws IncompleteMetrics otherwise.
inline NetworkClassification classify(const NetworkMetrics& m, const Thresholds& t = {}) {
  if (m.N < 2 || !m.k1) {
    throw IncompleteMetrics("classification needs N >= 2 and k1; got N = " + std::to_string(m.N));
  }
  NetworkClassification c;
  c.thresholds_used = t;
  auto& e = c.evidence;
  e.gamma = m.gamma;
  e.gamma_goodness = m.gamma_goodness;
  e.gamma_method = m.gamma_method;
  e.k1 = *m.k1;
  e.clustering_avg_local = m.clustering_avg_local;
  e.clustering_baseline = m.mean_degree / static_cast<double>(m.N);
  e.pearson_r = m.pearson_r;

  using detail::fmt;
  if (!m.gamma || !m.gamma_goodness) {
    c.scale_free = {false, "gamma undefined"};
  } else {
    const bool fit_ok = m.gamma_method == GammaMethod::mle ? *m.gamma_goodness <= t.max_ks
                                                           : *m.gamma_goodness >= t.min_r_squared;
    const std::string goodness =
        m.gamma_method == GammaMethod::mle
            ? "KS " + fmt(*m.gamma_goodness) + (fit_ok ? " <= " : " > ") + fmt(t.max_ks)
            : "R^2 " + fmt(*m.gamma_goodness) + (fit_ok ? " >= " : " < ") + fmt(t.min_r_squared);
    const bool steep = *m.gamma > t.min_gamma;
    c.scale_free.value = fit_ok && steep;
    c.scale_free.reason = "gamma " + fmt(*m.gamma) + (steep ? " > " : " <= ") + fmt(t.min_gamma) +
                          ", " + goodness;
  }

  const bool short_paths = e.k1 < t.max_k1;
  const double needed = t.clustering_factor * e.clustering_baseline;
  const bool clustered = e.clustering_avg_local >= needed;
  c.small_world.value = short_paths && clustered;
  c.small_world.reason = "k1 " + fmt(e.k1) + (short_paths ? " < " : " >= ") + fmt(t.max_k1) +
                         ", clustering " + fmt(e.clustering_avg_local) +
                         (clustered ? " >= " : " < ") + fmt(t.clustering_factor) + " x " +
                         fmt(e.clustering_baseline);

  if (!m.pearson_r) {
    c.assortativity_class = AssortativityClass::undefined;
    c.assortativity_reason = "pearson r undefined";
  } else {
    const double r = *m.pearson_r;
    if (r < -t.assortativity_band) {
      c.assortativity_class = AssortativityClass::disassortative;
      c.assortativity_reason = "r " + fmt(r) + " < -" + fmt(t.assortativity_band);
    } else if (r > t.assortativity_band) {
      c.assortativity_class = AssortativityClass::assortative;
      c.assortativity_reason = "r " + fmt(r) + " > " + fmt(t.assortativity_band);
    } else {
      c.assortativity_class = AssortativityClass::neutral;
      c.assortativity_reason = "|r| " + fmt(std::abs(r)) + " <= " + fmt(t.assortativity_band);
    }
  }
  return c;
}

}  // namespace binet

#endif  // BINET_CLASSIFY_HPP
