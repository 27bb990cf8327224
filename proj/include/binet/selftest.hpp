#ifndef BINET_SELFTEST_HPP
#define BINET_SELFTEST_HPP

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>

#include "binet/cliques.hpp"
#include "binet/generators.hpp"
#include "binet/metrics.hpp"
#include "binet/reference_tables.hpp"

namespace binet {

/// Quick consistency run: reference-table arithmetic plus a handful of
/// seeded structural checks. Prints one line per check, returns true when
/// all pass.
inline bool run_selftest(std::uint64_t seed, std::ostream& out) {
  bool all = true;
  auto report = [&](bool ok, const std::string& what) {
    out << (ok ? "PASS " : "FAIL ") << what << '\n';
    all = all && ok;
  };

  std::size_t k2_hits = 0;
  for (const auto& row : reference::kCfgTable) {
    const auto p = diameter_predictors(row.N, row.L, row.k_max);
    report(std::abs(p.k1 - row.k1) <= 0.005,
           "cfg k1 " + std::string(row.sample) + " = " + std::to_string(p.k1));
    if (p.k2 && std::abs(*p.k2 - row.k2) <= 0.005) ++k2_hits;
  }
  report(k2_hits >= 10, "cfg k2 within 0.005 on " + std::to_string(k2_hits) + "/12 rows");

  for (const auto& row : reference::kDdgTable) {
    if (row.block == reference::kDdgK1MisprintBlock) continue;
    const auto p = diameter_predictors(row.N, row.L, row.k_max);
    report(std::abs(p.k1 - row.k1) <= 0.005,
           "ddg k1 block " + std::to_string(row.block) + " = " + std::to_string(p.k1));
  }

  const auto star_r = assortativity(gen::star(5));
  report(star_r && *star_r == -1.0, "star assortativity is -1");
  report(!assortativity(gen::complete(4)).has_value(), "K4 assortativity undefined");
  report(count_k_cliques(gen::complete(6), 3) == 20, "K6 triangle count is 20");
  report(std::abs(clustering(gen::ring_lattice(20, 4)).avg_local - 0.5) < 1e-12,
         "ring lattice clustering is 0.5");

  gen::Rng rng(seed);
  const auto er = gen::erdos_renyi(2000, 0.005, rng);
  const auto r = assortativity(er);
  report(r && std::abs(*r) < 0.1, "random graph near-neutral assortativity");
  return all;
}

}  // namespace binet

#endif  // BINET_SELFTEST_HPP
