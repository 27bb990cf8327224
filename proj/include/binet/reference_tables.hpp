#ifndef BINET_REFERENCE_TABLES_HPP
#define BINET_REFERENCE_TABLES_HPP

// Reference metric tables for a malware corpus, kept as regression anchors
// for the diameter predictors. Values carry three decimals.

#include <array>
#include <cstddef>
#include <string_view>

namespace binet::reference {

struct CfgRow {
  std::string_view sample;
  std::size_t N;
  std::size_t L;
  std::size_t k_max;
  double k1;
  double k2;
  double pearson;
  double gamma;
};

inline constexpr std::array<CfgRow, 12> kCfgTable = {{
    {"Win32_APT28_SekoiaRootkit", 1495, 2779, 246, 33.653, 5.566, -0.098, 6.204},
    {"Win32_AgentTesla", 21732, 18394, 578, 57.877, 18.971, -0.057, 11.539},
    {"Win32_Avatar", 928, 1669, 23, 3.366, 5.337, -0.012, 5.999},
    {"Win32_BigBangA", 57344, 120007, 2308, 210.644, 7.653, -0.042, 2.211},
    {"Win32_BigBangB", 46937, 97470, 2288, 212.707, 7.554, -0.041, 2.281},
    {"Win32_BigBangC", 71109, 155022, 1153, 103.204, 7.587, -0.054, 2.250},
    {"Win32_Boaxxe.BB", 2507, 5129, 118, 15.076, 5.555, -0.073, 3.618},
    {"Win32_Caphaw_ShylockA", 1929, 3450, 76, 10.046, 5.935, -0.046, 5.934},
    {"Win32_Caphaw_ShylockB", 1713, 3336, 45, 6.043, 5.476, 0.038, 8.291},
    {"Win32_Cridex", 1155, 1386, 58, 8.224, 8.054, -0.040, 6.713},
    {"Zeus_Gameover_2014_partA", 22169, 42845, 712, 71.154, 7.409, -0.033, 2.595},
    {"Zeus_Gameover_2014_partB", 20488, 39836, 599, 60.336, 7.310, -0.039, 2.544},
}};

/// Largest per-block DDGs of one program. The k2 column does not follow
/// ln N / ln(2L/N) and is kept for reference only.
struct DdgRow {
  std::size_t block;
  std::size_t N;
  std::size_t L;
  std::size_t k_max;
  double k1;
  double k2;
  double pearson;
  double gamma;
};

inline constexpr std::array<DdgRow, 5> kDdgTable = {{
    {390, 48, 32, 3, 0.774, 2.904, -0.153, 18.264},
    {527, 40, 30, 9, 2.466, 2.397, -0.416, 4.538},
    {263, 29, 26, 4, 1.187, 1.878, 0.105, 3.281},
    {358, 32, 25, 5, 1.442, 2.218, -0.577, 4.279},
    {526, 21, 13, 4, 1.313, 2.459, -0.326, 8.574},
}};

/// Block 527's tabulated k1 disagrees with 9 / ln 40 = 2.440.
inline constexpr std::size_t kDdgK1MisprintBlock = 527;

}  // namespace binet::reference

#endif  // BINET_REFERENCE_TABLES_HPP
