/**
 * @file appendix_data.hpp
 * @brief Raw repeated pixel measurements of the glass and metal reference sets
 *
 * Ten captures per part, values transcribed at the printed two-decimal
 * precision. Columns follow the part order in diameters_mm; rows are captures.
 */

#pragma once

#include <array>
#include <string_view>

namespace gaugecal::appendix {

inline constexpr int kParts = 9;
inline constexpr int kCaptures = 10;

struct RawTable {
    std::string_view name;
    std::string_view estimator;
    std::array<double, kParts> diameters_mm;
    std::array<double, 4> train_mm;
    std::array<std::array<double, kParts>, kCaptures> captures;
};

inline constexpr std::array<RawTable, 6> kTables{{
    {"glass-gradient",
     "edge-gradient",
     {1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0, 8.0, 12.0},
     {1.0, 3.0, 6.0, 12.0},
     {{
         {49.39, 75.32, 101.21, 152.91, 204.65, 256.36, 308.05, 411.64, 618.62},
         {49.37, 75.34, 101.23, 152.89, 204.66, 256.36, 308.11, 411.62, 618.56},
         {49.31, 75.31, 101.25, 152.96, 204.69, 256.39, 308.13, 411.65, 618.59},
         {49.40, 75.32, 101.22, 152.97, 204.66, 256.39, 308.13, 411.59, 618.56},
         {49.40, 75.29, 101.25, 152.95, 204.66, 256.38, 308.11, 411.58, 618.58},
         {49.41, 75.32, 101.24, 153.00, 204.70, 256.38, 308.10, 411.60, 618.57},
         {49.39, 75.29, 101.20, 152.99, 204.69, 256.35, 308.08, 411.65, 618.56},
         {49.38, 75.31, 101.23, 153.00, 204.67, 256.40, 308.14, 411.59, 618.59},
         {49.38, 75.33, 101.19, 153.01, 204.60, 256.38, 308.12, 411.59, 618.58},
         {49.35, 75.30, 101.24, 153.01, 204.67, 256.38, 308.09, 411.56, 618.53},
     }}},
    {"glass-radial",
     "edge-radial",
     {1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0, 8.0, 12.0},
     {1.0, 3.0, 6.0, 12.0},
     {{
         {49.14, 75.06, 100.94, 152.63, 204.36, 256.08, 307.78, 411.38, 618.36},
         {49.14, 75.09, 100.96, 152.62, 204.38, 256.07, 307.85, 411.36, 618.31},
         {49.08, 75.04, 100.97, 152.68, 204.39, 256.11, 307.86, 411.39, 618.34},
         {49.16, 75.07, 100.94, 152.69, 204.39, 256.11, 307.85, 411.32, 618.31},
         {49.16, 75.02, 100.98, 152.67, 204.38, 256.10, 307.84, 411.31, 618.32},
         {49.17, 75.05, 100.97, 152.73, 204.42, 256.10, 307.82, 411.33, 618.32},
         {49.14, 75.03, 100.93, 152.71, 204.41, 256.07, 307.80, 411.39, 618.31},
         {49.14, 75.05, 100.96, 152.72, 204.38, 256.12, 307.87, 411.32, 618.34},
         {49.14, 75.07, 100.92, 152.73, 204.29, 256.11, 307.85, 411.32, 618.33},
         {49.10, 75.07, 100.97, 152.74, 204.38, 256.11, 307.82, 411.29, 618.28},
     }}},
    {"glass-counting",
     "area-counting",
     {1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0, 8.0, 12.0},
     {1.0, 3.0, 6.0, 12.0},
     {{
         {50.03, 75.91, 101.80, 153.46, 205.19, 256.89, 308.32, 412.12, 619.06},
         {49.94, 75.90, 101.81, 153.36, 205.19, 256.88, 308.55, 412.07, 618.95},
         {49.88, 75.90, 101.81, 153.49, 205.19, 256.86, 308.59, 412.06, 619.04},
         {50.00, 75.86, 101.74, 153.50, 205.16, 256.90, 308.60, 412.04, 618.96},
         {49.89, 75.79, 101.76, 153.52, 205.20, 256.84, 308.58, 412.06, 619.02},
         {50.06, 75.87, 101.76, 153.54, 205.23, 256.87, 308.59, 412.08, 618.97},
         {50.02, 75.84, 101.76, 153.52, 205.25, 256.89, 308.57, 412.08, 618.96},
         {49.92, 75.85, 101.78, 153.54, 205.19, 256.88, 308.63, 412.05, 619.02},
         {49.99, 75.90, 101.73, 153.53, 205.14, 256.83, 308.64, 412.04, 618.99},
         {49.93, 75.90, 101.78, 153.52, 205.11, 256.87, 308.58, 412.01, 618.88},
     }}},
    {"metal-gradient",
     "edge-gradient",
     {3.665, 5.398, 6.431, 8.594, 10.458, 11.046, 15.8, 23.668, 24.32},
     {3.665, 8.594, 15.8, 24.32},
     {{
         {186.80, 276.19, 329.46, 441.78, 538.23, 568.61, 814.25, 1221.54, 1255.87},
         {186.82, 276.14, 329.40, 441.71, 538.17, 568.56, 814.24, 1221.49, 1255.84},
         {186.79, 276.27, 329.35, 441.72, 538.22, 568.58, 814.23, 1221.53, 1255.82},
         {186.76, 276.23, 329.33, 441.71, 538.11, 568.56, 814.17, 1221.52, 1255.85},
         {186.83, 276.42, 329.38, 441.67, 538.13, 568.44, 814.26, 1221.52, 1255.88},
         {186.76, 276.18, 329.34, 441.76, 538.18, 568.64, 814.15, 1221.53, 1255.85},
         {186.84, 276.25, 329.37, 441.69, 538.30, 568.72, 814.24, 1221.52, 1255.86},
         {186.80, 276.13, 329.38, 441.76, 538.33, 568.61, 814.17, 1221.52, 1255.86},
         {186.75, 276.20, 329.36, 441.67, 538.25, 568.53, 814.21, 1221.47, 1255.83},
         {186.83, 276.25, 329.34, 441.62, 538.31, 568.46, 814.26, 1221.53, 1255.88},
     }}},
    {"metal-radial",
     "edge-radial",
     {3.665, 5.398, 6.431, 8.594, 10.458, 11.046, 15.8, 23.668, 24.32},
     {3.665, 8.594, 15.8, 24.32},
     {{
         {186.34, 275.74, 329.01, 441.34, 537.77, 568.18, 813.83, 1221.13, 1255.46},
         {186.36, 275.69, 328.95, 441.25, 537.71, 568.13, 813.81, 1221.07, 1255.43},
         {186.32, 275.82, 328.91, 441.28, 537.77, 568.16, 813.81, 1221.13, 1255.41},
         {186.31, 275.77, 328.88, 441.27, 537.66, 568.12, 813.75, 1221.11, 1255.46},
         {186.37, 275.97, 328.93, 441.21, 537.68, 568.00, 813.82, 1221.11, 1255.48},
         {186.29, 275.72, 328.87, 441.32, 537.72, 568.21, 813.73, 1221.13, 1255.45},
         {186.37, 275.80, 328.92, 441.24, 537.85, 568.29, 813.81, 1221.10, 1255.47},
         {186.34, 275.68, 328.92, 441.31, 537.88, 568.18, 813.74, 1221.10, 1255.45},
         {186.29, 275.74, 328.90, 441.22, 537.80, 568.09, 813.79, 1221.05, 1255.43},
         {186.38, 275.79, 328.88, 441.16, 537.86, 568.03, 813.82, 1221.11, 1255.49},
     }}},
    {"metal-counting",
     "area-counting",
     {3.665, 5.398, 6.431, 8.594, 10.458, 11.046, 15.8, 23.668, 24.32},
     {3.665, 8.594, 15.8, 24.32},
     {{
         {187.47, 276.73, 329.99, 442.30, 538.71, 569.07, 814.59, 1221.85, 1255.88},
         {187.52, 276.70, 329.88, 442.20, 538.65, 568.91, 814.61, 1221.78, 1256.08},
         {187.49, 276.80, 329.85, 442.18, 538.66, 568.97, 814.53, 1221.84, 1256.02},
         {187.43, 276.86, 329.77, 442.20, 538.52, 568.95, 814.47, 1221.83, 1255.83},
         {187.47, 277.00, 329.88, 442.16, 538.56, 568.75, 814.61, 1221.85, 1256.06},
         {187.47, 276.76, 329.78, 442.28, 538.66, 569.10, 814.45, 1221.85, 1255.97},
         {187.55, 276.76, 329.86, 442.14, 538.77, 569.15, 814.57, 1221.82, 1255.97},
         {187.49, 276.63, 329.82, 442.22, 538.73, 569.03, 814.44, 1221.83, 1255.99},
         {187.46, 276.85, 329.85, 442.11, 538.69, 568.96, 814.51, 1221.80, 1256.02},
         {187.53, 276.95, 329.79, 442.03, 538.77, 568.79, 814.63, 1221.84, 1256.08},
     }}},
}};

}  // namespace gaugecal::appendix
