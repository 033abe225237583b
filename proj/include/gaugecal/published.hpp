/**
 * @file published.hpp
 * @brief Published error figures the reproduction is checked against
 *
 * Percentage-error grids with their MAPE rows for the six reference
 * datasets, and the M0/M4 absolute errors in µm. The same values ship as
 * data/published_results.csv. A diameter of 0 marks a MAPE cell.
 *
 * The absolute-error figures list the 5 mm glass part under a "6000 µm"
 * heading; 46.55 µm / 5000 µm matches the 5 mm M0 percentage, so the cell
 * is keyed to the 5 mm part.
 */

#pragma once

#include <array>
#include <string_view>

namespace gaugecal::published {

enum class CellKind { Percent, Mape, AbsoluteMicrons };

struct Cell {
    std::string_view dataset;
    std::string_view method;
    double diameter_mm;
    CellKind kind;
    double value;
};

inline constexpr std::string_view kind_name(CellKind k) {
    switch (k) {
        case CellKind::Percent: return "pct";
        case CellKind::Mape: return "mape";
        case CellKind::AbsoluteMicrons: return "abs_um";
    }
    return "?";
}

inline constexpr std::array<Cell, 240> kCells{{
    {"glass-gradient", "M0", 1.5, CellKind::Percent, 1.1687},
    {"glass-gradient", "M1", 1.5, CellKind::Percent, 1.6794},
    {"glass-gradient", "M2", 1.5, CellKind::Percent, 0.8755},
    {"glass-gradient", "M3", 1.5, CellKind::Percent, 0.0469},
    {"glass-gradient", "M4", 1.5, CellKind::Percent, 0.0274},
    {"glass-gradient", "M0", 2.0, CellKind::Percent, 0.3725},
    {"glass-gradient", "M1", 2.0, CellKind::Percent, 0.7384},
    {"glass-gradient", "M2", 2.0, CellKind::Percent, 0.8784},
    {"glass-gradient", "M3", 2.0, CellKind::Percent, 0.0507},
    {"glass-gradient", "M4", 2.0, CellKind::Percent, 0.0619},
    {"glass-gradient", "M0", 4.0, CellKind::Percent, 0.7172},
    {"glass-gradient", "M1", 4.0, CellKind::Percent, 0.3473},
    {"glass-gradient", "M2", 4.0, CellKind::Percent, 0.1119},
    {"glass-gradient", "M3", 4.0, CellKind::Percent, 0.0052},
    {"glass-gradient", "M4", 4.0, CellKind::Percent, 0.0109},
    {"glass-gradient", "M0", 5.0, CellKind::Percent, 0.9310},
    {"glass-gradient", "M1", 5.0, CellKind::Percent, 0.1476},
    {"glass-gradient", "M2", 5.0, CellKind::Percent, 0.0884},
    {"glass-gradient", "M3", 5.0, CellKind::Percent, 0.0049},
    {"glass-gradient", "M4", 5.0, CellKind::Percent, 0.0034},
    {"glass-gradient", "M0", 8.0, CellKind::Percent, 1.2766},
    {"glass-gradient", "M1", 8.0, CellKind::Percent, 0.1943},
    {"glass-gradient", "M2", 8.0, CellKind::Percent, 0.0670},
    {"glass-gradient", "M3", 8.0, CellKind::Percent, 0.0040},
    {"glass-gradient", "M4", 8.0, CellKind::Percent, 0.0003},
    {"glass-gradient", "M0", 0.0, CellKind::Mape, 0.8932},
    {"glass-gradient", "M1", 0.0, CellKind::Mape, 0.6214},
    {"glass-gradient", "M2", 0.0, CellKind::Mape, 0.4042},
    {"glass-gradient", "M3", 0.0, CellKind::Mape, 0.0223},
    {"glass-gradient", "M4", 0.0, CellKind::Mape, 0.0208},
    {"glass-radial", "M0", 1.5, CellKind::Percent, 1.3079},
    {"glass-radial", "M1", 1.5, CellKind::Percent, 1.8274},
    {"glass-radial", "M2", 1.5, CellKind::Percent, 0.4464},
    {"glass-radial", "M3", 1.5, CellKind::Percent, 0.0363},
    {"glass-radial", "M4", 1.5, CellKind::Percent, 0.0308},
    {"glass-radial", "M0", 2.0, CellKind::Percent, 0.4378},
    {"glass-radial", "M1", 2.0, CellKind::Percent, 0.8244},
    {"glass-radial", "M2", 2.0, CellKind::Percent, 0.4442},
    {"glass-radial", "M3", 2.0, CellKind::Percent, 0.0392},
    {"glass-radial", "M4", 2.0, CellKind::Percent, 0.0517},
    {"glass-radial", "M0", 4.0, CellKind::Percent, 0.7806},
    {"glass-radial", "M1", 4.0, CellKind::Percent, 0.3893},
    {"glass-radial", "M2", 4.0, CellKind::Percent, 0.1227},
    {"glass-radial", "M3", 4.0, CellKind::Percent, 0.0118},
    {"glass-radial", "M4", 4.0, CellKind::Percent, 0.0020},
    {"glass-radial", "M0", 5.0, CellKind::Percent, 1.0270},
    {"glass-radial", "M1", 5.0, CellKind::Percent, 0.1673},
    {"glass-radial", "M2", 5.0, CellKind::Percent, 0.1001},
    {"glass-radial", "M3", 5.0, CellKind::Percent, 0.0075},
    {"glass-radial", "M4", 5.0, CellKind::Percent, 0.0101},
    {"glass-radial", "M0", 8.0, CellKind::Percent, 1.4169},
    {"glass-radial", "M1", 8.0, CellKind::Percent, 0.2180},
    {"glass-radial", "M2", 8.0, CellKind::Percent, 0.0746},
    {"glass-radial", "M3", 8.0, CellKind::Percent, 0.0002},
    {"glass-radial", "M4", 8.0, CellKind::Percent, 0.0023},
    {"glass-radial", "M0", 0.0, CellKind::Mape, 0.9940},
    {"glass-radial", "M1", 0.0, CellKind::Mape, 0.6853},
    {"glass-radial", "M2", 0.0, CellKind::Mape, 0.2376},
    {"glass-radial", "M3", 0.0, CellKind::Mape, 0.0190},
    {"glass-radial", "M4", 0.0, CellKind::Mape, 0.0194},
    {"glass-counting", "M0", 1.5, CellKind::Percent, 0.8726},
    {"glass-counting", "M1", 1.5, CellKind::Percent, 1.2341},
    {"glass-counting", "M2", 1.5, CellKind::Percent, 0.7277},
    {"glass-counting", "M3", 1.5, CellKind::Percent, 0.0948},
    {"glass-counting", "M4", 1.5, CellKind::Percent, 0.0807},
    {"glass-counting", "M0", 2.0, CellKind::Percent, 0.2773},
    {"glass-counting", "M1", 2.0, CellKind::Percent, 0.5484},
    {"glass-counting", "M2", 2.0, CellKind::Percent, 0.7104},
    {"glass-counting", "M3", 2.0, CellKind::Percent, 0.0787},
    {"glass-counting", "M4", 2.0, CellKind::Percent, 0.0914},
    {"glass-counting", "M0", 4.0, CellKind::Percent, 0.5276},
    {"glass-counting", "M1", 4.0, CellKind::Percent, 0.2543},
    {"glass-counting", "M2", 4.0, CellKind::Percent, 0.0963},
    {"glass-counting", "M3", 4.0, CellKind::Percent, 0.0090},
    {"glass-counting", "M4", 4.0, CellKind::Percent, 0.0208},
    {"glass-counting", "M0", 5.0, CellKind::Percent, 0.6799},
    {"glass-counting", "M1", 5.0, CellKind::Percent, 0.1033},
    {"glass-counting", "M2", 5.0, CellKind::Percent, 0.0729},
    {"glass-counting", "M3", 5.0, CellKind::Percent, 0.0032},
    {"glass-counting", "M4", 5.0, CellKind::Percent, 0.0018},
    {"glass-counting", "M0", 8.0, CellKind::Percent, 0.9409},
    {"glass-counting", "M1", 8.0, CellKind::Percent, 0.1557},
    {"glass-counting", "M2", 8.0, CellKind::Percent, 0.0555},
    {"glass-counting", "M3", 8.0, CellKind::Percent, 0.0066},
    {"glass-counting", "M4", 8.0, CellKind::Percent, 0.0037},
    {"glass-counting", "M0", 0.0, CellKind::Mape, 0.6597},
    {"glass-counting", "M1", 0.0, CellKind::Mape, 0.4592},
    {"glass-counting", "M2", 0.0, CellKind::Mape, 0.3326},
    {"glass-counting", "M3", 0.0, CellKind::Mape, 0.0385},
    {"glass-counting", "M4", 0.0, CellKind::Mape, 0.0397},
    {"metal-gradient", "M0", 5.398, CellKind::Percent, 0.4391},
    {"metal-gradient", "M1", 5.398, CellKind::Percent, 0.3995},
    {"metal-gradient", "M2", 5.398, CellKind::Percent, 0.1053},
    {"metal-gradient", "M3", 5.398, CellKind::Percent, 0.0718},
    {"metal-gradient", "M4", 5.398, CellKind::Percent, 0.0296},
    {"metal-gradient", "M0", 6.431, CellKind::Percent, 0.3529},
    {"metal-gradient", "M1", 6.431, CellKind::Percent, 0.3529},
    {"metal-gradient", "M2", 6.431, CellKind::Percent, 0.0169},
    {"metal-gradient", "M3", 6.431, CellKind::Percent, 0.1440},
    {"metal-gradient", "M4", 6.431, CellKind::Percent, 0.1201},
    {"metal-gradient", "M0", 10.458, CellKind::Percent, 0.1316},
    {"metal-gradient", "M1", 10.458, CellKind::Percent, 0.1316},
    {"metal-gradient", "M2", 10.458, CellKind::Percent, 0.0634},
    {"metal-gradient", "M3", 10.458, CellKind::Percent, 0.0310},
    {"metal-gradient", "M4", 10.458, CellKind::Percent, 0.0066},
    {"metal-gradient", "M0", 11.046, CellKind::Percent, 0.1472},
    {"metal-gradient", "M1", 11.046, CellKind::Percent, 0.1159},
    {"metal-gradient", "M2", 11.046, CellKind::Percent, 0.0576},
    {"metal-gradient", "M3", 11.046, CellKind::Percent, 0.0214},
    {"metal-gradient", "M4", 11.046, CellKind::Percent, 0.0080},
    {"metal-gradient", "M0", 23.668, CellKind::Percent, 0.4147},
    {"metal-gradient", "M1", 23.668, CellKind::Percent, 0.1509},
    {"metal-gradient", "M2", 23.668, CellKind::Percent, 0.0387},
    {"metal-gradient", "M3", 23.668, CellKind::Percent, 0.0433},
    {"metal-gradient", "M4", 23.668, CellKind::Percent, 0.0280},
    {"metal-gradient", "M0", 0.0, CellKind::Mape, 0.2971},
    {"metal-gradient", "M1", 0.0, CellKind::Mape, 0.2302},
    {"metal-gradient", "M2", 0.0, CellKind::Mape, 0.0564},
    {"metal-gradient", "M3", 0.0, CellKind::Mape, 0.0623},
    {"metal-gradient", "M4", 0.0, CellKind::Mape, 0.0385},
    {"metal-radial", "M0", 5.398, CellKind::Percent, 0.5008},
    {"metal-radial", "M1", 5.398, CellKind::Percent, 0.4842},
    {"metal-radial", "M2", 5.398, CellKind::Percent, 0.1386},
    {"metal-radial", "M3", 5.398, CellKind::Percent, 0.0692},
    {"metal-radial", "M4", 5.398, CellKind::Percent, 0.0268},
    {"metal-radial", "M0", 6.431, CellKind::Percent, 0.3886},
    {"metal-radial", "M1", 6.431, CellKind::Percent, 0.3886},
    {"metal-radial", "M2", 6.431, CellKind::Percent, 0.0459},
    {"metal-radial", "M3", 6.431, CellKind::Percent, 0.1429},
    {"metal-radial", "M4", 6.431, CellKind::Percent, 0.1189},
    {"metal-radial", "M0", 10.458, CellKind::Percent, 0.1495},
    {"metal-radial", "M1", 10.458, CellKind::Percent, 0.1495},
    {"metal-radial", "M2", 10.458, CellKind::Percent, 0.0686},
    {"metal-radial", "M3", 10.458, CellKind::Percent, 0.0250},
    {"metal-radial", "M4", 10.458, CellKind::Percent, 0.0058},
    {"metal-radial", "M0", 11.046, CellKind::Percent, 0.1731},
    {"metal-radial", "M1", 11.046, CellKind::Percent, 0.1392},
    {"metal-radial", "M2", 11.046, CellKind::Percent, 0.0667},
    {"metal-radial", "M3", 11.046, CellKind::Percent, 0.0186},
    {"metal-radial", "M4", 11.046, CellKind::Percent, 0.0056},
    {"metal-radial", "M0", 23.668, CellKind::Percent, 0.4827},
    {"metal-radial", "M1", 23.668, CellKind::Percent, 0.1695},
    {"metal-radial", "M2", 23.668, CellKind::Percent, 0.0390},
    {"metal-radial", "M3", 23.668, CellKind::Percent, 0.0436},
    {"metal-radial", "M4", 23.668, CellKind::Percent, 0.0284},
    {"metal-radial", "M0", 0.0, CellKind::Mape, 0.3389},
    {"metal-radial", "M1", 0.0, CellKind::Mape, 0.2662},
    {"metal-radial", "M2", 0.0, CellKind::Mape, 0.0718},
    {"metal-radial", "M3", 0.0, CellKind::Mape, 0.0599},
    {"metal-radial", "M4", 0.0, CellKind::Mape, 0.0371},
    {"metal-counting", "M0", 5.398, CellKind::Percent, 0.3367},
    {"metal-counting", "M1", 5.398, CellKind::Percent, 0.2410},
    {"metal-counting", "M2", 5.398, CellKind::Percent, 0.0384},
    {"metal-counting", "M3", 5.398, CellKind::Percent, 0.0851},
    {"metal-counting", "M4", 5.398, CellKind::Percent, 0.0356},
    {"metal-counting", "M0", 6.431, CellKind::Percent, 0.3155},
    {"metal-counting", "M1", 6.431, CellKind::Percent, 0.3155},
    {"metal-counting", "M2", 6.431, CellKind::Percent, 0.0606},
    {"metal-counting", "M3", 6.431, CellKind::Percent, 0.1731},
    {"metal-counting", "M4", 6.431, CellKind::Percent, 0.1480},
    {"metal-counting", "M0", 10.458, CellKind::Percent, 0.1080},
    {"metal-counting", "M1", 10.458, CellKind::Percent, 0.1080},
    {"metal-counting", "M2", 10.458, CellKind::Percent, 0.0572},
    {"metal-counting", "M3", 10.458, CellKind::Percent, 0.0300},
    {"metal-counting", "M4", 10.458, CellKind::Percent, 0.0045},
    {"metal-counting", "M0", 11.046, CellKind::Percent, 0.1099},
    {"metal-counting", "M1", 11.046, CellKind::Percent, 0.0859},
    {"metal-counting", "M2", 11.046, CellKind::Percent, 0.0432},
    {"metal-counting", "M3", 11.046, CellKind::Percent, 0.0132},
    {"metal-counting", "M4", 11.046, CellKind::Percent, 0.0165},
    {"metal-counting", "M0", 23.668, CellKind::Percent, 0.3327},
    {"metal-counting", "M1", 23.668, CellKind::Percent, 0.1364},
    {"metal-counting", "M2", 23.668, CellKind::Percent, 0.0263},
    {"metal-counting", "M3", 23.668, CellKind::Percent, 0.0317},
    {"metal-counting", "M4", 23.668, CellKind::Percent, 0.0115},
    {"metal-counting", "M0", 0.0, CellKind::Mape, 0.2405},
    {"metal-counting", "M1", 0.0, CellKind::Mape, 0.1774},
    {"metal-counting", "M2", 0.0, CellKind::Mape, 0.0452},
    {"metal-counting", "M3", 0.0, CellKind::Mape, 0.0666},
    {"metal-counting", "M4", 0.0, CellKind::Mape, 0.0432},
    {"metal-gradient", "M0", 5.398, CellKind::AbsoluteMicrons, 23.70},
    {"metal-gradient", "M0", 6.431, CellKind::AbsoluteMicrons, 22.70},
    {"metal-gradient", "M0", 10.458, CellKind::AbsoluteMicrons, 13.76},
    {"metal-gradient", "M0", 11.046, CellKind::AbsoluteMicrons, 16.26},
    {"metal-gradient", "M0", 23.668, CellKind::AbsoluteMicrons, 98.16},
    {"glass-gradient", "M0", 1.5, CellKind::AbsoluteMicrons, 17.53},
    {"glass-gradient", "M0", 2.0, CellKind::AbsoluteMicrons, 7.45},
    {"glass-gradient", "M0", 4.0, CellKind::AbsoluteMicrons, 28.69},
    {"glass-gradient", "M0", 5.0, CellKind::AbsoluteMicrons, 46.55},
    {"glass-gradient", "M0", 8.0, CellKind::AbsoluteMicrons, 102.13},
    {"metal-gradient", "M4", 5.398, CellKind::AbsoluteMicrons, 1.60},
    {"metal-gradient", "M4", 6.431, CellKind::AbsoluteMicrons, 7.73},
    {"metal-gradient", "M4", 10.458, CellKind::AbsoluteMicrons, 0.69},
    {"metal-gradient", "M4", 11.046, CellKind::AbsoluteMicrons, 0.88},
    {"metal-gradient", "M4", 23.668, CellKind::AbsoluteMicrons, 6.64},
    {"glass-gradient", "M4", 1.5, CellKind::AbsoluteMicrons, 0.41},
    {"glass-gradient", "M4", 2.0, CellKind::AbsoluteMicrons, 1.24},
    {"glass-gradient", "M4", 4.0, CellKind::AbsoluteMicrons, 0.44},
    {"glass-gradient", "M4", 5.0, CellKind::AbsoluteMicrons, 0.17},
    {"glass-gradient", "M4", 8.0, CellKind::AbsoluteMicrons, 0.02},
    {"metal-radial", "M0", 5.398, CellKind::AbsoluteMicrons, 27.03},
    {"metal-radial", "M0", 6.431, CellKind::AbsoluteMicrons, 24.99},
    {"metal-radial", "M0", 10.458, CellKind::AbsoluteMicrons, 15.63},
    {"metal-radial", "M0", 11.046, CellKind::AbsoluteMicrons, 19.12},
    {"metal-radial", "M0", 23.668, CellKind::AbsoluteMicrons, 114.25},
    {"glass-radial", "M0", 1.5, CellKind::AbsoluteMicrons, 19.62},
    {"glass-radial", "M0", 2.0, CellKind::AbsoluteMicrons, 8.76},
    {"glass-radial", "M0", 4.0, CellKind::AbsoluteMicrons, 31.23},
    {"glass-radial", "M0", 5.0, CellKind::AbsoluteMicrons, 51.35},
    {"glass-radial", "M0", 8.0, CellKind::AbsoluteMicrons, 113.35},
    {"metal-radial", "M4", 5.398, CellKind::AbsoluteMicrons, 1.45},
    {"metal-radial", "M4", 6.431, CellKind::AbsoluteMicrons, 7.65},
    {"metal-radial", "M4", 10.458, CellKind::AbsoluteMicrons, 0.60},
    {"metal-radial", "M4", 11.046, CellKind::AbsoluteMicrons, 0.62},
    {"metal-radial", "M4", 23.668, CellKind::AbsoluteMicrons, 6.71},
    {"glass-radial", "M4", 1.5, CellKind::AbsoluteMicrons, 0.46},
    {"glass-radial", "M4", 2.0, CellKind::AbsoluteMicrons, 1.03},
    {"glass-radial", "M4", 4.0, CellKind::AbsoluteMicrons, 0.08},
    {"glass-radial", "M4", 5.0, CellKind::AbsoluteMicrons, 0.51},
    {"glass-radial", "M4", 8.0, CellKind::AbsoluteMicrons, 0.19},
    {"metal-counting", "M0", 5.398, CellKind::AbsoluteMicrons, 18.18},
    {"metal-counting", "M0", 6.431, CellKind::AbsoluteMicrons, 20.29},
    {"metal-counting", "M0", 10.458, CellKind::AbsoluteMicrons, 11.29},
    {"metal-counting", "M0", 11.046, CellKind::AbsoluteMicrons, 12.14},
    {"metal-counting", "M0", 23.668, CellKind::AbsoluteMicrons, 78.74},
    {"glass-counting", "M0", 1.5, CellKind::AbsoluteMicrons, 13.09},
    {"glass-counting", "M0", 2.0, CellKind::AbsoluteMicrons, 5.55},
    {"glass-counting", "M0", 4.0, CellKind::AbsoluteMicrons, 21.10},
    {"glass-counting", "M0", 5.0, CellKind::AbsoluteMicrons, 34.00},
    {"glass-counting", "M0", 8.0, CellKind::AbsoluteMicrons, 75.27},
    {"metal-counting", "M4", 5.398, CellKind::AbsoluteMicrons, 1.92},
    {"metal-counting", "M4", 6.431, CellKind::AbsoluteMicrons, 9.52},
    {"metal-counting", "M4", 10.458, CellKind::AbsoluteMicrons, 0.47},
    {"metal-counting", "M4", 11.046, CellKind::AbsoluteMicrons, 1.82},
    {"metal-counting", "M4", 23.668, CellKind::AbsoluteMicrons, 2.73},
    {"glass-counting", "M4", 1.5, CellKind::AbsoluteMicrons, 1.21},
    {"glass-counting", "M4", 2.0, CellKind::AbsoluteMicrons, 1.83},
    {"glass-counting", "M4", 4.0, CellKind::AbsoluteMicrons, 0.83},
    {"glass-counting", "M4", 5.0, CellKind::AbsoluteMicrons, 0.09},
    {"glass-counting", "M4", 8.0, CellKind::AbsoluteMicrons, 0.30},
}};

}  // namespace gaugecal::published
