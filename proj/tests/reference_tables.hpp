#pragma once

// Reference convergence rows at 4 decimals; not every N is listed.
// Columns: N, entropy, split scale, dimension.

#include <array>
#include <span>

namespace ifd::testing {

struct PrintedRow {
  int n;
  double entropy;
  double split_scale;
  double dimension;
};

// Vacuous: m(Θ) = 1.
inline constexpr std::array<PrintedRow, 10> kTable1{{
    {1, 0, 0, 0},
    {2, 1.5850, 1.5850, 1},
    {3, 2.8074, 2.8074, 1},
    {4, 3.9069, 3.9069, 1},
    {5, 4.9542, 4.9542, 1},
    {6, 5.9773, 5.9773, 1},
    {7, 6.9887, 6.9887, 1},
    {8, 7.9944, 7.9944, 1},
    {19, 18.9999, 18.9999, 1},
    {20, 20.0000, 20.0000, 1},
}};

// Uniform Bayesian: m({w_i}) = 1/N.
inline constexpr std::array<PrintedRow, 10> kTable2{{
    {1, 0, 0, 0},
    {2, 1, 1, 1},
    {3, 1.5850, 1.5850, 1},
    {4, 2, 2, 1},
    {5, 2.3219, 2.3219, 1},
    {6, 2.5850, 2.5850, 1},
    {7, 2.8074, 2.8074, 1},
    {8, 3, 3, 1},
    {9, 3.1699, 3.1699, 1},
    {10, 3.3219, 3.3219, 1},
}};

// Uniform power set: m(A) = 1/(2^N - 1). Row 7 carries split scale 7.0418,
// which disagrees with its own entropy/dimension pair (those give 7.0148).
inline constexpr std::array<PrintedRow, 15> kTable3{{
    {1, 0, 0, 0},
    {2, 2.1133, 1.7834, 1.1850},
    {3, 3.8877, 2.9691, 1.3094},
    {4, 5.5500, 4.0186, 1.3811},
    {5, 7.1610, 5.0260, 1.4248},
    {6, 8.7428, 6.0214, 1.4520},
    {7, 10.3048, 7.0418, 1.4690},
    {8, 11.8523, 8.0095, 1.4798},
    {9, 13.3886, 9.0058, 1.4867},
    {10, 14.9162, 10.0034, 1.4911},
    {21, 31.4965, 21.0000, 1.4998},
    {22, 32.9974, 22.0000, 1.4999},
    {23, 34.4981, 23.0000, 1.4999},
    {24, 35.9985, 24.0000, 1.4999},
    {25, 37.4989, 25.0000, 1.5000},
}};

// Maximum Deng entropy assignment.
inline constexpr std::array<PrintedRow, 20> kTable4{{
    {1, 0, 0, 0},
    {2, 2.3219, 1.9757, 1.1752},
    {3, 4.2479, 3.1071, 1.3672},
    {4, 6.0224, 4.0970, 1.4699},
    {5, 7.7211, 5.0679, 1.5235},
    {6, 9.3772, 6.0434, 1.5516},
    {7, 11.0077, 7.0265, 1.5666},
    {8, 12.6223, 8.0157, 1.5747},
    {9, 14.2266, 9.0091, 1.5791},
    {10, 15.8244, 10.0052, 1.5816},
    {11, 17.4178, 11.0029, 1.5830},
    {12, 19.0084, 12.0016, 1.5838},
    {13, 20.5971, 13.0009, 1.5843},
    {14, 22.1845, 14.0005, 1.5846},
    {15, 23.7711, 15.0003, 1.5847},
    {16, 25.3572, 16.0001, 1.5848},
    {17, 26.9429, 17.0001, 1.5849},
    {18, 28.5283, 18.0000, 1.5849},
    {19, 30.1136, 19.0000, 1.5849},
    {20, 31.6988, 20.0000, 1.5849},
}};

// m({w1}) = 5/6, m({w1, w2}) = 1/6.
inline constexpr PrintedRow kMixedTwoElement{2, 0.9142, 1.1381, 0.8033};

inline constexpr double kPrintedTolerance = 5e-4;

}  // namespace ifd::testing
