#pragma once

#include <array>

// Published plot coordinates of the five lowest nonzero diameter-normalized
// Neumann eigenvalues of the isosceles family, sorted ascending per aperture
// (so each row is mu_2 D^2 .. mu_6 D^2).  The aperture pi/3 joins the
// subequilateral and superequilateral halves of the sweep.
namespace trieig::data {

struct AperturePoint {
  double alpha;
  std::array<double, 5> mu_d2;
};

inline constexpr std::array<AperturePoint, 21> kPublishedApertureSweep = {{
    {0.4488, {15.1856, 50.8980, 72.1139, 106.9827, 169.7954}},
    {0.5086, {15.3319, 51.3716, 57.9203, 107.8767, 145.6839}},
    {0.5685, {15.4980, 47.7810, 51.8980, 108.7367, 127.9234}},
    {0.6283, {15.6843, 40.2687, 52.4685, 109.2524, 114.3962}},
    {0.6882, {15.8911, 34.5373, 53.0678, 103.8134, 108.0722}},
    {0.7480, {16.1184, 30.0580, 53.6669, 95.3488, 101.4950}},
    {0.8078, {16.3663, 26.4863, 54.2120, 88.4487, 91.9613}},
    {0.8677, {16.6343, 23.5897, 54.6010, 82.7279, 83.5811}},
    {0.9275, {16.9216, 21.2061, 54.6468, 77.0899, 77.9090}},
    {0.9874, {17.2267, 19.2199, 54.0664, 72.6266, 73.7858}},
    {1.0472, {17.5467, 17.5469, 52.6476, 70.1981, 70.2009}},
    {1.1519, {18.0249, 21.5130, 57.9005, 76.9673, 82.6791}},
    {1.2566, {18.4824, 25.8608, 62.0794, 83.3902, 98.9861}},
    {1.3614, {18.9202, 30.4675, 66.4473, 89.2344, 118.1248}},
    {1.4661, {19.3391, 35.1089, 71.8275, 94.3500, 138.8719}},
    {1.5708, {19.7398, 39.4804, 78.9687, 98.7127, 157.9454}},
    {1.6755, {20.1222, 43.3055, 88.5963, 102.3958, 171.2929}},
    {1.7802, {20.4866, 46.4620, 101.3303, 105.5133, 180.1369}},
    {1.8850, {20.8324, 48.9914, 108.1772, 117.6049, 187.5220}},
    {1.9897, {21.1593, 51.0112, 110.4795, 137.2928, 196.0473}},
    {2.0944, {21.4665, 52.6407, 112.4895, 157.9429, 210.5943}}
}};

}  // namespace trieig::data
