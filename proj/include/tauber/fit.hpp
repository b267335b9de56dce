#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tauber {

// Ordinary least-squares slope of y against x.  Needs at least two distinct x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

// Slope of log(values) against log(points), skipping nonpositive values.
// Returns -inf when fewer than two positive values remain.
double log_log_slope(std::span<const std::int64_t> points,
                     std::span<const double> values);

// Roughly `per_octave` log-spaced integers in [lo, hi], always including both
// ends, strictly increasing.
std::vector<std::int64_t> log_spaced(std::int64_t lo, std::int64_t hi,
                                     int per_octave = 16);

// Geometric grid start, start*factor, ... up to and including stop.
std::vector<std::int64_t> geometric_grid(std::int64_t start, std::int64_t stop,
                                         std::int64_t factor);

bool is_power_of_two(std::int64_t n);

}  // namespace tauber
