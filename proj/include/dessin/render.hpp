#pragma once

#include <array>
#include <string>
#include <vector>

#include "dessin/belyi.hpp"

namespace dessin {

struct Viewport {
  Complex center{0.0, 0.0};
  double width = 3.0;
  double height = 2.0;
  int pixels_x = 600;
  int pixels_y = 400;
};

using Rgb = std::array<unsigned char, 3>;

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kYellow{255, 215, 0};
inline constexpr Rgb kRed{220, 40, 40};
inline constexpr Rgb kBlue{40, 60, 220};

// Attraction-time bands: steps <= band_edges[i] get colors[i]; anything
// beyond the last edge, including never-captured points, gets colors.back().
struct ColorRule {
  std::vector<int> band_edges{5, 7, 9};
  std::vector<Rgb> colors{kWhite, kYellow, kRed, kBlue};
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<unsigned char> rgb;  // row-major, top-to-bottom
};

inline constexpr int kNotCaptured = -1;

struct RenderOptions {
  double r0 = 0.05;     // attractor disk radius, < 1/4
  double escape = 1e3;  // infinity neighborhood |z| > escape
  int max_iter = 512;
  int threads = 1;
};

// Smallest n <= max_iter with beta^n(z) inside the attractor set O (disks at
// the attracting fixed points among {0, 1}, plus the infinity neighborhood);
// kNotCaptured otherwise. An iterate within 1e-14 of the pole counts as an
// immediate escape.
int attraction_steps(const BelyiModel& m, Complex z, double r0, double escape,
                     int max_iter);

Image render(const BelyiModel& m, const Viewport& v, const ColorRule& rule,
             const RenderOptions& opts);

// Binary P6 pixmap; bit-exact for fixed inputs.
void write_ppm(const Image& img, const std::string& path);

}  // namespace dessin
