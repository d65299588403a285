#include "dessin/render.hpp"

#include <fstream>
#include <stdexcept>
#include <thread>

#include "dessin/errors.hpp"

namespace dessin {

namespace {

Complex beta(const BelyiModel& m, Complex z) {
  Complex num = 1.0;
  for (const auto& v : m.white)
    for (int i = 0; i < v.degree; ++i) num *= z - v.z;
  return num / (m.r * (z - m.c));
}

}  // namespace

int attraction_steps(const BelyiModel& m, Complex z, double r0, double escape,
                     int max_iter) {
  if (!(r0 > 0 && r0 < 0.25)) throw std::invalid_argument("need 0 < r0 < 1/4");
  if (!(escape > 2)) throw std::invalid_argument("need escape radius > 2");
  // Only fixed attractors participate: 0 always is one in a completely
  // normalized model, 1 only when beta(1) stays in its disk.
  bool zero_fixed = std::abs(beta(m, 0.0)) < r0 / 2;
  bool one_fixed = std::abs(beta(m, 1.0) - 1.0) < r0 / 2;
  for (int n = 0; n <= max_iter; ++n) {
    if (std::abs(z) > escape) return n;
    if (zero_fixed && std::abs(z) < r0) return n;
    if (one_fixed && std::abs(z - 1.0) < r0) return n;
    if (std::abs(z - m.c) < 1e-14) return n;  // pole: treated as escape
    z = beta(m, z);
  }
  return kNotCaptured;
}

Image render(const BelyiModel& m, const Viewport& v, const ColorRule& rule,
             const RenderOptions& opts) {
  if (rule.colors.size() != rule.band_edges.size() + 1)
    throw std::invalid_argument("color rule needs |colors| = |edges| + 1");
  Image img;
  img.width = v.pixels_x;
  img.height = v.pixels_y;
  img.rgb.assign((std::size_t)img.width * img.height * 3, 0);

  auto paint_rows = [&](int row_begin, int row_end) {
    for (int j = row_begin; j < row_end; ++j) {
      for (int i = 0; i < img.width; ++i) {
        double re =
            v.center.real() - v.width / 2 + (i + 0.5) * v.width / v.pixels_x;
        double im =
            v.center.imag() + v.height / 2 - (j + 0.5) * v.height / v.pixels_y;
        int steps = attraction_steps(m, Complex(re, im), opts.r0, opts.escape,
                                     opts.max_iter);
        Rgb color = rule.colors.back();
        if (steps != kNotCaptured) {
          for (std::size_t band = 0; band < rule.band_edges.size(); ++band) {
            if (steps <= rule.band_edges[band]) {
              color = rule.colors[band];
              break;
            }
          }
        }
        std::size_t at = 3 * ((std::size_t)j * img.width + i);
        img.rgb[at] = color[0];
        img.rgb[at + 1] = color[1];
        img.rgb[at + 2] = color[2];
      }
    }
  };

  int threads = std::max(1, opts.threads);
  if (threads == 1) {
    paint_rows(0, img.height);
  } else {
    std::vector<std::thread> pool;
    int chunk = (img.height + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      int begin = t * chunk;
      int end = std::min(img.height, begin + chunk);
      if (begin < end) pool.emplace_back(paint_rows, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return img;
}

void write_ppm(const Image& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path);
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.rgb.data()),
            (std::streamsize)img.rgb.size());
  if (!out) throw IoFailure("write failed for " + path);
}

}  // namespace dessin
