#include "strokeforge/raster_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <iterator>

namespace strokeforge {

namespace {

void check_dimensions(int width, int height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("image dimensions must be positive, got " + std::to_string(width) + "x" +
                                std::to_string(height));
  }
}

std::size_t area(int width, int height) {
  return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill) : width_(width), height_(height) {
  check_dimensions(width, height);
  pixels_.assign(area(width, height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dimensions(width, height);
  if (pixels_.size() != area(width, height)) {
    throw std::invalid_argument("pixel buffer size does not match image dimensions");
  }
}

BinaryImage::BinaryImage(int width, int height, bool fill) : width_(width), height_(height) {
  check_dimensions(width, height);
  pixels_.assign(area(width, height), fill ? 1 : 0);
}

std::size_t BinaryImage::foreground_count() const {
  return static_cast<std::size_t>(std::count(pixels_.begin(), pixels_.end(), std::uint8_t{1}));
}

std::uint8_t otsu_threshold(const GrayImage& img) {
  std::array<std::uint64_t, 256> hist{};
  for (std::uint8_t v : img.pixels()) ++hist[v];

  const auto lo = static_cast<int>(*std::min_element(img.pixels().begin(), img.pixels().end()));
  const auto hi = static_cast<int>(*std::max_element(img.pixels().begin(), img.pixels().end()));
  if (lo == hi) return static_cast<std::uint8_t>(lo);

  const double total = static_cast<double>(img.pixels().size());
  double sum_all = 0.0;
  for (int v = 0; v < 256; ++v) sum_all += static_cast<double>(v) * static_cast<double>(hist[v]);

  // Class 0 holds luminances < t. Every t in (lo, hi] splits both classes non-empty.
  double best = -1.0;
  int first_best = lo + 1;
  int last_best = lo + 1;
  double count0 = 0.0;
  double sum0 = 0.0;
  for (int t = lo + 1; t <= hi; ++t) {
    count0 += static_cast<double>(hist[t - 1]);
    sum0 += static_cast<double>(t - 1) * static_cast<double>(hist[t - 1]);
    const double count1 = total - count0;
    const double mean_diff = sum0 / count0 - (sum_all - sum0) / count1;
    const double between = count0 * count1 * mean_diff * mean_diff;
    if (between > best) {
      best = between;
      first_best = last_best = t;
    } else if (between == best) {
      last_best = t;
    }
  }
  // Centre of the plateau of maximal variance (empty histogram bins create plateaus).
  return static_cast<std::uint8_t>((first_best + last_best) / 2);
}

BinaryImage binarize(const GrayImage& img, const BinarizeMethod& method) {
  const std::uint8_t threshold = std::visit(
      [&](const auto& m) -> std::uint8_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, OtsuThreshold>) {
          return otsu_threshold(img);
        } else {
          return m.value;
        }
      },
      method);

  BinaryImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) out.set(x, y, img.at(x, y) < threshold);
  return out;
}

GrayImage invert(const GrayImage& img) {
  std::vector<std::uint8_t> px(img.pixels().begin(), img.pixels().end());
  for (auto& v : px) v = static_cast<std::uint8_t>(255 - v);
  return GrayImage(img.width(), img.height(), std::move(px));
}

GrayImage to_gray(const BinaryImage& img) {
  GrayImage out(img.width(), img.height(), 255);
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      if (img.at(x, y)) out.set(x, y, 0);
  return out;
}

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const unsigned scaled = 299u * r + 587u * g + 114u * b;
  return static_cast<std::uint8_t>((scaled + 500u) / 1000u);
}

GrayImage load_png(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;

  if (png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()) == 0) {
    throw DecodeError(std::string("malformed PNG: ") + image.message);
  }
  image.format = PNG_FORMAT_RGB;
  if (image.width == 0 || image.height == 0 || image.width > (1u << 20) || image.height > (1u << 20)) {
    png_image_free(&image);
    throw DecodeError("unsupported PNG dimensions");
  }

  std::vector<std::uint8_t> rgb(PNG_IMAGE_SIZE(image));
  // Transparent pixels are composited onto white.
  png_color background{255, 255, 255};
  if (png_image_finish_read(&image, &background, rgb.data(), 0, nullptr) == 0) {
    throw DecodeError(std::string("malformed PNG: ") + image.message);
  }

  const int width = static_cast<int>(image.width);
  const int height = static_cast<int>(image.height);
  std::vector<std::uint8_t> gray(area(width, height));
  for (std::size_t i = 0; i < gray.size(); ++i) gray[i] = luma(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
  return GrayImage(width, height, std::move(gray));
}

GrayImage load_png_file(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  try {
    return load_png(bytes);
  } catch (const DecodeError& e) {
    throw DecodeError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_png(const GrayImage& img) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = PNG_FORMAT_GRAY;

  png_alloc_size_t size = 0;
  if (png_image_write_to_memory(&image, nullptr, &size, 0, img.pixels().data(), 0, nullptr) == 0) {
    throw IoError(std::string("PNG encoding failed: ") + image.message);
  }
  std::vector<std::uint8_t> out(size);
  if (png_image_write_to_memory(&image, out.data(), &size, 0, img.pixels().data(), 0, nullptr) == 0) {
    throw IoError(std::string("PNG encoding failed: ") + image.message);
  }
  out.resize(size);
  return out;
}

std::vector<std::uint8_t> encode_png(const BinaryImage& img) { return encode_png(to_gray(img)); }

void save_png(const GrayImage& img, const std::filesystem::path& path) { write_file(path, encode_png(img)); }

void save_png(const BinaryImage& img, const std::filesystem::path& path) { write_file(path, encode_png(img)); }

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  write_file(path, std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace strokeforge
