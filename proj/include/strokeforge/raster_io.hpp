#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace strokeforge {

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row-major 8-bit luminance raster.
class GrayImage {
 public:
  GrayImage(int width, int height, std::uint8_t fill = 255);
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::uint8_t at(int x, int y) const { return pixels_[index(x, y)]; }
  void set(int x, int y, std::uint8_t v) { pixels_[index(x, y)] = v; }
  std::span<const std::uint8_t> pixels() const { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

/// Row-major ink mask; true marks a foreground (ink) pixel.
class BinaryImage {
 public:
  BinaryImage(int width, int height, bool fill = false);

  int width() const { return width_; }
  int height() const { return height_; }

  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
  bool at(int x, int y) const { return pixels_[index(x, y)] != 0; }
  // Out-of-range reads return background.
  bool at_or_background(int x, int y) const { return contains(x, y) && at(x, y); }
  void set(int x, int y, bool v) { pixels_[index(x, y)] = v ? 1 : 0; }

  std::size_t foreground_count() const;
  bool empty() const { return foreground_count() == 0; }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

struct OtsuThreshold {};
struct FixedThreshold {
  std::uint8_t value = 128;
};
using BinarizeMethod = std::variant<OtsuThreshold, FixedThreshold>;

/// Threshold maximizing between-class variance of the histogram. A pixel with
/// luminance < threshold is ink. Constant images return their single value.
std::uint8_t otsu_threshold(const GrayImage& img);

/// Dark-on-light binarization: pixel is foreground iff luminance < threshold.
BinaryImage binarize(const GrayImage& img, const BinarizeMethod& method);

/// Inverse photometric interpretation (light ink on dark background).
GrayImage invert(const GrayImage& img);

/// Foreground as 0, background as 255.
GrayImage to_gray(const BinaryImage& img);

/// Integer luma, round(0.299 R + 0.587 G + 0.114 B).
std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b);

GrayImage load_png(std::span<const std::uint8_t> bytes);
GrayImage load_png_file(const std::filesystem::path& path);

std::vector<std::uint8_t> encode_png(const GrayImage& img);
std::vector<std::uint8_t> encode_png(const BinaryImage& img);
void save_png(const GrayImage& img, const std::filesystem::path& path);
void save_png(const BinaryImage& img, const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace strokeforge
