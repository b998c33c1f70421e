#include <algorithm>
#include <cctype>

#include "strokeforge/parallel.hpp"
#include "strokeforge/serialization.hpp"
#include "strokeforge/thinning.hpp"

namespace strokeforge {

namespace fs = std::filesystem;

std::size_t PairManifest::pair_count() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.ok; }));
}

std::size_t PairManifest::skipped_count() const { return entries.size() - pair_count(); }

namespace {

bool has_png_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png";
}

}  // namespace

PairManifest generate_training_pairs(const fs::path& input_dir, const fs::path& output_dir,
                                     const BinarizeMethod& method, unsigned jobs) {
  if (!fs::is_directory(input_dir)) throw IoError("not a directory: " + input_dir.string());
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec) throw IoError("cannot create " + output_dir.string() + ": " + ec.message());

  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(input_dir)) {
    if (entry.is_regular_file() && has_png_extension(entry.path())) inputs.push_back(entry.path());
  }
  std::sort(inputs.begin(), inputs.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

  PairManifest manifest;
  manifest.entries.resize(inputs.size());
  parallel_for(inputs.size(), jobs, [&](std::size_t i) {
    PairEntry& entry = manifest.entries[i];
    const std::string stem = inputs[i].stem().string();
    entry.source = inputs[i].filename().string();
    entry.original = stem + "_original.png";
    try {
      const GrayImage original = load_png_file(inputs[i]);
      const BinaryImage skeleton = skeletonize(original, method);
      save_png(original, output_dir / entry.original);
      entry.skeleton = stem + "_skeleton.png";
      save_png(skeleton, output_dir / *entry.skeleton);
      entry.ok = true;
    } catch (const std::runtime_error& e) {
      entry.original = entry.source;
      entry.skeleton.reset();
      entry.ok = false;
      entry.reason = e.what();
    }
  });

  write_file(output_dir / "manifest.json", manifest_to_json(manifest).dump(2) + "\n");
  return manifest;
}

}  // namespace strokeforge
