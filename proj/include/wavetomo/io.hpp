#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavetomo/image.hpp"
#include "wavetomo/tomo.hpp"

namespace wt {

std::uint64_t fnv1a64(const void* data, std::size_t n,
                      std::uint64_t h = 14695981039346656037ULL);

// Binary array cache: 8 ASCII header lines (magic, version, dtype, ndim,
// dims, spacing, seed, checksum) followed by little-endian raw doubles.
struct CacheHeader {
    int version = 1;
    std::string dtype = "f64";
    std::vector<int> dims;
    std::vector<double> spacing;
    std::uint64_t seed = 0;
    std::uint64_t checksum = 0;
};

void write_cache(const std::string& path, const double* data,
                 const std::vector<int>& dims, const std::vector<double>& spacing,
                 std::uint64_t seed);

// Returns false (and leaves out untouched) when the file is missing,
// malformed, or fails its checksum.
bool read_cache(const std::string& path, std::vector<double>& out, CacheHeader& hdr);

void write_sinogram_csv(const std::string& path, const Sinogram& s, double scale = 1.0);
Sinogram read_sinogram_csv(const std::string& path, double* scale = nullptr);

void write_image_csv(const std::string& path, const Image& img);
Image read_image_csv(const std::string& path);

// 8-bit grayscale, min/max normalized; NaN renders as black.
void write_png_gray(const std::string& path, const Image& img);

}  // namespace wt
