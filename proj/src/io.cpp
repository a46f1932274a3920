#include "wavetomo/io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wt {

std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t h) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

void write_cache(const std::string& path, const double* data,
                 const std::vector<int>& dims, const std::vector<double>& spacing,
                 std::uint64_t seed) {
    std::size_t count = 1;
    for (int d : dims) count *= (std::size_t)d;
    const std::uint64_t sum = fnv1a64(data, count * sizeof(double));
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << "magic WTCACHE\n" << "version 1\n" << "dtype f64\n"
      << "ndim " << dims.size() << "\n";
    f << "dims";
    for (int d : dims) f << " " << d;
    f << "\nspacing";
    char buf[32];
    for (double s : spacing) {
        std::snprintf(buf, sizeof(buf), " %.17g", s);
        f << buf;
    }
    f << "\nseed " << seed << "\n";
    std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)sum);
    f << "checksum " << buf << "\n";
    f.write(reinterpret_cast<const char*>(data), count * sizeof(double));
    if (!f) throw std::runtime_error("short write to " + path);
}

bool read_cache(const std::string& path, std::vector<double>& out, CacheHeader& hdr) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    CacheHeader h;
    std::string line, key;
    auto next = [&](const char* want) -> bool {
        if (!std::getline(f, line)) return false;
        std::istringstream ss(line);
        ss >> key;
        return key == want ? (bool)ss : false;
    };
    if (!next("magic")) return false;
    {
        std::istringstream ss(line);
        std::string m;
        ss >> key >> m;
        if (m != "WTCACHE") return false;
    }
    if (!next("version")) return false;
    { std::istringstream ss(line); ss >> key >> h.version; if (h.version != 1) return false; }
    if (!next("dtype")) return false;
    { std::istringstream ss(line); ss >> key >> h.dtype; if (h.dtype != "f64") return false; }
    int ndim = 0;
    if (!next("ndim")) return false;
    { std::istringstream ss(line); ss >> key >> ndim; }
    if (ndim < 1 || ndim > 8) return false;
    if (!next("dims")) return false;
    {
        std::istringstream ss(line);
        ss >> key;
        int d;
        while (ss >> d) h.dims.push_back(d);
    }
    if ((int)h.dims.size() != ndim) return false;
    if (!next("spacing")) return false;
    {
        std::istringstream ss(line);
        ss >> key;
        double s;
        while (ss >> s) h.spacing.push_back(s);
    }
    if (!next("seed")) return false;
    { std::istringstream ss(line); ss >> key >> h.seed; }
    if (!next("checksum")) return false;
    {
        std::istringstream ss(line);
        std::string hex;
        ss >> key >> hex;
        h.checksum = std::strtoull(hex.c_str(), nullptr, 16);
    }
    std::size_t count = 1;
    for (int d : h.dims) {
        if (d <= 0) return false;
        count *= (std::size_t)d;
    }
    std::vector<double> data(count);
    f.read(reinterpret_cast<char*>(data.data()), count * sizeof(double));
    if ((std::size_t)f.gcount() != count * sizeof(double)) return false;
    if (fnv1a64(data.data(), count * sizeof(double)) != h.checksum) return false;
    out = std::move(data);
    hdr = h;
    return true;
}

namespace {

void write_doubles_line(std::ofstream& f, const double* v, int n) {
    char buf[40];
    for (int i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
        if (i) f << ",";
        f << buf;
    }
    f << "\n";
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::strtod(tok.c_str(), nullptr));
    return out;
}

// "key=value" fields from a "# name v1 k=v k=v" header line
std::string header_field(const std::string& line, const std::string& k) {
    const std::string pat = " " + k + "=";
    auto pos = line.find(pat);
    if (pos == std::string::npos)
        throw std::runtime_error("missing header field " + k);
    pos += pat.size();
    auto end = line.find(' ', pos);
    return line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

}  // namespace

void write_sinogram_csv(const std::string& path, const Sinogram& s, double scale) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    char buf[40];
    f << "# sinogram v1 scale=";
    std::snprintf(buf, sizeof(buf), "%.17g", scale);
    f << buf << " angles=";
    for (int i = 0; i < s.na(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", s.angles_deg[i]);
        f << (i ? "," : "") << buf;
    }
    f << " offsets=";
    for (int i = 0; i < s.no(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", s.offsets[i]);
        f << (i ? "," : "") << buf;
    }
    f << "\n";
    for (int oi = 0; oi < s.no(); ++oi)
        write_doubles_line(f, s.v.data() + (size_t)oi * s.na(), s.na());
}

Sinogram read_sinogram_csv(const std::string& path, double* scale) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::string line;
    if (!std::getline(f, line) || line.rfind("# sinogram v1", 0) != 0)
        throw std::runtime_error("not a sinogram csv: " + path);
    Sinogram s;
    s.angles_deg = parse_list(header_field(line, "angles"));
    s.offsets = parse_list(header_field(line, "offsets"));
    if (scale) *scale = std::strtod(header_field(line, "scale").c_str(), nullptr);
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        auto row = parse_list(line);
        if ((int)row.size() != s.na())
            throw std::runtime_error("bad row width in " + path);
        s.v.insert(s.v.end(), row.begin(), row.end());
    }
    if ((int)s.v.size() != s.na() * s.no())
        throw std::runtime_error("row count mismatch in " + path);
    return s;
}

void write_image_csv(const std::string& path, const Image& img) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    char buf[40];
    f << "# image v1 nx=" << img.nx << " ny=" << img.ny;
    const double ext[4] = {img.x0, img.x1, img.y0, img.y1};
    const char* name[4] = {"x0", "x1", "y0", "y1"};
    for (int i = 0; i < 4; ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", ext[i]);
        f << " " << name[i] << "=" << buf;
    }
    f << "\n";
    for (int ix = 0; ix < img.nx; ++ix)
        write_doubles_line(f, img.v.data() + (size_t)ix * img.ny, img.ny);
}

Image read_image_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::string line;
    if (!std::getline(f, line) || line.rfind("# image v1", 0) != 0)
        throw std::runtime_error("not an image csv: " + path);
    Image img;
    img.nx = (int)std::strtol(header_field(line, "nx").c_str(), nullptr, 10);
    img.ny = (int)std::strtol(header_field(line, "ny").c_str(), nullptr, 10);
    img.x0 = std::strtod(header_field(line, "x0").c_str(), nullptr);
    img.x1 = std::strtod(header_field(line, "x1").c_str(), nullptr);
    img.y0 = std::strtod(header_field(line, "y0").c_str(), nullptr);
    img.y1 = std::strtod(header_field(line, "y1").c_str(), nullptr);
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        auto row = parse_list(line);
        if ((int)row.size() != img.ny)
            throw std::runtime_error("bad row width in " + path);
        img.v.insert(img.v.end(), row.begin(), row.end());
    }
    if ((int)img.v.size() != img.nx * img.ny)
        throw std::runtime_error("row count mismatch in " + path);
    return img;
}

void write_png_gray(const std::string& path, const Image& img) {
    double lo = INFINITY, hi = -INFINITY;
    for (double x : img.v) {
        if (std::isnan(x)) continue;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    if (!(hi > lo)) {
        lo = 0;
        hi = 1;
    }
    FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) throw std::runtime_error("cannot write " + path);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    if (!png || !info || setjmp(png_jmpbuf(png))) {
        std::fclose(fp);
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("png write failed for " + path);
    }
    png_init_io(png, fp);
    png_set_IHDR(png, info, img.nx, img.ny, 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_byte> row(img.nx);
    for (int r = 0; r < img.ny; ++r) {
        const int iy = img.ny - 1 - r;   // top row = largest y
        for (int ix = 0; ix < img.nx; ++ix) {
            const double x = img.at(ix, iy);
            double t = std::isnan(x) ? 0.0 : (x - lo) / (hi - lo);
            if (t < 0) t = 0;
            if (t > 1) t = 1;
            row[ix] = (png_byte)std::lround(t * 255.0);
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

}  // namespace wt
