/**
 * @file imaging.hpp
 * @brief Grayscale rasters, PGM I/O, Gaussian blur, Otsu binarization,
 *        connected components and dust removal
 *
 * Coordinates: pixel (x, y) has its center at integer (x, y) and covers
 * [x - 0.5, x + 0.5] x [y - 0.5, y + 0.5]. Storage is row-major.
 */

#pragma once

#include <gaugecal/error.hpp>
#include <gaugecal/io.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace gaugecal {

// =============================================================================
// Raster
// =============================================================================

template <typename T>
class Raster {
public:
    using value_type = T;

    Raster() = default;

    Raster(int width, int height, T fill = T{}) : width_(width), height_(height) {
        if (width < 1 || height < 1) {
            throw InvalidArgument("raster dimensions must be >= 1");
        }
        data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
    }

    Raster(int width, int height, std::vector<T> data) : width_(width), height_(height), data_(std::move(data)) {
        if (width < 1 || height < 1) {
            throw InvalidArgument("raster dimensions must be >= 1");
        }
        if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
            throw InvalidArgument("raster data size does not match dimensions");
        }
    }

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }

    T& operator()(int x, int y) { return data_[index(x, y)]; }
    const T& operator()(int x, int y) const { return data_[index(x, y)]; }

    /// Clamped access; out-of-range coordinates read the nearest edge pixel.
    const T& clamped(int x, int y) const {
        return data_[index(std::clamp(x, 0, width_ - 1), std::clamp(y, 0, height_ - 1))];
    }

    bool contains(int x, int y) const noexcept { return x >= 0 && y >= 0 && x < width_ && y < height_; }

    std::span<T> pixels() noexcept { return data_; }
    std::span<const T> pixels() const noexcept { return data_; }

    friend bool operator==(const Raster& a, const Raster& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.data_ == b.data_;
    }

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

/// 8-bit intensities, 0 = black, 255 = white.
using GrayImage = Raster<std::uint8_t>;
using FloatImage = Raster<double>;

/// 1 = dark/object, 0 = background.
using BinaryMask = Raster<std::uint8_t>;

/// 0 = background, 1..K = components.
struct LabelMap {
    Raster<std::int32_t> labels;
    std::vector<std::size_t> component_sizes;  ///< index = label; [0] counts background

    int count() const noexcept { return static_cast<int>(component_sizes.size()) - 1; }
};

inline FloatImage to_float(const GrayImage& img) {
    std::vector<double> v(img.pixels().begin(), img.pixels().end());
    return FloatImage(img.width(), img.height(), std::move(v));
}

/// Rounds to nearest and clamps to [0, 255].
inline GrayImage to_gray(const FloatImage& img) {
    std::vector<std::uint8_t> v(img.size());
    auto src = img.pixels();
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = static_cast<std::uint8_t>(std::clamp(std::round(src[i]), 0.0, 255.0));
    }
    return GrayImage(img.width(), img.height(), std::move(v));
}

/// Bilinear sample with edge replication.
inline double sample_bilinear(const FloatImage& img, double x, double y) {
    const double fx = std::floor(x);
    const double fy = std::floor(y);
    const int x0 = static_cast<int>(fx);
    const int y0 = static_cast<int>(fy);
    const double ax = x - fx;
    const double ay = y - fy;
    const double top = img.clamped(x0, y0) * (1.0 - ax) + img.clamped(x0 + 1, y0) * ax;
    const double bot = img.clamped(x0, y0 + 1) * (1.0 - ax) + img.clamped(x0 + 1, y0 + 1) * ax;
    return top * (1.0 - ay) + bot * ay;
}

// =============================================================================
// PGM
// =============================================================================

inline std::string encode_pgm(const GrayImage& img) {
    std::string out = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    auto px = img.pixels();
    out.append(reinterpret_cast<const char*>(px.data()), px.size());
    return out;
}

inline GrayImage decode_pgm(std::string_view bytes) {
    std::size_t pos = 0;
    auto skip_space_and_comments = [&] {
        while (pos < bytes.size()) {
            const char c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_int = [&]() -> long {
        skip_space_and_comments();
        long v = 0;
        std::size_t digits = 0;
        while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
            v = v * 10 + (bytes[pos] - '0');
            if (v > 1'000'000'000L) throw DataError("pgm: header value too large");
            ++pos;
            ++digits;
        }
        if (digits == 0) throw DataError("pgm: malformed header");
        return v;
    };
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
        throw DataError("pgm: not a binary PGM (P5)");
    }
    pos = 2;
    const long w = read_int();
    const long h = read_int();
    const long maxval = read_int();
    if (w < 1 || h < 1) throw DataError("pgm: dimensions must be >= 1");
    if (maxval != 255) throw DataError("pgm: maxval " + std::to_string(maxval) + " unsupported, need 255");
    if (pos >= bytes.size() || !(bytes[pos] == ' ' || bytes[pos] == '\n' || bytes[pos] == '\r' || bytes[pos] == '\t')) {
        throw DataError("pgm: malformed header");
    }
    ++pos;
    const auto n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    if (bytes.size() - pos < n) throw DataError("pgm: truncated pixel data");
    std::vector<std::uint8_t> data(n);
    std::copy_n(reinterpret_cast<const std::uint8_t*>(bytes.data() + pos), n, data.begin());
    return GrayImage(static_cast<int>(w), static_cast<int>(h), std::move(data));
}

inline GrayImage load_pgm(const std::filesystem::path& path) {
    try {
        return decode_pgm(io::read_file(path));
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

inline void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
    io::write_file_atomic(path, encode_pgm(img));
}

// =============================================================================
// Gaussian blur
// =============================================================================

inline int gaussian_radius(double sigma) { return static_cast<int>(std::ceil(3.0 * sigma)); }

/// Taps 0..radius of the normalized symmetric kernel exp(-k^2 / 2 sigma^2).
inline std::vector<double> gaussian_kernel(double sigma) {
    if (!(sigma > 0.0)) {
        throw InvalidArgument("gaussian sigma must be > 0");
    }
    const int r = gaussian_radius(sigma);
    std::vector<double> k(static_cast<std::size_t>(r) + 1);
    double sum = 0.0;
    for (int i = 0; i <= r; ++i) {
        k[i] = std::exp(-double(i) * i / (2.0 * sigma * sigma));
        sum += (i == 0) ? k[i] : 2.0 * k[i];
    }
    for (auto& v : k) v /= sum;
    return k;
}

/// Separable blur in floating point with replicated borders.
inline FloatImage gaussian_blur(const FloatImage& img, double sigma) {
    const auto k = gaussian_kernel(sigma);
    const int r = static_cast<int>(k.size()) - 1;
    const int w = img.width();
    const int h = img.height();
    FloatImage tmp(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = k[0] * img(x, y);
            for (int i = 1; i <= r; ++i) {
                acc += k[i] * (img.clamped(x - i, y) + img.clamped(x + i, y));
            }
            tmp(x, y) = acc;
        }
    }
    FloatImage out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = k[0] * tmp(x, y);
            for (int i = 1; i <= r; ++i) {
                acc += k[i] * (tmp.clamped(x, y - i) + tmp.clamped(x, y + i));
            }
            out(x, y) = acc;
        }
    }
    return out;
}

inline GrayImage gaussian_blur(const GrayImage& img, double sigma) { return to_gray(gaussian_blur(to_float(img), sigma)); }

// =============================================================================
// Otsu
// =============================================================================

using Histogram = std::array<std::size_t, 256>;

inline Histogram histogram(const GrayImage& img) {
    Histogram h{};
    for (auto v : img.pixels()) ++h[v];
    return h;
}

/// Threshold t maximizing between-class variance; dark class is [0, t].
/// The first maximum wins on ties.
inline int otsu_threshold(const Histogram& h) {
    const double total = static_cast<double>(std::accumulate(h.begin(), h.end(), std::size_t{0}));
    if (std::count_if(h.begin(), h.end(), [](std::size_t c) { return c != 0; }) < 2) {
        throw InvalidArgument("otsu: image needs at least two distinct intensities");
    }
    double sum_all = 0.0;
    for (int i = 0; i < 256; ++i) sum_all += double(i) * double(h[i]);
    double w0 = 0.0;
    double sum0 = 0.0;
    double best = -1.0;
    int best_t = 0;
    for (int t = 0; t < 255; ++t) {
        w0 += double(h[t]);
        sum0 += double(t) * double(h[t]);
        const double w1 = total - w0;
        if (w0 == 0.0 || w1 == 0.0) continue;
        const double mu0 = sum0 / w0;
        const double mu1 = (sum_all - sum0) / w1;
        const double between = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if (between > best) {
            best = between;
            best_t = t;
        }
    }
    return best_t;
}

struct OtsuResult {
    BinaryMask mask;
    int threshold = 0;
};

/// Mask is 1 where pixel <= threshold.
inline OtsuResult binarize_otsu(const GrayImage& img) {
    const int t = otsu_threshold(histogram(img));
    BinaryMask mask(img.width(), img.height());
    auto src = img.pixels();
    auto dst = mask.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] <= t ? 1 : 0;
    return {std::move(mask), t};
}

/// Lower median of histogram bins [lo, hi]; -1 if the range is empty.
inline int histogram_median(const Histogram& h, int lo, int hi) {
    std::size_t n = 0;
    for (int i = lo; i <= hi; ++i) n += h[i];
    if (n == 0) return -1;
    const std::size_t target = (n - 1) / 2;
    std::size_t seen = 0;
    for (int i = lo; i <= hi; ++i) {
        seen += h[i];
        if (seen > target) return i;
    }
    return hi;
}

struct ClassLevels {
    int threshold = 0;
    int dark = 0;    ///< median intensity of the dark Otsu class
    int bright = 0;  ///< median intensity of the bright Otsu class
};

inline ClassLevels otsu_class_levels(const GrayImage& img) {
    const auto h = histogram(img);
    const int t = otsu_threshold(h);
    return {t, histogram_median(h, 0, t), histogram_median(h, t + 1, 255)};
}

// =============================================================================
// Connected components
// =============================================================================

namespace detail {

struct DisjointSet {
    std::vector<std::int32_t> parent;

    std::int32_t make() {
        parent.push_back(static_cast<std::int32_t>(parent.size()));
        return parent.back();
    }
    std::int32_t find(std::int32_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace detail

/// 8-connected labeling; labels follow first encounter in raster order.
inline LabelMap label_components(const BinaryMask& mask) {
    const int w = mask.width();
    const int h = mask.height();
    Raster<std::int32_t> provisional(w, h, -1);
    detail::DisjointSet sets;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask(x, y)) continue;
            std::int32_t label = -1;
            // Already-visited neighbors: W, NW, N, NE.
            const int nb[4][2] = {{-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
            for (const auto& d : nb) {
                const int nx = x + d[0];
                const int ny = y + d[1];
                if (!provisional.contains(nx, ny)) continue;
                const auto l = provisional(nx, ny);
                if (l < 0) continue;
                if (label < 0) {
                    label = l;
                } else {
                    sets.unite(label, l);
                }
            }
            provisional(x, y) = label < 0 ? sets.make() : label;
        }
    }

    LabelMap out{Raster<std::int32_t>(w, h, 0), {0}};
    std::vector<std::int32_t> final_label(sets.parent.size(), 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const auto p = provisional(x, y);
            if (p < 0) {
                ++out.component_sizes[0];
                continue;
            }
            const auto root = sets.find(p);
            if (final_label[root] == 0) {
                final_label[root] = static_cast<std::int32_t>(out.component_sizes.size());
                out.component_sizes.push_back(0);
            }
            out.labels(x, y) = final_label[root];
            ++out.component_sizes[final_label[root]];
        }
    }
    return out;
}

/// Label of the largest component (lowest label on ties), 0 if none.
inline int largest_component(const LabelMap& labels) {
    int best = 0;
    for (int l = 1; l <= labels.count(); ++l) {
        if (best == 0 || labels.component_sizes[l] > labels.component_sizes[best]) best = l;
    }
    return best;
}

// =============================================================================
// Dust removal
// =============================================================================

/// Keeps the largest dark component and paints every other dark component
/// with the median intensity of the bright pixels.
inline GrayImage remove_noise(const GrayImage& img) {
    const auto h = histogram(img);
    int t = 0;
    try {
        t = otsu_threshold(h);
    } catch (const InvalidArgument&) {
        throw DataError("remove_noise: no dark component");
    }
    BinaryMask mask(img.width(), img.height());
    for (std::size_t i = 0; i < img.size(); ++i) mask.pixels()[i] = img.pixels()[i] <= t ? 1 : 0;
    const auto labels = label_components(mask);
    const int keep = largest_component(labels);
    if (keep == 0) {
        throw DataError("remove_noise: no dark component");
    }
    const auto background = static_cast<std::uint8_t>(histogram_median(h, t + 1, 255));
    GrayImage out = img;
    auto lab = labels.labels.pixels();
    auto dst = out.pixels();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        if (lab[i] != 0 && lab[i] != keep) dst[i] = background;
    }
    return out;
}

}  // namespace gaugecal
