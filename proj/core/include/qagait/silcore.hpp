#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace qagait::silcore {

/// 8-bit grayscale image, row-major.
struct GrayImage {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int y, int x) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// Binary foreground mask, row-major, 1 = foreground. The atomic unit of
/// all silhouette processing.
struct Silhouette {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> mask;

    Silhouette() = default;
    Silhouette(int h, int w) : height(h), width(w), mask(static_cast<std::size_t>(h) * w, 0) {}

    bool at(int y, int x) const { return mask[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int y, int x, bool v) { mask[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    bool in_bounds(int y, int x) const { return y >= 0 && y < height && x >= 0 && x < width; }

    std::int64_t foreground_count() const;

    bool operator==(const Silhouette&) const = default;
};

/// Connected-component partition of a silhouette's foreground.
/// Labels are assigned in first-visit row-major order starting at 1;
/// background is 0.
struct ComponentLabeling {
    std::vector<int> labels;                 // row-major, same shape as the source mask
    std::vector<std::int64_t> component_areas; // index = label id; [0] is unused and holds 0
    std::optional<int> max_component_id;     // largest area, ties broken by smallest id
    int component_count = 0;

    std::int64_t area_of(int id) const { return component_areas[static_cast<std::size_t>(id)]; }
};

/// Raw, central, and normalized central moments up to order 3, computed
/// with the pixel-center (x+0.5, y+0.5) convention so values are
/// reproducible bit-for-bit across implementations.
struct MomentSet {
    double m00 = 0, m10 = 0, m01 = 0;
    double m20 = 0, m11 = 0, m02 = 0;
    double m30 = 0, m21 = 0, m12 = 0, m03 = 0;

    double mu20 = 0, mu11 = 0, mu02 = 0;
    double mu30 = 0, mu21 = 0, mu12 = 0, mu03 = 0;

    double eta20 = 0, eta11 = 0, eta02 = 0;
    double eta30 = 0, eta21 = 0, eta12 = 0, eta03 = 0;
};

/// The seven Hu invariants plus their log-signed form
/// m_i = sign(h_i) * log10(|h_i|). A term is undefined when
/// |h_i| <= 1e-12; undefined terms are skipped by shape distances.
struct HuVector {
    std::array<double, 7> h{};
    std::array<double, 7> logsig{};
    std::array<bool, 7> defined{};
};

struct QuadrantAreas {
    std::int64_t tl = 0, tr = 0, bl = 0, br = 0;
};

struct Point {
    double x = 0;
    double y = 0;
};

inline constexpr double kLogsigCutoff = 1e-12;

/// Thresholds a grayscale image: mask = (pixel >= threshold).
/// Throws std::invalid_argument on an empty (0x0) image.
Silhouette binarize(const GrayImage& image, int threshold);

/// Labels connected foreground components under 4- or 8-connectivity.
/// Deterministic: labels follow first-visit row-major order and the
/// largest-component tie break is the smallest id.
ComponentLabeling connected_components(const Silhouette& sil, int connectivity);

/// Geometric moments of the foreground, each pixel a unit mass at its
/// center. Throws std::domain_error when the foreground is empty.
MomentSet moments(const Silhouette& sil);

/// The seven Hu polynomial combinations of the normalized central moments.
HuVector hu_vector(const MomentSet& m);

/// Convenience: moments + hu_vector.
HuVector hu_of(const Silhouette& sil);

/// Splits the foreground bounding box at its vertical and horizontal
/// midlines (odd spans give the extra row/column to bottom/right) and
/// counts foreground per quadrant. Counts sum to foreground_count.
QuadrantAreas quadrant_areas(const Silhouette& sil);

/// Foreground centroid (M10/M00, M01/M00). Throws on empty foreground.
Point centroid(const Silhouette& sil);

}  // namespace qagait::silcore
