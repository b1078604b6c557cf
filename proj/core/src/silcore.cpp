#include "qagait/silcore.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qagait::silcore {

std::int64_t Silhouette::foreground_count() const {
    return std::accumulate(mask.begin(), mask.end(), std::int64_t{0},
                           [](std::int64_t acc, std::uint8_t v) { return acc + (v != 0 ? 1 : 0); });
}

Silhouette binarize(const GrayImage& image, int threshold) {
    if (image.height <= 0 || image.width <= 0) {
        throw std::invalid_argument("empty input image");
    }
    Silhouette sil(image.height, image.width);
    const std::size_t n = image.pixels.size();
    for (std::size_t i = 0; i < n; ++i) {
        sil.mask[i] = image.pixels[i] >= threshold ? 1 : 0;
    }
    return sil;
}

namespace {

// Union-find with path compression; roots are resolved to the smallest
// provisional label so relabeling stays deterministic.
class UnionFind {
public:
    int make() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return static_cast<int>(parent_.size()) - 1;
    }
    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

ComponentLabeling connected_components(const Silhouette& sil, int connectivity) {
    if (connectivity != 4 && connectivity != 8) {
        throw std::invalid_argument("connectivity must be 4 or 8");
    }
    const int h = sil.height;
    const int w = sil.width;

    ComponentLabeling out;
    out.labels.assign(static_cast<std::size_t>(h) * w, 0);

    // First pass: provisional labels from the already-visited neighbors
    // (left, top-left, top, top-right depending on connectivity).
    UnionFind uf;
    std::vector<int> provisional(static_cast<std::size_t>(h) * w, -1);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!sil.at(y, x)) continue;
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            int label = -1;
            auto consider = [&](int ny, int nx) {
                if (ny < 0 || nx < 0 || nx >= w) return;
                const int nl = provisional[static_cast<std::size_t>(ny) * w + nx];
                if (nl < 0) return;
                if (label < 0) {
                    label = nl;
                } else {
                    uf.unite(label, nl);
                    label = uf.find(label);
                }
            };
            consider(y, x - 1);
            consider(y - 1, x);
            if (connectivity == 8) {
                consider(y - 1, x - 1);
                consider(y - 1, x + 1);
            }
            if (label < 0) label = uf.make();
            provisional[idx] = uf.find(label);
        }
    }

    // Second pass: map roots to final ids in first-visit row-major order
    // and accumulate areas.
    std::vector<int> root_to_final;
    out.component_areas.assign(1, 0);
    for (std::size_t idx = 0; idx < provisional.size(); ++idx) {
        if (provisional[idx] < 0) continue;
        const int root = uf.find(provisional[idx]);
        if (root >= static_cast<int>(root_to_final.size())) {
            root_to_final.resize(static_cast<std::size_t>(root) + 1, 0);
        }
        if (root_to_final[static_cast<std::size_t>(root)] == 0) {
            out.component_areas.push_back(0);
            root_to_final[static_cast<std::size_t>(root)] = ++out.component_count;
        }
        const int id = root_to_final[static_cast<std::size_t>(root)];
        out.labels[idx] = id;
        ++out.component_areas[static_cast<std::size_t>(id)];
    }

    if (out.component_count > 0) {
        int best = 1;
        for (int id = 2; id <= out.component_count; ++id) {
            if (out.component_areas[static_cast<std::size_t>(id)] >
                out.component_areas[static_cast<std::size_t>(best)]) {
                best = id;
            }
        }
        out.max_component_id = best;
    }
    return out;
}

MomentSet moments(const Silhouette& sil) {
    MomentSet m;
    for (int y = 0; y < sil.height; ++y) {
        for (int x = 0; x < sil.width; ++x) {
            if (!sil.at(y, x)) continue;
            const double px = x + 0.5;
            const double py = y + 0.5;
            const double px2 = px * px;
            const double py2 = py * py;
            m.m00 += 1.0;
            m.m10 += px;
            m.m01 += py;
            m.m20 += px2;
            m.m11 += px * py;
            m.m02 += py2;
            m.m30 += px2 * px;
            m.m21 += px2 * py;
            m.m12 += px * py2;
            m.m03 += py2 * py;
        }
    }
    if (m.m00 <= 0.0) {
        throw std::domain_error("moments of empty silhouette");
    }

    const double cx = m.m10 / m.m00;
    const double cy = m.m01 / m.m00;
    for (int y = 0; y < sil.height; ++y) {
        for (int x = 0; x < sil.width; ++x) {
            if (!sil.at(y, x)) continue;
            const double dx = x + 0.5 - cx;
            const double dy = y + 0.5 - cy;
            const double dx2 = dx * dx;
            const double dy2 = dy * dy;
            m.mu20 += dx2;
            m.mu11 += dx * dy;
            m.mu02 += dy2;
            m.mu30 += dx2 * dx;
            m.mu21 += dx2 * dy;
            m.mu12 += dx * dy2;
            m.mu03 += dy2 * dy;
        }
    }

    const double s2 = m.m00 * m.m00;
    const double s3 = s2 * std::sqrt(m.m00);
    m.eta20 = m.mu20 / s2;
    m.eta11 = m.mu11 / s2;
    m.eta02 = m.mu02 / s2;
    m.eta30 = m.mu30 / s3;
    m.eta21 = m.mu21 / s3;
    m.eta12 = m.mu12 / s3;
    m.eta03 = m.mu03 / s3;
    return m;
}

HuVector hu_vector(const MomentSet& m) {
    const double e20 = m.eta20, e11 = m.eta11, e02 = m.eta02;
    const double e30 = m.eta30, e21 = m.eta21, e12 = m.eta12, e03 = m.eta03;

    const double a = e30 + e12;   // x-heavy third-order sum
    const double b = e21 + e03;   // y-heavy third-order sum
    const double c = e30 - 3 * e12;
    const double d = 3 * e21 - e03;

    HuVector hu;
    hu.h[0] = e20 + e02;
    hu.h[1] = (e20 - e02) * (e20 - e02) + 4 * e11 * e11;
    hu.h[2] = c * c + d * d;
    hu.h[3] = a * a + b * b;
    hu.h[4] = c * a * (a * a - 3 * b * b) + d * b * (3 * a * a - b * b);
    hu.h[5] = (e20 - e02) * (a * a - b * b) + 4 * e11 * a * b;
    hu.h[6] = d * a * (a * a - 3 * b * b) - c * b * (3 * a * a - b * b);

    for (int i = 0; i < 7; ++i) {
        const double v = hu.h[i];
        if (std::abs(v) <= kLogsigCutoff) {
            hu.defined[i] = false;
            hu.logsig[i] = 0.0;
        } else {
            hu.defined[i] = true;
            hu.logsig[i] = (v > 0 ? 1.0 : -1.0) * std::log10(std::abs(v));
        }
    }
    return hu;
}

HuVector hu_of(const Silhouette& sil) { return hu_vector(moments(sil)); }

namespace {

struct Bbox {
    int x0, y0, x1, y1;  // inclusive
};

std::optional<Bbox> foreground_bbox(const Silhouette& sil) {
    Bbox b{sil.width, sil.height, -1, -1};
    for (int y = 0; y < sil.height; ++y) {
        for (int x = 0; x < sil.width; ++x) {
            if (!sil.at(y, x)) continue;
            b.x0 = std::min(b.x0, x);
            b.y0 = std::min(b.y0, y);
            b.x1 = std::max(b.x1, x);
            b.y1 = std::max(b.y1, y);
        }
    }
    if (b.x1 < 0) return std::nullopt;
    return b;
}

}  // namespace

QuadrantAreas quadrant_areas(const Silhouette& sil) {
    const auto bbox = foreground_bbox(sil);
    if (!bbox) {
        throw std::domain_error("quadrant areas of empty silhouette");
    }
    // Midline split; the extra row/column of an odd span goes bottom/right.
    const int rows_top = (bbox->y1 - bbox->y0 + 1) / 2;
    const int cols_left = (bbox->x1 - bbox->x0 + 1) / 2;
    const int y_split = bbox->y0 + rows_top;   // first bottom row
    const int x_split = bbox->x0 + cols_left;  // first right column

    QuadrantAreas q;
    for (int y = bbox->y0; y <= bbox->y1; ++y) {
        for (int x = bbox->x0; x <= bbox->x1; ++x) {
            if (!sil.at(y, x)) continue;
            const bool top = y < y_split;
            const bool left = x < x_split;
            if (top && left) ++q.tl;
            else if (top) ++q.tr;
            else if (left) ++q.bl;
            else ++q.br;
        }
    }
    return q;
}

Point centroid(const Silhouette& sil) {
    double m00 = 0, m10 = 0, m01 = 0;
    for (int y = 0; y < sil.height; ++y) {
        for (int x = 0; x < sil.width; ++x) {
            if (!sil.at(y, x)) continue;
            m00 += 1.0;
            m10 += x + 0.5;
            m01 += y + 0.5;
        }
    }
    if (m00 <= 0.0) {
        throw std::domain_error("centroid of empty silhouette");
    }
    return {m10 / m00, m01 / m00};
}

}  // namespace qagait::silcore
