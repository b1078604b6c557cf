#include "qagait/qa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qagait::qa {

FrameVerdict max_connect_filter(const silcore::Silhouette& sil, const QaConfig& cfg) {
    FrameVerdict v;
    const auto labeling = silcore::connected_components(sil, cfg.connectivity);
    const std::int64_t total =
        std::accumulate(labeling.component_areas.begin(), labeling.component_areas.end(), std::int64_t{0});
    if (!labeling.max_component_id || total == 0) {
        v.status = FrameStatus::RemovedBackground;
        v.max_cc_ratio = 0.0;
        return v;
    }

    const int keep_id = *labeling.max_component_id;
    v.max_cc_ratio = static_cast<double>(labeling.area_of(keep_id)) / static_cast<double>(total);
    if (v.max_cc_ratio < cfg.eps) {
        v.status = FrameStatus::RemovedBackground;
        return v;
    }

    silcore::Silhouette cleaned(sil.height, sil.width);
    for (std::size_t i = 0; i < labeling.labels.size(); ++i) {
        cleaned.mask[i] = labeling.labels[i] == keep_id ? 1 : 0;
    }
    v.status = FrameStatus::Kept;
    v.cleaned = std::move(cleaned);
    return v;
}

double shape_distance(const silcore::HuVector& a, const silcore::HuVector& b, MatchMethod method) {
    double dist = 0.0;
    int used = 0;
    for (int i = 0; i < 7; ++i) {
        if (!a.defined[i] || !b.defined[i]) continue;
        ++used;
        if (method == MatchMethod::I1) {
            dist += std::abs(1.0 / a.logsig[i] - 1.0 / b.logsig[i]);
        } else {
            dist += std::abs(a.logsig[i] - b.logsig[i]);
        }
    }
    if (used == 0) {
        throw std::domain_error("degenerate shape");
    }
    return dist;
}

FrameVerdict template_match(const silcore::Silhouette& sil, const TemplateSet& templates,
                            const QaConfig& cfg) {
    if (templates.entries.empty()) {
        throw std::invalid_argument("no templates");
    }
    const auto hu = silcore::hu_of(sil);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& entry : templates.entries) {
        best = std::min(best, shape_distance(hu, entry.hu, cfg.method));
    }

    FrameVerdict v;
    v.template_dist = best;
    if (best <= cfg.tau) {
        v.status = FrameStatus::Kept;
        v.cleaned = sil;
    } else {
        v.status = FrameStatus::RemovedShape;
    }
    return v;
}

SequenceAssessment assess_sequence(const std::vector<silcore::Silhouette>& frames,
                                   const TemplateSet& templates, const QaConfig& cfg) {
    if (frames.empty()) {
        throw std::invalid_argument("empty frame list");
    }

    SequenceAssessment out;
    out.verdicts.reserve(frames.size());

    // Largest-component cleanings of removed frames, kept around so the
    // retention pass can re-admit them in cleaned form.
    std::vector<std::optional<silcore::Silhouette>> removed_cleaned(frames.size());

    for (std::size_t i = 0; i < frames.size(); ++i) {
        FrameVerdict cc = max_connect_filter(frames[i], cfg);
        if (cc.status != FrameStatus::Kept) {
            // Retention fallback: the largest component if any, else the
            // empty mask itself.
            QaConfig relaxed = cfg;
            relaxed.eps = 0.0;
            FrameVerdict any = max_connect_filter(frames[i], relaxed);
            removed_cleaned[i] = any.cleaned ? std::move(*any.cleaned)
                                             : silcore::Silhouette(frames[i].height, frames[i].width);
            out.verdicts.push_back(std::move(cc));
            ++out.removed_cc_count;
            continue;
        }

        FrameVerdict tm = template_match(*cc.cleaned, templates, cfg);
        FrameVerdict merged;
        merged.max_cc_ratio = cc.max_cc_ratio;
        merged.template_dist = tm.template_dist;
        if (tm.status == FrameStatus::Kept) {
            merged.status = FrameStatus::Kept;
            merged.cleaned = std::move(cc.cleaned);
            ++out.kept_count;
        } else {
            merged.status = FrameStatus::RemovedShape;
            removed_cleaned[i] = std::move(*cc.cleaned);
            ++out.removed_shape_count;
        }
        out.verdicts.push_back(std::move(merged));
    }

    const int target = std::min<int>(cfg.min_frames, static_cast<int>(frames.size()));
    if (out.kept_count >= target) {
        return out;
    }
    out.retention_invoked = true;

    // Re-admission order: best template distance first, then frames that
    // never reached matching by descending max-connect ratio. Stable on
    // ties so input order decides.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < out.verdicts.size(); ++i) {
        const auto s = out.verdicts[i].status;
        if (s == FrameStatus::RemovedShape || s == FrameStatus::RemovedBackground) {
            candidates.push_back(i);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
        const auto& va = out.verdicts[a];
        const auto& vb = out.verdicts[b];
        const bool a_matched = va.template_dist.has_value();
        const bool b_matched = vb.template_dist.has_value();
        if (a_matched != b_matched) return a_matched;
        if (a_matched) return *va.template_dist < *vb.template_dist;
        return va.max_cc_ratio > vb.max_cc_ratio;
    });

    for (std::size_t idx : candidates) {
        if (out.kept_count >= target) break;
        auto& v = out.verdicts[idx];
        if (v.status == FrameStatus::RemovedBackground) --out.removed_cc_count;
        else --out.removed_shape_count;
        v.status = FrameStatus::KeptByRetention;
        v.cleaned = std::move(removed_cleaned[idx]);
        ++out.kept_count;
    }
    return out;
}

}  // namespace qagait::qa
