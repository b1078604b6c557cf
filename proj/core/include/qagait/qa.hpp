#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qagait/silcore.hpp"

namespace qagait::qa {

enum class MatchMethod {
    I1,  // sum of |1/m_a - 1/m_b| over defined log-signed Hu terms (default)
    I2,  // sum of |m_a - m_b|, exposed for calibration
};

struct QaConfig {
    double eps = 0.95;        // minimum largest-component share of foreground
    double tau = 0.001;       // maximum template-match distance
    int min_frames = 15;      // per-sequence retention floor
    int connectivity = 8;
    MatchMethod method = MatchMethod::I1;
};

struct TemplateEntry {
    int view_deg = 0;
    double height_m = 0.0;
    std::string gender;
    int frame_index = 0;
    silcore::HuVector hu;
};

/// Immutable after load; Hu vectors are precomputed so matching a frame is
/// seven subtractions per entry.
struct TemplateSet {
    std::vector<TemplateEntry> entries;
    std::string source;  // directory path or "fixture"
};

enum class FrameStatus {
    Kept,
    RemovedBackground,  // failed the max-connect-area ratio
    RemovedShape,       // failed template match
    KeptByRetention,    // removed by QA, re-admitted by the retention floor
};

struct FrameVerdict {
    FrameStatus status = FrameStatus::RemovedBackground;
    std::optional<silcore::Silhouette> cleaned;  // present iff kept
    double max_cc_ratio = 0.0;
    std::optional<double> template_dist;  // absent when removed before matching
};

struct SequenceAssessment {
    std::vector<FrameVerdict> verdicts;  // input order
    int kept_count = 0;
    int removed_cc_count = 0;
    int removed_shape_count = 0;
    bool retention_invoked = false;
};

/// Maximal-connect-area filter. ratio = largest component area / total
/// foreground (0 when empty). ratio >= eps keeps the frame with every
/// other component zeroed; otherwise the whole frame is removed.
FrameVerdict max_connect_filter(const silcore::Silhouette& sil, const QaConfig& cfg);

/// Hu-moment shape distance. Terms undefined in either operand are
/// skipped; throws std::domain_error("degenerate shape") when no term
/// is defined in both.
double shape_distance(const silcore::HuVector& a, const silcore::HuVector& b,
                      MatchMethod method = MatchMethod::I1);

/// Matches an already-cleaned single-component silhouette against the
/// template set: kept iff the best distance is <= tau.
FrameVerdict template_match(const silcore::Silhouette& sil, const TemplateSet& templates,
                            const QaConfig& cfg);

/// Full per-sequence assessment: max-connect filter, then template match
/// for survivors, then the retention floor. Removed frames are re-admitted
/// best-first (ascending template distance, then descending max-connect
/// ratio for frames that never reached matching) until
/// min(min_frames, frame count) frames are kept.
SequenceAssessment assess_sequence(const std::vector<silcore::Silhouette>& frames,
                                   const TemplateSet& templates, const QaConfig& cfg);

}  // namespace qagait::qa
