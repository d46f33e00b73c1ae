#ifndef FJRW_REPORT_HPP
#define FJRW_REPORT_HPP

#include "fjrw/corpus.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace fjrw {

enum class ReportFormat { Markdown, Json };

struct ReportedCorrelator {
    std::array<std::string, 3> labels;
    std::string value; // exact rational, "±√(r)", or "unknown:name"
    std::string axiom; // pairing|concavity|index_zero|composition|none
    std::array<int, 3> triple;
};

// all degree-admissible correlators, grouped pairing, concavity, index zero,
// composition, remaining; triple order within each group
std::vector<ReportedCorrelator> collect_correlators(const PipelineResult& P);

nlohmann::json correlator_json(const ReportedCorrelator& c);
nlohmann::json verdict_json(const std::string& name, const MirrorVerdict& v);
nlohmann::json report_json(const std::string& name, const PipelineResult& P,
                           const MirrorVerdict* verdict);

std::string render_markdown(const std::string& name, const PipelineResult& P,
                            const MirrorVerdict* verdict);
std::string render_report(const std::string& name, const PipelineResult& P,
                          const MirrorVerdict* verdict, ReportFormat fmt);

} // namespace fjrw

#endif
