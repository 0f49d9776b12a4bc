#pragma once
// Report emission. JSON objects use sorted keys so output is byte-stable;
// text output is meant for reading.

#include <string>

#include "json.hpp"
#include "qalg/bounds.hpp"
#include "qalg/harness.hpp"

namespace qalg::report {

using Json = nlohmann::json;

enum class Format { Text, Json };

struct PdReport {
    std::string algebra;
    int cutoff = 0;
    torsion::SimpleClassification classification;
    /// Set when a specific module was asked for.
    std::optional<std::pair<std::string, torsion::PdResult>> module;
};

struct LltReport {
    std::string algebra;
    torsion::VertexSet v;
    torsion::LayerLengthTrace regular;
    std::vector<torsion::LayerLengthTrace> projectives;
};

struct BoundsReportView {
    const bounds::BoundReport* report = nullptr;
    std::optional<std::string> strategy;
    std::size_t evaluated = 0;
};

Json info_json(const quiver::Algebra& a);
std::string info_text(const quiver::Algebra& a);

Json pd_json(const torsion::PdResult& r);
Json pd_table_json(const torsion::SimpleClassification& c);
Json pd_report_json(const PdReport& r);
std::string pd_report_text(const PdReport& r);

Json llt_json(const LltReport& r);
std::string llt_text(const LltReport& r);

Json bounds_json(const BoundsReportView& r);
std::string bounds_text(const BoundsReportView& r);

Json certificate_json(const bounds::CertificateReport& r);
std::string certificate_text(const bounds::CertificateReport& r);

Json campaign_json(const harness::CampaignResult& r);
std::string campaign_text(const harness::CampaignResult& r);

/// 1-based vertex ids of the members of v.
Json vertex_set_json(const torsion::VertexSet& v);
std::string vertex_set_text(const torsion::VertexSet& v);

std::string emit(const Json& j);

}  // namespace qalg::report
