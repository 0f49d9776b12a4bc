#include "qalg/report.hpp"

#include <sstream>

namespace qalg::report {

using quiver::VertexId;
using torsion::PdResult;

namespace {

std::string kind_name(const PdResult& r)
{
    switch (r.kind) {
    case PdResult::Kind::Finite:
        return "finite";
    case PdResult::Kind::Infinite:
        return "infinite";
    case PdResult::Kind::Undetermined:
        break;
    }
    return "undetermined";
}

std::string pd_text(const PdResult& r)
{
    switch (r.kind) {
    case PdResult::Kind::Finite:
        return std::to_string(r.value);
    case PdResult::Kind::Infinite:
        return std::string("inf (Omega^") + std::to_string(r.cycle_a) +
               (r.periodic ? " = Omega^" : " in add Omega^") + std::to_string(r.cycle_b) +
               (r.reason == "stable" ? " up to projectives)" : ")");
    case PdResult::Kind::Undetermined:
        break;
    }
    return "undetermined (" + r.reason + ")";
}

std::string dims_text(const std::vector<std::size_t>& d)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

std::size_t total(const std::vector<std::size_t>& d)
{
    std::size_t t = 0;
    for (auto x : d)
        t += x;
    return t;
}

Json trace_json(const torsion::LayerLengthTrace& t)
{
    return Json{{"value", t.value}, {"chain", t.chain}};
}

std::string trace_text(const torsion::LayerLengthTrace& t)
{
    std::ostringstream os;
    os << t.value << "  chain dims [";
    for (std::size_t i = 0; i < t.chain.size(); ++i)
        os << (i ? ", " : "") << total(t.chain[i]);
    os << "]";
    return os.str();
}

}  // namespace

std::string emit(const Json& j)
{
    return j.dump(2) + "\n";
}

Json vertex_set_json(const torsion::VertexSet& v)
{
    Json out = Json::array();
    for (VertexId i : torsion::members(v))
        out.push_back(i + 1);
    return out;
}

std::string vertex_set_text(const torsion::VertexSet& v)
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (VertexId i : torsion::members(v)) {
        os << (first ? "" : ",") << i + 1;
        first = false;
    }
    os << "}";
    return os.str();
}

// ---- info -------------------------------------------------------------------

namespace {

std::vector<std::size_t> projective_dims(const quiver::Algebra& a)
{
    std::vector<std::size_t> out;
    for (VertexId i = 0; i < a.num_vertices(); ++i)
        out.push_back(a.paths_from(i).size());
    return out;
}

}  // namespace

Json info_json(const quiver::Algebra& a)
{
    return Json{{"algebra", a.name()},
                {"dim", a.dim()},
                {"field", a.field().modulus()},
                {"loewy_length", quiver::loewy_length_of_algebra(a)},
                {"monomial", a.monomial()},
                {"nilpotency_index", a.nilpotency_index()},
                {"num_arrows", a.quiver().num_arrows()},
                {"num_relations", a.relations().size()},
                {"num_vertices", a.num_vertices()},
                {"projective_dims", projective_dims(a)}};
}

std::string info_text(const quiver::Algebra& a)
{
    std::ostringstream os;
    os << "algebra " << a.name() << " over GF(" << a.field().modulus() << ")\n";
    os << "vertices = " << a.num_vertices() << ", arrows = " << a.quiver().num_arrows()
       << ", relations = " << a.relations().size() << (a.monomial() ? " (monomial)" : "") << "\n";
    os << "dim A = " << a.dim() << "\n";
    os << "LL = " << quiver::loewy_length_of_algebra(a) << "\n";
    os << "nilpotency index = " << a.nilpotency_index() << "\n";
    auto pd = projective_dims(a);
    for (std::size_t i = 0; i < pd.size(); ++i)
        os << "dim P(" << i + 1 << ") = " << pd[i] << "\n";
    return os.str();
}

// ---- pd ---------------------------------------------------------------------

Json pd_json(const PdResult& r)
{
    Json j{{"kind", kind_name(r)}, {"pd", nullptr}};
    if (r.finite())
        j["pd"] = r.value;
    if (r.infinite()) {
        j["witness"] = {r.cycle_a, r.cycle_b};
        j["periodic"] = r.periodic;
        j["up_to_projectives"] = r.reason == "stable";
    }
    if (r.undetermined())
        j["reason"] = r.reason;
    return j;
}

Json pd_table_json(const torsion::SimpleClassification& c)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < c.pd.size(); ++i) {
        Json row = pd_json(c.pd[i]);
        row["vertex"] = i + 1;
        rows.push_back(row);
    }
    return rows;
}

Json pd_report_json(const PdReport& r)
{
    const auto& c = r.classification;
    Json undetermined = Json::array();
    for (std::size_t i = 0; i < c.pd.size(); ++i)
        if (c.pd[i].undetermined())
            undetermined.push_back(i + 1);
    Json j{{"algebra", r.algebra},
           {"cutoff", r.cutoff},
           {"gldim", pd_json(c.gldim)},
           {"pd_table", pd_table_json(c)},
           {"s_finite", vertex_set_json(c.finite)},
           {"s_infinite", vertex_set_json(c.infinite)},
           {"undetermined", undetermined}};
    if (r.module) {
        Json m = pd_json(r.module->second);
        m["spec"] = r.module->first;
        j["module"] = m;
    }
    return j;
}

std::string pd_report_text(const PdReport& r)
{
    const auto& c = r.classification;
    std::ostringstream os;
    os << "algebra " << r.algebra << " (cutoff " << r.cutoff << ")\n";
    for (std::size_t i = 0; i < c.pd.size(); ++i)
        os << "pd S(" << i + 1 << ") = " << pd_text(c.pd[i]) << "\n";
    os << "S^inf = " << vertex_set_text(c.infinite) << "\n";
    os << "S^<inf = " << vertex_set_text(c.finite) << "\n";
    os << "gldim = " << pd_text(c.gldim) << "\n";
    if (r.module)
        os << "pd " << r.module->first << " = " << pd_text(r.module->second) << "\n";
    return os.str();
}

// ---- llt --------------------------------------------------------------------

Json llt_json(const LltReport& r)
{
    Json proj = Json::array();
    for (std::size_t i = 0; i < r.projectives.size(); ++i) {
        Json p = trace_json(r.projectives[i]);
        p["vertex"] = i + 1;
        proj.push_back(p);
    }
    return Json{{"algebra", r.algebra},
                {"projectives", proj},
                {"regular", trace_json(r.regular)},
                {"v_set", vertex_set_json(r.v)}};
}

std::string llt_text(const LltReport& r)
{
    std::ostringstream os;
    os << "algebra " << r.algebra << "\n";
    os << "V = " << vertex_set_text(r.v) << "\n";
    os << "ll^{t_V}(A) = " << trace_text(r.regular) << "\n";
    for (std::size_t i = 0; i < r.projectives.size(); ++i)
        os << "ll^{t_V}(P(" << i + 1 << ")) = " << trace_text(r.projectives[i]) << "\n";
    return os.str();
}

// ---- bounds -----------------------------------------------------------------

Json bounds_json(const BoundsReportView& view)
{
    const auto& r = *view.report;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json j{{"key", e.key}, {"formula", e.formula}, {"applicable", e.value.has_value()},
               {"value", nullptr}};
        if (e.value)
            j["value"] = *e.value;
        if (!e.note.empty())
            j["note"] = e.note;
        entries.push_back(j);
    }
    Json flags{{"big_findim_finite", r.flags.big_findim_finite},
               {"psi_dim_finite", r.flags.psi_dim_finite},
               {"syzygy_finite_k", nullptr}};
    if (r.flags.syzygy_finite_k)
        flags["syzygy_finite_k"] = *r.flags.syzygy_finite_k;
    Json b{{"entries", entries},
           {"gldim", pd_json(r.classification.gldim)},
           {"implications", flags},
           {"loewy_length", r.loewy_length},
           {"pd_v", r.pd_v.value}};
    if (view.strategy)
        b["search"] = Json{{"strategy", *view.strategy}, {"evaluated", view.evaluated}};
    return Json{{"algebra", r.algebra},
                {"best_bound", r.best},
                {"bounds", b},
                {"ll_tv", r.ll_tv.value},
                {"pd_table", pd_table_json(r.classification)},
                {"v_set", vertex_set_json(r.v)}};
}

std::string bounds_text(const BoundsReportView& view)
{
    const auto& r = *view.report;
    std::ostringstream os;
    os << "algebra " << r.algebra << "\n";
    if (view.strategy)
        os << "V chosen by " << *view.strategy << " search over " << view.evaluated << " subsets\n";
    os << "V = " << vertex_set_text(r.v) << "\n";
    os << "pd V = " << r.pd_v.value << "\n";
    os << "ll^{t_V}(A) = " << r.ll_tv.value << "\n";
    os << "bounds on dim D^b(mod A):\n";
    for (const auto& e : r.entries) {
        os << "  " << e.formula << " = ";
        if (e.value)
            os << *e.value;
        else
            os << "inapplicable (" << e.note << ")";
        os << "\n";
    }
    os << "best = " << r.best << "\n";
    if (r.flags.syzygy_finite_k)
        os << "mod A is " << *r.flags.syzygy_finite_k
           << "-syzygy-finite; left big finitistic dimension finite; Psi-dimension finite\n";
    return os.str();
}

// ---- certificate ------------------------------------------------------------

Json certificate_json(const bounds::CertificateReport& r)
{
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json j{{"label", c.label}, {"dims", c.dims}, {"syzygy_dims", c.syzygy_dims}, {"pass", c.pass}};
        if (c.pass_one_step_earlier)
            j["pass_one_step_earlier"] = *c.pass_one_step_earlier;
        cases.push_back(j);
    }
    return Json{{"algebra", r.algebra},
                {"cases", cases},
                {"delta", r.delta},
                {"failures", r.failures()},
                {"generator_dims", r.generator_dims},
                {"k", r.k},
                {"ll_tv", r.ll_tv},
                {"pass", r.pass()},
                {"seed", r.seed},
                {"v_set", vertex_set_json(r.v)}};
}

std::string certificate_text(const bounds::CertificateReport& r)
{
    std::ostringstream os;
    os << "algebra " << r.algebra << "\n";
    os << "V = " << vertex_set_text(r.v) << ", pd V = " << r.delta << ", ll^{t_V}(A) = " << r.ll_tv << "\n";
    os << "k = pd V + 2 = " << r.k << ", generator Omega^" << r.k << "(A/rad A) + A has dims "
       << dims_text(r.generator_dims) << "\n";
    for (const auto& c : r.cases) {
        os << (c.pass ? "  ok   " : "  FAIL ") << c.label << "  dims " << dims_text(c.dims) << " -> "
           << dims_text(c.syzygy_dims);
        if (c.pass_one_step_earlier)
            os << "  (in add Omega^" << r.k - 1 << ": " << (*c.pass_one_step_earlier ? "yes" : "no") << ")";
        os << "\n";
    }
    os << (r.pass() ? "PASS" : "FAIL") << ": " << r.cases.size() - r.failures() << "/" << r.cases.size()
       << " modules have Omega^" << r.k << " in add(Omega^" << r.k << "(A/rad A) + A)\n";
    return os.str();
}

// ---- campaign ---------------------------------------------------------------

Json campaign_json(const harness::CampaignResult& r)
{
    Json checks = Json::object();
    for (const auto& [name, t] : r.tally)
        checks[name] = Json{{"failed", t.failed}, {"passed", t.passed}, {"skipped", t.skipped}};
    Json fails = Json::array();
    for (const auto& f : r.failures)
        fails.push_back(Json{{"algebra_seed", f.algebra_seed},
                             {"check", f.check},
                             {"command", f.command},
                             {"detail", f.detail},
                             {"draw_seed", f.draw_seed}});
    return Json{{"algebras", r.algebras},
                {"checks", checks},
                {"draws_per_check", r.draws_per_check},
                {"failures", fails},
                {"pass", r.pass()},
                {"seed", r.seed}};
}

std::string campaign_text(const harness::CampaignResult& r)
{
    std::ostringstream os;
    os << "campaign seed " << r.seed << ": " << r.algebras << " algebras x " << r.draws_per_check
       << " draws per check\n";
    for (const auto& [name, t] : r.tally)
        os << "  " << name << ": " << t.passed << " passed, " << t.failed << " failed, " << t.skipped
           << " skipped\n";
    for (const auto& f : r.failures)
        os << "FAIL " << f.check << " (draw seed " << f.draw_seed << "): " << f.detail << "\n  rerun: "
           << f.command << "\n";
    os << (r.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace qalg::report
