#include "qalg/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qalg/bounds.hpp"
#include "qalg/dsl.hpp"
#include "qalg/harness.hpp"
#include "qalg/report.hpp"

namespace qalg::cli {

using quiver::AlgebraPtr;
using quiver::VertexId;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int parse_vertex(const std::string& s, int n)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw UsageError("bad vertex '" + s + "'");
    }
    if (used != s.size())
        throw UsageError("bad vertex '" + s + "'");
    if (v < 1 || v > n)
        throw UsageError("vertex " + s + " out of range 1.." + std::to_string(n));
    return v - 1;
}

}  // namespace

std::vector<VertexId> parse_vertex_selector(const std::string& text, int num_vertices)
{
    std::vector<VertexId> out;
    if (text == "all") {
        for (VertexId v = 0; v < num_vertices; ++v)
            out.push_back(v);
        return out;
    }
    if (text == "none" || text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_vertex(item, num_vertices));
            continue;
        }
        int lo = parse_vertex(item.substr(0, dots), num_vertices);
        int hi = parse_vertex(item.substr(dots + 2), num_vertices);
        if (lo > hi)
            throw UsageError("empty range '" + item + "'");
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct Common {
    std::string file;
    std::string format = "text";
    std::optional<std::uint32_t> modulus;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgebraPtr load(const Common& c)
{
    return dsl::load_algebra(read_file(c.file), c.modulus);
}

void print(std::ostream& out, const Common& c, const report::Json& j, const std::string& text)
{
    if (c.format == "json")
        out << report::emit(j);
    else
        out << text;
}

bool ci_mode()
{
    const char* env = std::getenv("QALG_CI");
    return env && std::string(env) == "1";
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, const std::string& cmd)
{
    if (seed)
        return *seed;
    if (ci_mode())
        throw UsageError(cmd + ": --seed is required when QALG_CI=1");
    return std::random_device{}();
}

void add_common(CLI::App* sub, Common& c, bool file_required = true)
{
    auto* opt = sub->add_option("file", c.file, "presentation (.qalg)");
    if (file_required)
        opt->required();
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--modulus", c.modulus, "override the field modulus");
}

torsion::VertexSet selector_to_set(const AlgebraPtr& a, const std::string& sel)
{
    return torsion::make_vertex_set(a->num_vertices(), parse_vertex_selector(sel, a->num_vertices()));
}

bounds::SearchResult search(const AlgebraPtr& a, const torsion::SimpleClassification& c,
                            const std::string& strategy, std::size_t cap, std::string& used)
{
    const std::size_t finite = torsion::members(c.finite).size();
    bool exhaustive = strategy == "exhaustive" || (strategy == "auto" && finite <= cap);
    used = exhaustive ? "exhaustive" : "greedy";
    return bounds::best_v_search(a, c, exhaustive ? bounds::Strategy::Exhaustive : bounds::Strategy::Greedy,
                                 cap);
}

int cutoff_for(const AlgebraPtr& a, int requested)
{
    if (requested < 0)
        throw UsageError("--cutoff must be positive");
    return requested > 0 ? requested : torsion::default_cutoff(*a);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"qalg: bound quiver algebras over GF(p)", "qalg"};
    app.require_subcommand(1);
    Common common;

    auto* info = app.add_subcommand("info", "dimension, Loewy length, projectives");
    add_common(info, common);

    int cutoff = 0;
    std::string module_spec;
    auto* pd = app.add_subcommand("pd", "projective dimensions of the simples");
    add_common(pd, common);
    pd->add_option("--cutoff", cutoff, "syzygy steps before giving up (default 4 dim A)");
    pd->add_option("--module", module_spec, "also report pd of this module, e.g. P(1)+S(2)");

    std::string vsel = "none";
    auto* llt = app.add_subcommand("llt", "radical layer length trace");
    add_common(llt, common);
    llt->add_option("--V", vsel, "simples in V: 3..9, 3,4,7, all, none, auto");
    llt->add_option("--cutoff", cutoff, "pd cutoff for --V auto");

    bool do_search = false;
    std::string strategy = "auto";
    std::size_t cap = bounds::kDefaultSearchCap;
    auto* bnd = app.add_subcommand("bounds", "upper bounds for dim D^b(mod A)");
    add_common(bnd, common);
    bnd->add_option("--V", vsel, "simples in V: 3..9, 3,4,7, all, none, auto");
    bnd->add_flag("--search", do_search, "search for the best V (same as --V auto)");
    bnd->add_option("--strategy", strategy, "exhaustive, greedy or auto")
        ->check(CLI::IsMember({"exhaustive", "greedy", "auto"}));
    bnd->add_option("--cap", cap, "largest |S^<inf| searched exhaustively");
    bnd->add_option("--cutoff", cutoff, "syzygy steps before giving up (default 4 dim A)");

    std::optional<std::uint64_t> seed;
    std::size_t samples = 25;
    auto* syz = app.add_subcommand("syzcheck", "syzygy-finiteness certificate");
    add_common(syz, common);
    syz->add_option("--V", vsel, "simples in V: 3..9, 3,4,7, all, none, auto");
    syz->add_option("--samples", samples, "random modules beyond the fixed smoke set");
    syz->add_option("--seed", seed, "seed for the random modules");
    syz->add_option("--cutoff", cutoff, "syzygy steps before giving up (default 4 dim A)");

    harness::CampaignOptions campaign;
    std::vector<std::string> check_list;
    std::string out_dir = "failures";
    bool no_shrink = false;
    auto* fuzz = app.add_subcommand("fuzz", "seeded property campaign");
    add_common(fuzz, common, false);
    fuzz->add_option("--seed", seed, "campaign seed");
    fuzz->add_option("--algebras", campaign.algebras, "number of algebras");
    fuzz->add_option("--count", campaign.count, "draws per check and algebra");
    fuzz->add_option("--check", check_list, "run only these checks (repeatable)");
    fuzz->add_option("--out", out_dir, "directory for failing cases");
    fuzz->add_option("--vertices", campaign.params.max_vertices, "max vertices");
    fuzz->add_option("--arrows", campaign.params.max_arrows, "max arrows");
    fuzz->add_option("--length", campaign.params.forced_length, "all paths of this length are zero");
    fuzz->add_option("--budget", campaign.params.module_budget, "module dimension budget");
    fuzz->add_option("--cutoff", campaign.cutoff, "pd cutoff (default min(4 dim A, 32))");
    fuzz->add_flag("--no-shrink", no_shrink, "keep failing algebras unminimized");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "qalg: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*info) {
            auto a = load(common);
            print(out, common, report::info_json(*a), report::info_text(*a));
            return kOk;
        }
        if (*pd) {
            auto a = load(common);
            report::PdReport r;
            r.algebra = a->name();
            r.cutoff = cutoff_for(a, cutoff);
            r.classification = torsion::classify_simples(a, r.cutoff);
            if (!module_spec.empty()) {
                auto spec = dsl::parse_module_spec(module_spec, *a);
                r.module = {dsl::to_string(spec),
                            torsion::pd(harness::resolve_module(a, spec), r.cutoff)};
            }
            print(out, common, report::pd_report_json(r), report::pd_report_text(r));
            bool undetermined = !r.classification.determined() || (r.module && r.module->second.undetermined());
            return undetermined ? kUndetermined : kOk;
        }

        auto choose_v = [&](const AlgebraPtr& a, const torsion::SimpleClassification& c,
                            std::string& used, std::size_t& evaluated) {
            if (vsel == "auto" || do_search) {
                auto s = search(a, c, strategy, cap, used);
                evaluated = s.evaluated;
                return s.report.v;
            }
            return selector_to_set(a, vsel);
        };

        if (*llt) {
            auto a = load(common);
            report::LltReport r;
            r.algebra = a->name();
            if (vsel == "auto") {
                std::string used;
                std::size_t evaluated = 0;
                auto c = torsion::classify_simples(a, cutoff_for(a, cutoff));
                r.v = choose_v(a, c, used, evaluated);
            } else {
                r.v = selector_to_set(a, vsel);
            }
            r.regular = torsion::layer_length(repr::regular(a), r.v);
            for (VertexId i = 0; i < a->num_vertices(); ++i)
                r.projectives.push_back(torsion::layer_length(repr::projective(a, i), r.v));
            print(out, common, report::llt_json(r), report::llt_text(r));
            return kOk;
        }
        if (*bnd) {
            auto a = load(common);
            // Parse V before the expensive classification so usage errors are cheap.
            if (vsel != "auto" && !do_search)
                selector_to_set(a, vsel);
            const int co = cutoff_for(a, cutoff);
            auto c = torsion::classify_simples(a, co);
            report::BoundsReportView view;
            bounds::BoundReport br;
            if (vsel == "auto" || do_search) {
                std::string used;
                auto s = search(a, c, strategy, cap, used);
                br = std::move(s.report);
                view.strategy = used;
                view.evaluated = s.evaluated;
            } else {
                auto v = selector_to_set(a, vsel);
                for (VertexId i : torsion::members(v))
                    if (c.pd[static_cast<std::size_t>(i)].undetermined())
                        throw bounds::UndeterminedPd({i}, co);
                br = bounds::derived_dim_bounds(a, v, c);
            }
            view.report = &br;
            print(out, common, report::bounds_json(view), report::bounds_text(view));
            return kOk;
        }
        if (*syz) {
            auto a = load(common);
            if (vsel != "auto")
                selector_to_set(a, vsel);
            const std::uint64_t s = resolve_seed(seed, "syzcheck");
            const int co = cutoff_for(a, cutoff);
            auto c = torsion::classify_simples(a, co);
            std::string used;
            std::size_t evaluated = 0;
            auto v = choose_v(a, c, used, evaluated);
            for (VertexId i : torsion::members(v))
                if (c.pd[static_cast<std::size_t>(i)].undetermined())
                    throw bounds::UndeterminedPd({i}, co);
            auto r = bounds::syzygy_finiteness_certificate(a, v, samples, s, c);
            print(out, common, report::certificate_json(r), report::certificate_text(r));
            return r.pass() ? kOk : kCheckFailed;
        }
        if (*fuzz) {
            campaign.params.seed = resolve_seed(seed, "fuzz");
            campaign.checks = check_list;
            campaign.shrink = !no_shrink;
            if (common.modulus)
                campaign.params.modulus = *common.modulus;
            if (!common.file.empty()) {
                campaign.fixed = dsl::build_presentation(dsl::parse_presentation(read_file(common.file)),
                                                         common.modulus);
                dsl::compile_presentation(*campaign.fixed);
            }
            auto r = harness::run_campaign(campaign);
            if (!r.failures.empty())
                harness::write_failures(r, out_dir);
            print(out, common, report::campaign_json(r), report::campaign_text(r));
            return r.pass() ? kOk : kCheckFailed;
        }
    } catch (const dsl::ParseError& e) {
        err << common.file << ":" << e.what() << "\n";
        return kUsage;
    } catch (const quiver::CompileError& e) {
        err << common.file << ": " << e.what() << "\n";
        return kUsage;
    } catch (const dsl::ModuleSpecError& e) {
        err << "qalg: module spec: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "qalg: " << e.what() << "\n";
        return kUsage;
    } catch (const bounds::VNotInFiniteProjDim& e) {
        err << "qalg: " << e.what() << "\n";
        return kUsage;
    } catch (const bounds::SearchSpaceTooLarge& e) {
        err << "qalg: " << e.what() << " (use --strategy greedy)\n";
        return kUsage;
    } catch (const bounds::UndeterminedPd& e) {
        err << "qalg: " << e.what() << "\n";
        return kUndetermined;
    } catch (const bounds::HypothesisFailed& e) {
        err << "qalg: " << e.what() << "\n";
        return kUndetermined;
    } catch (const std::invalid_argument& e) {
        err << "qalg: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"qalg"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qalg::cli
