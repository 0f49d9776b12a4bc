// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails. The CLI is exercised through the installed binary.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "oracles/path_enumerator.hpp"
#include "qalg/dsl.hpp"
#include "qalg/harness.hpp"
#include "test_util.hpp"

namespace {

using nlohmann::json;
using namespace qalg;
namespace fs = std::filesystem;

// Pinned limits.
constexpr double kPdSeconds = 5.0;
constexpr double kSyzcheckSeconds = 30.0;
constexpr std::size_t kSyzcheckSamples = 25;
constexpr std::uint64_t kSyzcheckSeed = 2024;
constexpr std::uint64_t kCampaignSeed = 42;
constexpr std::size_t kCampaignAlgebras = 50;
constexpr std::size_t kCampaignDraws = 20;
constexpr std::size_t kMinSesDraws = 1000;
constexpr std::size_t kMinLemmaDraws = 500;

struct Proc {
    int code = -1;
    std::string out;
    std::string err;
    double seconds = 0;
};

std::string quote(const std::string& s)
{
    std::string q = "'";
    for (char c : s)
        q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Proc run_qalg(const std::vector<std::string>& args)
{
    static int counter = 0;
    const fs::path errfile = fs::temp_directory_path() / ("qalg_accept_err_" + std::to_string(counter++));
    std::string cmd = quote(QALG_BINARY);
    for (const auto& a : args)
        cmd += " " + quote(a);
    cmd += " 2>" + quote(errfile.string());
    Proc p;
    auto t0 = std::chrono::steady_clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return p;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        p.out.append(buf.data(), n);
    int status = pclose(pipe);
    p.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    p.err = testutil::slurp(errfile.string());
    fs::remove(errfile);
    return p;
}

std::string ex(const std::string& name)
{
    return testutil::source_path("algebras/" + name + ".qalg");
}

struct Verdict {
    bool pass = true;
    std::string note;
    void require(bool cond, const std::string& what)
    {
        if (!cond && pass) {
            pass = false;
            note = what;
        }
    }
};

json pd_json(const std::string& name, Proc& p)
{
    p = run_qalg({"pd", ex(name), "--format", "json"});
    return p.code == 0 ? json::parse(p.out) : json();
}

std::optional<int> entry(const json& bounds, const std::string& key)
{
    for (const auto& e : bounds["bounds"]["entries"])
        if (e["key"] == key)
            return e["value"].is_null() ? std::nullopt : std::optional<int>(e["value"].get<int>());
    return std::nullopt;
}

Verdict criterion_ex1_pd()
{
    Verdict v;
    Proc p;
    json j = pd_json("ex1_m10", p);
    v.require(p.code == 0, "exit " + std::to_string(p.code));
    if (!v.pass)
        return v;
    const auto& t = j["pd_table"];
    v.require(t[0]["kind"] == "infinite" && t[0]["periodic"] == true, "S(1) not infinite by periodicity");
    for (int i = 1; i <= 8; ++i)
        v.require(t[i]["pd"] == 1, "pd S(" + std::to_string(i + 1) + ") != 1");
    for (int i = 9; i <= 11; ++i)
        v.require(t[i]["pd"] == 0, "pd S(" + std::to_string(i + 1) + ") != 0");
    v.require(j["s_infinite"] == json({1}), "S^inf != {1}");
    v.require(p.seconds < kPdSeconds, "runtime " + std::to_string(p.seconds) + " s");
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << p.seconds << " s";
    if (v.pass)
        v.note = os.str();
    return v;
}

Verdict criterion_ex1_bounds()
{
    Verdict v;
    Proc p = run_qalg({"bounds", ex("ex1_m10"), "--V", "3..9", "--format", "json"});
    v.require(p.code == 0, "exit " + std::to_string(p.code));
    if (!v.pass)
        return v;
    json j = json::parse(p.out);
    v.require(j["bounds"]["pd_v"] == 1, "pd V");
    v.require(j["ll_tv"] == 2, "ll^{t_V}");
    v.require(entry(j, "loewy") == 8, "LL - 1");
    v.require(!entry(j, "gldim"), "gldim entry applicable");
    v.require(entry(j, "layer_product") == 7, "(pd V + 2)(ll + 1) - 2");
    v.require(entry(j, "layer_sum") == 7, "2(pd V + ll) + 1");
    v.require(entry(j, "layer_two") == 4, "pd V + 3");
    v.require(j["best_bound"] == 4, "best");
    return v;
}

Verdict criterion_ex2()
{
    Verdict v;
    Proc p;
    json j = pd_json("ex2_n6", p);
    v.require(p.code == 0, "pd exit " + std::to_string(p.code));
    if (!v.pass)
        return v;
    const std::vector<int> want = {5, 1, 1, 1, 1, 0, 4, 3, 2, 1, 0, 0, 0};
    for (std::size_t i = 0; i < want.size(); ++i)
        v.require(j["pd_table"][i]["pd"] == want[i], "pd S(" + std::to_string(i + 1) + ")");
    v.require(j["gldim"]["pd"] == 5, "gldim");
    Proc b = run_qalg({"bounds", ex("ex2_n6"), "--V", "2..6", "--format", "json"});
    v.require(b.code == 0, "bounds exit " + std::to_string(b.code));
    if (!v.pass)
        return v;
    json k = json::parse(b.out);
    std::vector<std::optional<int>> got = {entry(k, "loewy"), entry(k, "gldim"), entry(k, "layer_product"),
                                           entry(k, "layer_sum"), entry(k, "layer_two")};
    v.require(got == std::vector<std::optional<int>>{5, 5, 7, 7, 4}, "bound entries");
    v.require(k["best_bound"] == 4, "best");
    return v;
}

Verdict criterion_dimensions()
{
    Verdict v;
    // ex1: loop a1 at 1, chain 1..10, and 1 -> 11, 1 -> 12
    std::vector<oracle::RawArrow> a1 = {{0, 0}};
    for (int i = 0; i < 9; ++i)
        a1.push_back({i, i + 1});
    a1.push_back({0, 10});
    a1.push_back({0, 11});
    const long o1 = oracle::monomial_dim(12, a1, {{0, 0}, {0, 10}, {0, 11}, {0, 1}, {1, 2, 3, 4, 5, 6, 7, 8, 9}});
    // ex2: chain 1..6, 1 -> 7, chain 7..11, 1 -> 12, 1 -> 13
    std::vector<oracle::RawArrow> a2;
    for (int i = 0; i < 5; ++i)
        a2.push_back({i, i + 1});
    a2.push_back({0, 6});
    for (int i = 6; i < 10; ++i)
        a2.push_back({i, i + 1});
    a2.push_back({0, 11});
    a2.push_back({0, 12});
    const long o2 = oracle::monomial_dim(13, a2, {{5, 6}, {6, 7}, {7, 8}, {8, 9}});
    Proc p1 = run_qalg({"info", ex("ex1_m10"), "--format", "json"});
    Proc p2 = run_qalg({"info", ex("ex2_n6"), "--format", "json"});
    v.require(p1.code == 0 && p2.code == 0, "info failed");
    if (!v.pass)
        return v;
    const long d1 = json::parse(p1.out)["dim"].get<long>();
    const long d2 = json::parse(p2.out)["dim"].get<long>();
    v.require(o1 == 59 && d1 == o1, "ex1: engine " + std::to_string(d1) + ", oracle " + std::to_string(o1));
    v.require(o2 == 35 && d2 == o2, "ex2: engine " + std::to_string(d2) + ", oracle " + std::to_string(o2));
    if (v.pass)
        v.note = "59 and 35, oracle agrees";
    return v;
}

Verdict criterion_certificate()
{
    Verdict v;
    std::ostringstream note;
    for (const auto& [name, vset] : {std::pair{"ex1_m10", "3..9"}, std::pair{"ex2_n6", "2..6"}}) {
        Proc p = run_qalg({"syzcheck", ex(name), "--V", vset, "--seed", std::to_string(kSyzcheckSeed), "--samples",
                           std::to_string(kSyzcheckSamples), "--format", "json"});
        v.require(p.code == 0, std::string(name) + " exit " + std::to_string(p.code));
        if (p.code != 0)
            continue;
        json j = json::parse(p.out);
        v.require(j["k"] == 3, std::string(name) + " delta + 2 != 3");
        v.require(j["failures"] == 0, std::string(name) + " failures");
        std::size_t rand_cases = 0;
        for (const auto& c : j["cases"])
            rand_cases += c["label"].get<std::string>().rfind("rand(", 0) == 0;
        v.require(rand_cases == kSyzcheckSamples, std::string(name) + " random sample count");
        v.require(p.seconds < kSyzcheckSeconds, std::string(name) + " runtime");
        note << name << " " << j["cases"].size() << " modules; ";
    }
    if (v.pass)
        v.note = note.str();
    return v;
}

harness::CampaignResult& campaign()
{
    static harness::CampaignResult r = [] {
        harness::CampaignOptions opt;
        opt.params.seed = kCampaignSeed;
        opt.algebras = kCampaignAlgebras;
        opt.count = kCampaignDraws;
        opt.shrink = false;
        for (const auto& name : harness::check_names())
            if (name != "certificate")
                opt.checks.push_back(name);
        return harness::run_campaign(opt);
    }();
    return r;
}

Verdict criterion_ses()
{
    Verdict v;
    auto& r = campaign();
    for (const char* name : {"ses-layer-bounds", "ses-loewy-bounds"}) {
        const auto& t = r.tally.at(name);
        v.require(t.failed == 0, std::string(name) + ": " + std::to_string(t.failed) + " failures");
        v.require(t.passed >= kMinSesDraws, std::string(name) + ": only " + std::to_string(t.passed) + " draws");
    }
    if (v.pass)
        v.note = std::to_string(r.tally.at("ses-layer-bounds").passed) + " sequences each";
    return v;
}

Verdict criterion_lemmas()
{
    Verdict v;
    auto& r = campaign();
    std::size_t least = SIZE_MAX;
    for (const char* name : {"lemma-ideal-action", "idempotence", "shift-lemma", "vanishing-lemma",
                             "mono-epi-preservation", "omega-lemma", "syzygy-additivity", "stable-syzygy-lemma",
                             "torsion-axioms"}) {
        const auto& t = r.tally.at(name);
        v.require(t.failed == 0, std::string(name) + ": " + std::to_string(t.failed) + " failures");
        v.require(t.passed >= kMinLemmaDraws, std::string(name) + ": only " + std::to_string(t.passed) + " draws");
        least = std::min(least, t.passed);
    }
    if (v.pass)
        v.note = "at least " + std::to_string(least) + " passing draws per lemma";
    return v;
}

Verdict criterion_determinism()
{
    Verdict v;
    const std::vector<std::vector<std::string>> commands = {
        {"info", ex("ex1_m10"), "--format", "json"},
        {"pd", ex("ex1_m10"), "--format", "json"},
        {"pd", ex("ex2_n6"), "--format", "json", "--module", "rand(5,20)+S(1)"},
        {"llt", ex("ex1_m10"), "--V", "3..9", "--format", "json"},
        {"bounds", ex("ex2_n6"), "--V", "2..6", "--format", "json"},
        {"bounds", ex("ex1_m10"), "--search", "--format", "json"},
        {"syzcheck", ex("ex2_n6"), "--V", "2..6", "--seed", "11", "--format", "json"},
        {"fuzz", "--seed", "9", "--algebras", "3", "--count", "2", "--format", "json"},
    };
    for (const auto& c : commands) {
        Proc a = run_qalg(c), b = run_qalg(c);
        v.require(a.code == 0, c[0] + " exit " + std::to_string(a.code));
        v.require(a.out == b.out && !a.out.empty(), c[0] + " output differs between runs");
    }
    if (v.pass)
        v.note = std::to_string(commands.size()) + " commands";
    return v;
}

Verdict criterion_parser()
{
    Verdict v;
    std::vector<fs::path> valid;
    for (const auto& e : fs::directory_iterator(testutil::source_path("tests/data/parser/valid")))
        valid.push_back(e.path());
    v.require(valid.size() == 20, "expected 20 crafted files");
    valid.push_back(ex("ex1_m10"));
    valid.push_back(ex("ex2_n6"));
    for (const auto& f : valid) {
        auto ast = dsl::parse_presentation(testutil::slurp(f.string()));
        const std::string once = dsl::pretty_print(ast);
        auto again = dsl::parse_presentation(once);
        v.require(again == ast && dsl::pretty_print(again) == once, f.filename().string() + " not a fixpoint");
    }
    std::size_t malformed = 0;
    static const std::regex positioned(R"(:\d+:\d+: [A-Za-z]+: )");
    for (const auto& e : fs::directory_iterator(testutil::source_path("tests/data/parser/malformed"))) {
        ++malformed;
        Proc p = run_qalg({"info", e.path().string()});
        v.require(p.code == 2, e.path().filename().string() + " exit " + std::to_string(p.code));
        v.require(std::regex_search(p.err, positioned), e.path().filename().string() + " diagnostic lacks position");
    }
    v.require(malformed == 10, "expected 10 malformed files");
    if (v.pass)
        v.note = std::to_string(valid.size()) + " round trips, " + std::to_string(malformed) + " diagnostics";
    return v;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"example-1 pd table", criterion_ex1_pd},
        {"example-1 bounds", criterion_ex1_bounds},
        {"example-2 pd table and bounds", criterion_ex2},
        {"algebra dimensions vs path enumerator", criterion_dimensions},
        {"syzygy-finiteness certificate", criterion_certificate},
        {"exact-sequence bounds", criterion_ses},
        {"lemma suite", criterion_lemmas},
        {"CLI JSON determinism", criterion_determinism},
        {"parser round trip and diagnostics", criterion_parser},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
        if (!v.note.empty())
            std::cout << "  (" << v.note << ")";
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "  [" << std::fixed << std::setprecision(1) << secs << " s]" << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
