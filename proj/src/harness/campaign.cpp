#include <fstream>
#include <memory>

#include "json.hpp"

#include "qalg/harness.hpp"

namespace qalg::harness {

namespace {

std::uint64_t name_hash(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<AlgebraPtr> try_compile(const dsl::Presentation& p)
{
    try {
        return dsl::compile_presentation(p);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

dsl::Presentation without_arrow(const dsl::Presentation& p, quiver::ArrowId k)
{
    std::vector<quiver::Arrow> arrows;
    for (std::size_t i = 0; i < p.quiver.num_arrows(); ++i)
        if (static_cast<quiver::ArrowId>(i) != k)
            arrows.push_back(p.quiver.arrow(static_cast<quiver::ArrowId>(i)));
    dsl::Presentation out = p;
    out.quiver = quiver::Quiver(p.quiver.num_vertices(), arrows);
    out.relations.clear();
    for (const auto& r : p.relations) {
        quiver::Relation nr;
        bool keep = true;
        for (auto t : r.terms) {
            for (auto& a : t.path.arrows) {
                if (a == k)
                    keep = false;
                else if (a > k)
                    --a;
            }
            nr.terms.push_back(std::move(t));
        }
        if (keep)
            out.relations.push_back(std::move(nr));
    }
    return out;
}

}  // namespace

dsl::Presentation shrink(const dsl::Presentation& p, const std::function<bool(const AlgebraPtr&)>& fails)
{
    dsl::Presentation cur = p;
    int budget = 400;
    bool changed = true;
    while (changed && budget > 0) {
        changed = false;
        for (int k = static_cast<int>(cur.quiver.num_arrows()) - 1; k >= 0 && budget > 0; --k) {
            --budget;
            auto cand = without_arrow(cur, k);
            auto alg = try_compile(cand);
            if (alg && fails(*alg)) {
                cur = std::move(cand);
                changed = true;
            }
        }
        for (int k = static_cast<int>(cur.relations.size()) - 1; k >= 0 && budget > 0; --k) {
            --budget;
            auto cand = cur;
            cand.relations.erase(cand.relations.begin() + k);
            auto alg = try_compile(cand);
            if (alg && fails(*alg)) {
                cur = std::move(cand);
                changed = true;
            }
        }
    }
    return cur;
}

CampaignResult run_campaign(const CampaignOptions& options)
{
    CampaignResult result;
    result.seed = options.params.seed;
    result.algebras = options.algebras;
    result.draws_per_check = options.count;

    std::vector<std::pair<std::string, CheckFn>> selected;
    for (const auto& entry : checks())
        if (options.checks.empty() ||
            std::find(options.checks.begin(), options.checks.end(), entry.first) != options.checks.end())
            selected.push_back(entry);
    for (const auto& name : options.checks)
        if (std::none_of(checks().begin(), checks().end(), [&](const auto& e) { return e.first == name; }))
            throw std::invalid_argument("unknown check: " + name);
    if (options.count == 0)
        return result;
    for (const auto& [name, fn] : selected)
        result.tally[name];

    for (std::size_t k = 0; k < options.algebras; ++k) {
        const std::uint64_t alg_seed = derive_seed(options.params.seed, k);
        const dsl::Presentation pres =
            options.fixed ? *options.fixed : random_presentation(options.params, alg_seed);
        const AlgebraPtr alg = dsl::compile_presentation(pres);

        auto make_draw = [&](const AlgebraPtr& a, std::uint64_t draw_seed) {
            const int cutoff = options.cutoff > 0 ? options.cutoff : std::min(torsion::default_cutoff(*a), 32);
            auto memo = std::make_shared<std::optional<torsion::SimpleClassification>>();
            Draw d;
            d.algebra = a;
            d.algebra_seed = alg_seed;
            d.seed = draw_seed;
            d.module_budget = options.params.module_budget;
            d.cutoff = cutoff;
            d.classification = [memo, a, cutoff]() -> const torsion::SimpleClassification& {
                if (!*memo)
                    *memo = torsion::classify_simples(a, cutoff);
                return **memo;
            };
            return d;
        };
        const Draw base = make_draw(alg, 0);

        for (const auto& [name, fn] : selected) {
            auto& tally = result.tally[name];
            const std::uint64_t check_seed = derive_seed(alg_seed, name_hash(name));
            for (std::size_t j = 0; j < options.count; ++j) {
                Draw d = base;
                d.seed = derive_seed(check_seed, j);
                Outcome o;
                try {
                    o = fn(d);
                } catch (const std::exception& e) {
                    o = Outcome{false, false, std::string("exception: ") + e.what()};
                }
                if (o.skipped) {
                    ++tally.skipped;
                    continue;
                }
                if (o.pass) {
                    ++tally.passed;
                    continue;
                }
                ++tally.failed;
                Failure f;
                f.check = name;
                f.algebra_seed = alg_seed;
                f.draw_seed = d.seed;
                f.detail = o.detail;
                dsl::Presentation minimal = pres;
                if (options.shrink) {
                    const auto seed = d.seed;
                    const CheckFn check = fn;
                    minimal = shrink(pres, [&](const AlgebraPtr& a) {
                        try {
                            return !check(make_draw(a, seed)).pass;
                        } catch (const std::exception&) {
                            return true;
                        }
                    });
                }
                if (auto a = try_compile(minimal))
                    f.reproduction = dsl::pretty_print(dsl::to_ast(**a));
                f.command = "qalg fuzz --seed " + std::to_string(options.params.seed) + " --algebras " +
                            std::to_string(k + 1) + " --count " + std::to_string(options.count) +
                            " --check " + name;
                result.failures.push_back(std::move(f));
            }
        }
    }
    return result;
}

void write_failures(const CampaignResult& r, const std::filesystem::path& dir)
{
    nlohmann::json summary;
    summary["seed"] = r.seed;
    summary["algebras"] = r.algebras;
    summary["draws_per_check"] = r.draws_per_check;
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : r.failures) {
        auto sub = dir / f.check;
        std::filesystem::create_directories(sub);
        auto file = sub / (std::to_string(f.draw_seed) + ".qalg");
        std::ofstream out(file);
        out << "# " << f.check << ": " << f.detail << "\n";
        out << "# algebra seed " << f.algebra_seed << ", draw seed " << f.draw_seed << "\n";
        out << "# " << f.command << "\n";
        out << f.reproduction;
        fails.push_back({{"check", f.check},
                         {"algebra_seed", f.algebra_seed},
                         {"draw_seed", f.draw_seed},
                         {"detail", f.detail},
                         {"command", f.command},
                         {"file", file.string()}});
    }
    summary["failures"] = fails;
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "summary.json") << summary.dump(2) << "\n";
}

}  // namespace qalg::harness
