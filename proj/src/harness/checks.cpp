// Property checks run by the campaign. Each one draws its own modules from
// the draw seed, so a (check, algebra seed, draw seed) triple reproduces a
// failure exactly.

#include <optional>
#include <sstream>

#include "qalg/bounds.hpp"
#include "qalg/harness.hpp"
#include "qalg/linalg.hpp"

namespace qalg::harness {

using linalg::Matrix;
using linalg::Scalar;
using quiver::VertexId;
using repr::Submodule;
using torsion::VertexSet;

namespace {

Outcome fail(const std::string& what)
{
    return Outcome{false, false, what};
}

Outcome skip(const std::string& why)
{
    return Outcome{true, true, why};
}

Module draw_module(const Draw& d, Rng& rng)
{
    return random_module(d.algebra, rng.next(), d.module_budget);
}

VertexSet finite_subset(const Draw& d, Rng& rng)
{
    const auto& c = d.classification();
    VertexSet v = random_vertex_set(d.algebra->num_vertices(), rng);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = v[i] && c.finite[i];
    return v;
}

std::string dims_str(const std::vector<std::size_t>& d)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

// Syzygies of random modules can grow quickly on wild algebras; draws whose
// syzygies pass this size are skipped rather than fed to the hom solver.
constexpr std::size_t kSyzygyCap = 120;

std::optional<Module> capped_syzygy(const Module& m, int steps)
{
    Module cur = m;
    for (int i = 0; i < steps; ++i) {
        auto pc = repr::projective_cover(cur);
        if (pc.projective.total_dim() - cur.total_dim() > kSyzygyCap)
            return std::nullopt;
        cur = repr::as_module(pc.projective, repr::kernel(pc.projective, pc.epi));
    }
    return cur;
}

bool additive(const ShortExactSequence& s)
{
    for (VertexId v = 0; v < s.m.num_vertices(); ++v)
        if (s.l.dim(v) + s.n.dim(v) != s.m.dim(v))
            return false;
    return true;
}

Outcome ses_layer_bounds(const Draw& d)
{
    Rng rng(d.seed);
    Module m = draw_module(d, rng);
    VertexSet v = random_vertex_set(d.algebra->num_vertices(), rng);
    auto s = random_ses(m, rng.next());
    if (!additive(s))
        return fail("dimension vectors not additive");
    auto r = bounds::exact_sequence_bound_check(s.l, s.m, s.n, v);
    return r.pass ? Outcome{} : fail(r.detail);
}

Outcome ses_loewy_bounds(const Draw& d)
{
    Rng rng(d.seed);
    Module m = draw_module(d, rng);
    auto s = random_ses(m, rng.next());
    VertexSet none(static_cast<std::size_t>(d.algebra->num_vertices()), false);
    auto r = bounds::exact_sequence_bound_check(s.l, s.m, s.n, none);
    if (!r.pass)
        return fail("LL: " + r.detail);
    if (r.ll_m != torsion::loewy_length(s.m))
        return fail("layer length with V empty differs from the Loewy length");
    const auto& c = d.classification();
    if (c.determined()) {
        auto ri = bounds::exact_sequence_bound_check(s.l, s.m, s.n, c.finite);
        if (!ri.pass)
            return fail("ll-infinity: " + ri.detail);
    }
    return {};
}

Outcome lemma_ideal_action(const Draw& d)
{
    Rng rng(d.seed);
    Module x = draw_module(d, rng);
    const auto& a = *d.algebra;
    if (!(repr::radical(x) == torsion::module_times_ideal(x, quiver::radical_ideal(a))))
        return fail("rad M != M rad A");
    VertexSet v = random_vertex_set(a.num_vertices(), rng);
    Module reg = repr::regular(d.algebra);
    for (int i = 0; i <= 4; ++i) {
        auto ideal = torsion::as_ideal(a, torsion::torsion_layer(reg, v, i));
        if (!(torsion::torsion_layer(x, v, i) == torsion::module_times_ideal(x, ideal)))
            return fail("t F^" + std::to_string(i) + "(X) != X t F^" + std::to_string(i) + "(A)");
    }
    return {};
}

Outcome mono_epi_preservation(const Draw& d)
{
    Rng rng(d.seed);
    Module m = draw_module(d, rng);
    VertexSet v = random_vertex_set(d.algebra->num_vertices(), rng);
    auto s = random_ses(m, rng.next());
    // Monos: t_V(L) and rad L land injectively inside t_V(M) and rad M.
    auto tl = repr::image_of(s.inclusion, torsion::torsion_radical(s.l, v));
    if (tl.total_dim() != torsion::torsion_radical(s.l, v).total_dim())
        return fail("t_V(L) -> M not injective");
    if (!repr::submodule_contains(torsion::torsion_radical(m, v), tl))
        return fail("t_V(L) not inside t_V(M)");
    auto rl = repr::image_of(s.inclusion, repr::radical(s.l));
    if (rl.total_dim() != repr::radical(s.l).total_dim() ||
        !repr::submodule_contains(repr::radical(m), rl))
        return fail("rad L -> rad M not a mono");
    // Epis: t_V(M) -> t_V(N) and rad M -> rad N are onto.
    if (!(repr::image_of(s.projection, torsion::torsion_radical(m, v)) ==
          torsion::torsion_radical(s.n, v)))
        return fail("t_V(M) -> t_V(N) not an epi");
    if (!(repr::image_of(s.projection, repr::radical(m)) == repr::radical(s.n)))
        return fail("rad M -> rad N not an epi");
    return {};
}

Outcome shift_lemma(const Draw& d)
{
    Rng rng(d.seed);
    Module m = draw_module(d, rng);
    VertexSet v = random_vertex_set(d.algebra->num_vertices(), rng);
    const int n = torsion::layer_length(m, v).value;
    for (int j = 0; j <= n; ++j) {
        Module fj = repr::as_module(m, torsion::layer_power(m, v, j));
        const int got = torsion::layer_length(fj, v).value;
        if (got != n - j)
            return fail("ll(F^" + std::to_string(j) + " M) = " + std::to_string(got) +
                        ", expected " + std::to_string(n - j));
    }
    return {};
}

Outcome vanishing_lemma(const Draw& d)
{
    Rng rng(d.seed);
    Module m = draw_module(d, rng);
    VertexSet v = random_vertex_set(d.algebra->num_vertices(), rng);
    const int n = torsion::layer_length(m, v).value;
    if (!torsion::torsion_layer(m, v, n).is_zero())
        return fail("t F^ll(M) != 0");
    if (n > 0 && torsion::torsion_layer(m, v, n - 1).is_zero())
        return fail("t F^(ll-1)(M) = 0");
    return {};
}

Outcome omega_lemma(const Draw& d)
{
    Rng rng(d.seed);
    Module m = draw_module(d, rng);
    VertexSet v = finite_subset(d, rng);
    auto t = torsion::torsion_radical(m, v);
    if (t.is_zero())
        return skip("t_V(M) = 0");
    const int bound = torsion::layer_length(repr::regular(d.algebra), v).value - 1;
    Module om = repr::syzygy(repr::as_module(m, t));
    const int got = torsion::layer_length(om, v).value;
    if (got > bound)
        return fail("ll(Omega t M) = " + std::to_string(got) + " > " + std::to_string(bound));
    return {};
}

Outcome torsion_axioms(const Draw& d)
{
    Rng rng(d.seed);
    Module m = draw_module(d, rng);
    Module other = draw_module(d, rng);
    VertexSet v = random_vertex_set(d.algebra->num_vertices(), rng);
    auto t = torsion::torsion_radical(m, v);
    Module tm = repr::as_module(m, t);
    auto top = repr::top_dims(tm);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] && top[i] != 0)
            return fail("top t_V(M) meets V");
    auto q = torsion::torsion_free_quotient(other, v);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i] && q.module.dims()[i] != 0)
            return fail("q_t(N) not supported on V");
    if (!repr::hom_space(tm, q.module).empty())
        return fail("Hom(t_V M, q_t N) != 0");
    auto qm = torsion::torsion_free_quotient(m, v);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (t.basis[i].rows() + qm.module.dims()[i] != m.dims()[i])
            return fail("0 -> tM -> M -> qM -> 0 not exact in dimensions");
    // Maximality: adding any element outside t_V(M) brings V into the top.
    std::vector<VertexId> room;
    for (VertexId i = 0; i < m.num_vertices(); ++i)
        if (t.dim(i) < m.dim(i))
            room.push_back(i);
    if (!room.empty()) {
        VertexId i = room[rng.below(room.size())];
        const auto ii = static_cast<std::size_t>(i);
        linalg::EchelonBasis span(m.dim(i), m.field());
        for (std::size_t r = 0; r < t.basis[ii].rows(); ++r)
            span.insert(t.basis[ii].row(r));
        std::vector<Scalar> x;
        do {
            x.assign(m.dim(i), 0);
            for (auto& e : x)
                e = static_cast<Scalar>(rng.below(m.field().modulus()));
        } while (span.contains(x));
        auto gens = t.basis;
        gens[ii] = Matrix::vstack(gens[ii], Matrix::from_row_vectors({x}, m.dim(i), m.field()));
        Module u = repr::as_module(m, repr::submodule_generated(m, gens));
        auto ut = repr::top_dims(u);
        bool meets = false;
        for (std::size_t k = 0; k < v.size(); ++k)
            meets = meets || (v[k] && ut[k] != 0);
        if (!meets)
            return fail("a torsion submodule strictly contains t_V(M)");
    }
    return {};
}

Outcome idempotence(const Draw& d)
{
    Rng rng(d.seed);
    Module m = draw_module(d, rng);
    VertexSet v = random_vertex_set(d.algebra->num_vertices(), rng);
    Module tm = repr::as_module(m, torsion::torsion_radical(m, v));
    if (!(torsion::torsion_radical(tm, v) == repr::full_submodule(tm)))
        return fail("t_V t_V M != t_V M");
    return {};
}

Outcome syzygy_additivity(const Draw& d)
{
    Rng rng(d.seed);
    Module x = draw_module(d, rng);
    Module y = draw_module(d, rng);
    const int m = static_cast<int>(rng.range(1, 3));
    auto ox = capped_syzygy(x, m), oy = capped_syzygy(y, m);
    if (!ox || !oy || ox->total_dim() + oy->total_dim() > kSyzygyCap)
        return skip("syzygies too large");
    Module lhs = repr::syzygy(repr::direct_sum(x, y), m);
    Module rhs = repr::direct_sum(*ox, *oy);
    if (!repr::is_iso(lhs, rhs, repr::kDefaultIsoTrials, rng.next()))
        return fail("Omega^" + std::to_string(m) + "(X+Y) " + dims_str(lhs.dims()) +
                    " not iso to " + dims_str(rhs.dims()));
    return {};
}

bool stably_iso(const Module& a, const Module& b, std::uint64_t seed)
{
    Module ca = repr::strip_projective_summands(a).core;
    Module cb = repr::strip_projective_summands(b).core;
    return repr::is_iso(ca, cb, repr::kDefaultIsoTrials, seed);
}

Outcome stable_syzygy_lemma(const Draw& d)
{
    Rng rng(d.seed);
    Module y = draw_module(d, rng);
    auto s = random_ses(y, rng.next());
    const int cutoff = 12;
    bool ran = false;
    auto pz = torsion::pd(s.n, cutoff, kSyzygyCap);
    if (pz.finite()) {
        const int m = std::max(0, pz.value) + static_cast<int>(rng.range(0, 1));
        auto ox = capped_syzygy(s.l, m), oy = capped_syzygy(s.m, m);
        if (ox && oy) {
            if (!stably_iso(*ox, *oy, rng.next()))
                return fail("pd Z = " + std::to_string(pz.value) + " but Omega^" + std::to_string(m) +
                            " X, Omega^" + std::to_string(m) + " Y differ stably");
            ran = true;
        }
    }
    auto px = torsion::pd(s.l, cutoff, kSyzygyCap);
    if (px.finite()) {
        const int m = std::max(0, px.value) + static_cast<int>(rng.range(0, 1));
        auto oy = capped_syzygy(s.m, m + 1), oz = capped_syzygy(s.n, m + 1);
        if (oy && oz) {
            if (!stably_iso(*oy, *oz, rng.next()))
                return fail("pd X = " + std::to_string(px.value) + " but Omega^" + std::to_string(m + 1) +
                            " Y, Omega^" + std::to_string(m + 1) + " Z differ stably");
            ran = true;
        }
    }
    return ran ? Outcome{} : skip("pd X and pd Z not finite, or syzygies too large");
}

Outcome certificate(const Draw& d)
{
    Rng rng(d.seed);
    const auto& a = d.algebra;
    Module reg = repr::regular(a);
    VertexSet v = finite_subset(d, rng);
    int ll = torsion::layer_length(reg, v).value;
    if (ll > 2) {
        v = d.classification().finite;
        ll = torsion::layer_length(reg, v).value;
    }
    if (ll > 2)
        return skip("ll > 2 for every tried V");
    const int k = torsion::pd_of_set(d.classification(), v).value + 2;
    std::vector<Module> simples;
    for (VertexId i = 0; i < a->num_vertices(); ++i)
        simples.push_back(repr::simple(a, i));
    const Module top = repr::direct_sum(simples);
    auto otop = capped_syzygy(top, k);
    Module m = draw_module(d, rng);
    auto om = capped_syzygy(m, k);
    if (!otop || !om)
        return skip("syzygies too large");
    Module gen = repr::strip_projective_summands(*otop).core;
    Module core = repr::strip_projective_summands(*om).core;
    if (repr::in_add(core, gen))
        return {};
    const bool earlier =
        repr::in_add(core, repr::strip_projective_summands(repr::syzygy(top, k - 1)).core);
    return fail("Omega^" + std::to_string(k) + "(M) " + dims_str(m.dims()) +
                " not in add(Omega^k(A/rad A) + A); one step earlier: " + (earlier ? "yes" : "no"));
}

}  // namespace

const std::vector<std::pair<std::string, CheckFn>>& checks()
{
    static const std::vector<std::pair<std::string, CheckFn>> all = {
        {"ses-layer-bounds", ses_layer_bounds},
        {"ses-loewy-bounds", ses_loewy_bounds},
        {"lemma-ideal-action", lemma_ideal_action},
        {"mono-epi-preservation", mono_epi_preservation},
        {"shift-lemma", shift_lemma},
        {"vanishing-lemma", vanishing_lemma},
        {"omega-lemma", omega_lemma},
        {"torsion-axioms", torsion_axioms},
        {"idempotence", idempotence},
        {"syzygy-additivity", syzygy_additivity},
        {"stable-syzygy-lemma", stable_syzygy_lemma},
        {"certificate", certificate},
    };
    return all;
}

std::vector<std::string> check_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : checks())
        out.push_back(name);
    return out;
}

}  // namespace qalg::harness
