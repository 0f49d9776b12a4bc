#include "qalg/quiver.hpp"

#include <algorithm>
#include <set>

namespace qalg::quiver {

Quiver::Quiver(int num_vertices, std::vector<Arrow> arrows)
    : num_vertices_(num_vertices), arrows_(std::move(arrows)),
      out_(static_cast<std::size_t>(std::max(num_vertices, 0))),
      in_(static_cast<std::size_t>(std::max(num_vertices, 0)))
{
    if (num_vertices < 0)
        throw QuiverError("negative vertex count");
    std::set<std::string> names;
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        const auto& arr = arrows_[a];
        if (arr.source < 0 || arr.source >= num_vertices || arr.target < 0 ||
            arr.target >= num_vertices)
            throw QuiverError("arrow '" + arr.name + "' has an undeclared endpoint");
        if (!names.insert(arr.name).second)
            throw QuiverError("duplicate arrow name '" + arr.name + "'");
        out_[static_cast<std::size_t>(arr.source)].push_back(static_cast<ArrowId>(a));
        in_[static_cast<std::size_t>(arr.target)].push_back(static_cast<ArrowId>(a));
    }
}

std::optional<ArrowId> Quiver::find(const std::string& name) const
{
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].name == name)
            return static_cast<ArrowId>(a);
    return std::nullopt;
}

Path Path::of_arrow(const Quiver& q, ArrowId a)
{
    const auto& arr = q.arrow(a);
    return {arr.source, arr.target, {a}};
}

std::strong_ordering Path::operator<=>(const Path& other) const
{
    if (auto c = arrows.size() <=> other.arrows.size(); c != 0)
        return c;
    if (arrows.empty())
        return source <=> other.source;
    return arrows <=> other.arrows;
}

std::optional<Path> make_path(const Quiver& q, const std::vector<ArrowId>& arrows)
{
    if (arrows.empty())
        return std::nullopt;
    for (auto a : arrows)
        if (a < 0 || static_cast<std::size_t>(a) >= q.num_arrows())
            return std::nullopt;
    for (std::size_t k = 1; k < arrows.size(); ++k)
        if (q.arrow(arrows[k - 1]).target != q.arrow(arrows[k]).source)
            return std::nullopt;
    return Path{q.arrow(arrows.front()).source, q.arrow(arrows.back()).target, arrows};
}

std::optional<Path> concat(const Path& a, const Path& b)
{
    if (a.target != b.source)
        return std::nullopt;
    Path out{a.source, b.target, a.arrows};
    out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
    return out;
}

std::string to_string(const Path& p, const Quiver& q)
{
    if (p.is_trivial())
        return "e" + std::to_string(p.source + 1);
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k)
            s += '*';
        s += q.arrow(p.arrows[k]).name;
    }
    return s;
}

}  // namespace qalg::quiver
