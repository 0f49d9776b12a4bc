#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qalg/field.hpp"

namespace qalg::quiver {

/// Vertices are 0-based internally; every user-facing surface prints them 1-based.
using VertexId = int;
using ArrowId = int;

struct Arrow {
    std::string name;
    VertexId source = 0;
    VertexId target = 0;
};

class QuiverError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(int num_vertices, std::vector<Arrow> arrows);

    int num_vertices() const { return num_vertices_; }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(static_cast<std::size_t>(a)); }
    std::optional<ArrowId> find(const std::string& name) const;
    const std::vector<ArrowId>& out_arrows(VertexId v) const { return out_.at(static_cast<std::size_t>(v)); }
    const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_.at(static_cast<std::size_t>(v)); }

private:
    int num_vertices_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<ArrowId>> out_;
    std::vector<std::vector<ArrowId>> in_;
};

/// A path in the quiver, arrows listed in traversal order. The empty arrow
/// list is the trivial path at `source` (== `target`).
struct Path {
    VertexId source = 0;
    VertexId target = 0;
    std::vector<ArrowId> arrows;

    static Path trivial(VertexId v) { return {v, v, {}}; }
    static Path of_arrow(const Quiver& q, ArrowId a);
    std::size_t length() const { return arrows.size(); }
    bool is_trivial() const { return arrows.empty(); }

    bool operator==(const Path&) const = default;
    /// Length first, then lexicographic on arrow ids (declaration order);
    /// trivial paths are ordered by vertex.
    std::strong_ordering operator<=>(const Path& other) const;
};

/// Builds a path from arrow ids, verifying consecutive arrows compose.
std::optional<Path> make_path(const Quiver& q, const std::vector<ArrowId>& arrows);
/// Concatenation a then b, or nullopt if target(a) != source(b).
std::optional<Path> concat(const Path& a, const Path& b);
/// "e3" for trivial paths, otherwise arrow names joined by '*'.
std::string to_string(const Path& p, const Quiver& q);

struct Term {
    linalg::Scalar coeff = 1;
    Path path;
};

/// A linear combination of parallel paths of length >= 2.
struct Relation {
    std::vector<Term> terms;
};

}  // namespace qalg::quiver
