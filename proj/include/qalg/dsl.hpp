#pragma once
// The .qalg presentation language.
//
//   algebra ::= "algebra" IDENT "{" stmt* "}"
//   stmt    ::= "field" "=" INT ";" | "vertices" "=" INT ";" | "max_length" "=" INT ";"
//             | "arrows" "{" (IDENT ":" INT "->" INT ";")* "}"
//             | "relations" "{" (relexpr ";")* "}"
//   relexpr ::= ["-"] term (("+" | "-") term)*
//   term    ::= (INT "*")? IDENT ("*" IDENT)*
//
// Paths are written in traversal order (a*b: first a, then b). Vertices are
// 1-based. '#' starts a comment that runs to the end of the line.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qalg/algebra.hpp"

namespace qalg::dsl {

inline constexpr std::int64_t kMaxVertices = 4096;

struct SourcePos {
    int line = 1;
    int col = 1;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind {
        SyntaxError,
        DuplicateArrow,
        DuplicateStatement,
        MissingStatement,
        UnknownVertex,
        UnknownArrow,
        BadModulus,
        BadRelation,
    };
    ParseError(Kind kind, SourcePos pos, std::string message, std::string expected = {});

    Kind kind() const { return kind_; }
    SourcePos pos() const { return pos_; }
    const std::string& message() const { return message_; }
    const std::string& expected() const { return expected_; }

private:
    Kind kind_;
    SourcePos pos_;
    std::string message_;
    std::string expected_;
};

std::string_view kind_name(ParseError::Kind kind);

struct ArrowDecl {
    std::string name;
    std::int64_t source = 0;
    std::int64_t target = 0;
    SourcePos pos;
    bool operator==(const ArrowDecl& o) const
    {
        return name == o.name && source == o.source && target == o.target;
    }
};

struct TermAst {
    bool negated = false;
    std::optional<std::int64_t> coeff;
    std::vector<std::string> arrows;
    SourcePos pos;
    bool operator==(const TermAst& o) const
    {
        return negated == o.negated && coeff == o.coeff && arrows == o.arrows;
    }
};

struct RelationAst {
    std::vector<TermAst> terms;
    SourcePos pos;
    bool operator==(const RelationAst& o) const { return terms == o.terms; }
};

/// Positions are carried for diagnostics and ignored by ==.
struct PresentationAst {
    std::string name;
    std::optional<std::int64_t> field;
    std::optional<std::int64_t> vertices;
    std::optional<std::int64_t> max_length;
    std::vector<ArrowDecl> arrows;
    std::vector<RelationAst> relations;
    bool operator==(const PresentationAst&) const = default;
};

/// Syntax plus the checks that need no relation semantics: prime modulus,
/// vertex ranges, unique arrow names, vertices declared.
PresentationAst parse_presentation(std::string_view text);
std::string pretty_print(const PresentationAst& ast);

struct Presentation {
    std::string name;
    quiver::Quiver quiver;
    std::vector<quiver::Relation> relations;
    linalg::Field field;
    int max_length = quiver::kDefaultMaxLength;
};

/// Resolves arrow names and checks relation paths (composable, parallel,
/// length >= 2), reporting the offending term's position.
Presentation build_presentation(const PresentationAst& ast,
                                std::optional<std::uint32_t> modulus_override = std::nullopt);
quiver::AlgebraPtr compile_presentation(const Presentation& p);
/// parse + build + compile.
quiver::AlgebraPtr load_algebra(std::string_view text,
                                std::optional<std::uint32_t> modulus_override = std::nullopt);
/// Inverse of build_presentation for a compiled algebra (relations in their
/// normalized form).
PresentationAst to_ast(const quiver::Algebra& a);

// ---- module specifiers -------------------------------------------------

class ModuleSpecError : public std::runtime_error {
public:
    enum class Kind { UnknownForm, VertexOutOfRange };
    ModuleSpecError(Kind kind, std::size_t offset, const std::string& what)
        : std::runtime_error(what), kind_(kind), offset_(offset)
    {
    }
    Kind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

private:
    Kind kind_;
    std::size_t offset_;
};

struct ModuleSpec {
    enum class Kind { Projective, Simple, Regular, Random, Sum };
    Kind kind = Kind::Regular;
    quiver::VertexId vertex = 0;  // 0-based
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::vector<ModuleSpec> summands;
};

/// P(i) | S(i) | A | rand(seed,size) | spec + spec
ModuleSpec parse_module_spec(std::string_view text, const quiver::Algebra& a);
std::string to_string(const ModuleSpec& spec);

}  // namespace qalg::dsl
