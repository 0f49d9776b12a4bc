#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "qalg/dsl.hpp"

namespace qalg::dsl {

ParseError::ParseError(Kind kind, SourcePos pos, std::string message, std::string expected)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " +
                         std::string(kind_name(kind)) + ": " + message +
                         (expected.empty() ? "" : " (expected " + expected + ")")),
      kind_(kind), pos_(pos), message_(std::move(message)), expected_(std::move(expected))
{
}

std::string_view kind_name(ParseError::Kind kind)
{
    switch (kind) {
    case ParseError::Kind::SyntaxError: return "SyntaxError";
    case ParseError::Kind::DuplicateArrow: return "DuplicateArrow";
    case ParseError::Kind::DuplicateStatement: return "DuplicateStatement";
    case ParseError::Kind::MissingStatement: return "MissingStatement";
    case ParseError::Kind::UnknownVertex: return "UnknownVertex";
    case ParseError::Kind::UnknownArrow: return "UnknownArrow";
    case ParseError::Kind::BadModulus: return "BadModulus";
    case ParseError::Kind::BadRelation: return "BadRelation";
    }
    return "ParseError";
}

namespace {

enum class Tok { Ident, Int, Symbol, End };

struct Token {
    Tok type = Tok::End;
    std::string text;
    std::int64_t value = 0;
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next()
    {
        skip_space();
        Token t;
        t.pos = pos_;
        if (i_ >= src_.size())
            return t;
        char c = src_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.type = Tok::Ident;
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                t.text += advance();
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.type = Tok::Int;
            std::uint64_t v = 0;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
                char d = advance();
                t.text += d;
                v = v * 10 + static_cast<std::uint64_t>(d - '0');
                if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
                    throw ParseError(ParseError::Kind::SyntaxError, t.pos, "integer literal too large");
            }
            t.value = static_cast<std::int64_t>(v);
            return t;
        }
        if (c == '-' && i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
            t.type = Tok::Symbol;
            t.text = "->";
            advance();
            advance();
            return t;
        }
        static const std::string symbols = "{};:=+*-(),";
        if (symbols.find(c) != std::string::npos) {
            t.type = Tok::Symbol;
            t.text = std::string(1, advance());
            return t;
        }
        std::ostringstream msg;
        if (std::isprint(static_cast<unsigned char>(c)))
            msg << "unexpected character '" << c << "'";
        else
            msg << "unexpected byte 0x" << std::hex << static_cast<int>(static_cast<unsigned char>(c));
        throw ParseError(ParseError::Kind::SyntaxError, t.pos, msg.str());
    }

private:
    char advance()
    {
        char c = src_[i_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else {
            ++pos_.col;
        }
        return c;
    }

    void skip_space()
    {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == '#') {
                while (i_ < src_.size() && src_[i_] != '\n')
                    advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    SourcePos pos_;
};

std::string describe(const Token& t)
{
    switch (t.type) {
    case Tok::End: return "end of input";
    case Tok::Int: return "integer " + t.text;
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Symbol: return "'" + t.text + "'";
    }
    return "token";
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { cur_ = lex_.next(); }

    PresentationAst parse()
    {
        PresentationAst ast;
        expect_keyword("algebra");
        ast.name = expect_ident("algebra name").text;
        expect_symbol("{");
        std::set<std::string> seen;
        while (!is_symbol("}")) {
            if (cur_.type != Tok::Ident)
                fail("statement keyword", "'field', 'vertices', 'max_length', 'arrows', 'relations' or '}'");
            Token kw = cur_;
            if (kw.text == "field" || kw.text == "vertices" || kw.text == "max_length") {
                if (!seen.insert(kw.text).second)
                    throw ParseError(ParseError::Kind::DuplicateStatement, kw.pos,
                                     "'" + kw.text + "' given twice");
                bump();
                expect_symbol("=");
                Token num = expect_int();
                const std::int64_t v = num.value;
                expect_symbol(";");
                if (kw.text == "field") {
                    ast.field = v;
                    field_pos_ = num.pos;
                } else if (kw.text == "vertices") {
                    ast.vertices = v;
                    if (v > kMaxVertices)
                        throw ParseError(ParseError::Kind::SyntaxError, num.pos,
                                         "at most " + std::to_string(kMaxVertices) + " vertices");
                } else {
                    ast.max_length = v;
                    if (v < 1)
                        throw ParseError(ParseError::Kind::SyntaxError, kw.pos, "max_length must be >= 1");
                }
            } else if (kw.text == "arrows") {
                bump();
                expect_symbol("{");
                while (!is_symbol("}"))
                    ast.arrows.push_back(parse_arrow());
                bump();
            } else if (kw.text == "relations") {
                bump();
                expect_symbol("{");
                while (!is_symbol("}")) {
                    ast.relations.push_back(parse_relation());
                    expect_symbol(";");
                }
                bump();
            } else {
                fail("statement keyword", "'field', 'vertices', 'max_length', 'arrows', 'relations' or '}'");
            }
        }
        SourcePos close = cur_.pos;
        bump();
        if (cur_.type != Tok::End)
            fail("end of input", "end of input");
        validate(ast, close);
        return ast;
    }

private:
    void bump() { cur_ = lex_.next(); }
    bool is_symbol(const char* s) const { return cur_.type == Tok::Symbol && cur_.text == s; }

    [[noreturn]] void fail(const std::string& what, const std::string& expected)
    {
        throw ParseError(ParseError::Kind::SyntaxError, cur_.pos,
                         "unexpected " + describe(cur_) + " while reading " + what, expected);
    }

    void expect_symbol(const char* s)
    {
        if (!is_symbol(s))
            fail("'" + std::string(s) + "'", std::string("'") + s + "'");
        bump();
    }
    void expect_keyword(const char* kw)
    {
        if (cur_.type != Tok::Ident || cur_.text != kw)
            fail(std::string("keyword '") + kw + "'", std::string("'") + kw + "'");
        bump();
    }
    Token expect_ident(const char* what)
    {
        if (cur_.type != Tok::Ident)
            fail(what, "identifier");
        Token t = cur_;
        bump();
        return t;
    }
    Token expect_int()
    {
        if (cur_.type != Tok::Int)
            fail("integer", "integer");
        Token t = cur_;
        bump();
        return t;
    }

    ArrowDecl parse_arrow()
    {
        ArrowDecl d;
        Token name = expect_ident("arrow name");
        d.name = name.text;
        d.pos = name.pos;
        expect_symbol(":");
        Token s = expect_int();
        expect_symbol("->");
        Token t = expect_int();
        expect_symbol(";");
        d.source = s.value;
        d.target = t.value;
        endpoint_pos_.push_back({s.pos, t.pos});
        return d;
    }

    TermAst parse_term(bool negated)
    {
        TermAst term;
        term.negated = negated;
        term.pos = cur_.pos;
        if (cur_.type == Tok::Int) {
            term.coeff = cur_.value;
            bump();
            expect_symbol("*");
        }
        term.arrows.push_back(expect_ident("arrow name").text);
        while (is_symbol("*")) {
            bump();
            term.arrows.push_back(expect_ident("arrow name").text);
        }
        return term;
    }

    RelationAst parse_relation()
    {
        RelationAst rel;
        rel.pos = cur_.pos;
        bool neg = false;
        if (is_symbol("-")) {
            neg = true;
            bump();
        }
        rel.terms.push_back(parse_term(neg));
        while (is_symbol("+") || is_symbol("-")) {
            neg = is_symbol("-");
            bump();
            rel.terms.push_back(parse_term(neg));
        }
        return rel;
    }

    void validate(const PresentationAst& ast, SourcePos close)
    {
        if (ast.field) {
            auto p = *ast.field;
            if (p < 2 || p > linalg::kMaxModulus || !linalg::is_prime(static_cast<std::uint64_t>(p)))
                throw ParseError(ParseError::Kind::BadModulus, field_pos_,
                                 "field modulus " + std::to_string(p) + " is not a prime below 2^31");
        }
        if (!ast.vertices)
            throw ParseError(ParseError::Kind::MissingStatement, close, "missing 'vertices' statement");
        if (*ast.vertices < 0)
            throw ParseError(ParseError::Kind::SyntaxError, close, "vertex count must be >= 0");
        std::set<std::string> names;
        for (std::size_t k = 0; k < ast.arrows.size(); ++k) {
            const auto& d = ast.arrows[k];
            if (!names.insert(d.name).second)
                throw ParseError(ParseError::Kind::DuplicateArrow, d.pos,
                                 "arrow '" + d.name + "' declared twice");
            if (d.source < 1 || d.source > *ast.vertices)
                throw ParseError(ParseError::Kind::UnknownVertex, endpoint_pos_[k].first,
                                 "vertex " + std::to_string(d.source) + " not in 1.." +
                                     std::to_string(*ast.vertices));
            if (d.target < 1 || d.target > *ast.vertices)
                throw ParseError(ParseError::Kind::UnknownVertex, endpoint_pos_[k].second,
                                 "vertex " + std::to_string(d.target) + " not in 1.." +
                                     std::to_string(*ast.vertices));
        }
    }

    Lexer lex_;
    Token cur_;
    SourcePos field_pos_;
    std::vector<std::pair<SourcePos, SourcePos>> endpoint_pos_;
};

}  // namespace

PresentationAst parse_presentation(std::string_view text)
{
    return Parser(text).parse();
}

std::string pretty_print(const PresentationAst& ast)
{
    std::ostringstream os;
    os << "algebra " << ast.name << " {\n";
    if (ast.field)
        os << "  field = " << *ast.field << ";\n";
    if (ast.vertices)
        os << "  vertices = " << *ast.vertices << ";\n";
    if (ast.max_length)
        os << "  max_length = " << *ast.max_length << ";\n";
    os << "  arrows {\n";
    for (const auto& a : ast.arrows)
        os << "    " << a.name << ": " << a.source << " -> " << a.target << ";\n";
    os << "  }\n  relations {\n";
    for (const auto& r : ast.relations) {
        os << "    ";
        for (std::size_t k = 0; k < r.terms.size(); ++k) {
            const auto& t = r.terms[k];
            if (k)
                os << (t.negated ? " - " : " + ");
            else if (t.negated)
                os << "-";
            if (t.coeff)
                os << *t.coeff << "*";
            for (std::size_t j = 0; j < t.arrows.size(); ++j)
                os << (j ? "*" : "") << t.arrows[j];
        }
        os << ";\n";
    }
    os << "  }\n}\n";
    return os.str();
}

Presentation build_presentation(const PresentationAst& ast,
                                std::optional<std::uint32_t> modulus_override)
{
    using quiver::ArrowId;
    std::uint32_t p = modulus_override
                          ? *modulus_override
                          : static_cast<std::uint32_t>(ast.field.value_or(linalg::kDefaultModulus));
    if (!linalg::is_prime(p) || p > linalg::kMaxModulus)
        throw ParseError(ParseError::Kind::BadModulus, {}, "field modulus " + std::to_string(p) +
                                                               " is not a prime below 2^31");
    linalg::Field field(p);

    std::vector<quiver::Arrow> arrows;
    std::map<std::string, ArrowId> ids;
    for (const auto& d : ast.arrows) {
        ids.emplace(d.name, static_cast<ArrowId>(arrows.size()));
        arrows.push_back({d.name, static_cast<int>(d.source - 1), static_cast<int>(d.target - 1)});
    }
    quiver::Quiver q(static_cast<int>(ast.vertices.value_or(0)), std::move(arrows));

    std::vector<quiver::Relation> rels;
    for (const auto& r : ast.relations) {
        quiver::Relation rel;
        std::optional<std::pair<int, int>> ends;
        for (const auto& t : r.terms) {
            std::vector<ArrowId> path;
            for (const auto& name : t.arrows) {
                auto it = ids.find(name);
                if (it == ids.end())
                    throw ParseError(ParseError::Kind::UnknownArrow, t.pos,
                                     "unknown arrow '" + name + "'");
                path.push_back(it->second);
            }
            if (path.size() < 2)
                throw ParseError(ParseError::Kind::BadRelation, t.pos,
                                 "relation paths must have length >= 2");
            auto made = quiver::make_path(q, path);
            if (!made)
                throw ParseError(ParseError::Kind::BadRelation, t.pos,
                                 "arrows in this path do not compose");
            if (ends && (ends->first != made->source || ends->second != made->target))
                throw ParseError(ParseError::Kind::BadRelation, t.pos,
                                 "path is not parallel to the first path of the relation");
            ends = std::pair{made->source, made->target};
            linalg::Scalar c = field.reduce(t.coeff.value_or(1));
            if (t.negated)
                c = field.neg(c);
            rel.terms.push_back({c, *made});
        }
        rels.push_back(std::move(rel));
    }
    return {ast.name, std::move(q), std::move(rels), field,
            static_cast<int>(ast.max_length.value_or(quiver::kDefaultMaxLength))};
}

quiver::AlgebraPtr compile_presentation(const Presentation& p)
{
    return quiver::Algebra::compile(p.quiver, p.relations, p.field, p.max_length, p.name);
}

quiver::AlgebraPtr load_algebra(std::string_view text, std::optional<std::uint32_t> modulus_override)
{
    return compile_presentation(build_presentation(parse_presentation(text), modulus_override));
}

PresentationAst to_ast(const quiver::Algebra& a)
{
    PresentationAst ast;
    ast.name = a.name();
    ast.field = a.field().modulus();
    ast.vertices = a.num_vertices();
    if (a.max_length() != quiver::kDefaultMaxLength)
        ast.max_length = a.max_length();
    for (const auto& arr : a.quiver().arrows())
        ast.arrows.push_back({arr.name, arr.source + 1, arr.target + 1, {}});
    for (const auto& r : a.relations()) {
        RelationAst rel;
        for (const auto& t : r.terms) {
            TermAst term;
            if (t.coeff != 1)
                term.coeff = t.coeff;
            for (auto id : t.path.arrows)
                term.arrows.push_back(a.quiver().arrow(id).name);
            rel.terms.push_back(std::move(term));
        }
        ast.relations.push_back(std::move(rel));
    }
    return ast;
}

}  // namespace qalg::dsl
