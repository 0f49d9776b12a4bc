#include <cctype>

#include "qalg/dsl.hpp"

namespace qalg::dsl {

namespace {

class SpecParser {
public:
    SpecParser(std::string_view text, const quiver::Algebra& a) : s_(text), alg_(a) {}

    ModuleSpec parse()
    {
        std::vector<ModuleSpec> parts;
        parts.push_back(atom());
        skip();
        while (i_ < s_.size() && s_[i_] == '+') {
            ++i_;
            parts.push_back(atom());
            skip();
        }
        if (i_ != s_.size())
            unknown("trailing input");
        if (parts.size() == 1)
            return parts.front();
        ModuleSpec sum;
        sum.kind = ModuleSpec::Kind::Sum;
        sum.summands = std::move(parts);
        return sum;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    [[noreturn]] void unknown(const std::string& why)
    {
        throw ModuleSpecError(ModuleSpecError::Kind::UnknownForm, i_,
                              "module spec: " + why + " at offset " + std::to_string(i_) +
                                  " (forms: P(i), S(i), A, rand(seed,size), sums with '+')");
    }
    std::string word()
    {
        skip();
        std::string w;
        while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_])))
            w += s_[i_++];
        return w;
    }
    void expect(char c)
    {
        skip();
        if (i_ >= s_.size() || s_[i_] != c)
            unknown(std::string("expected '") + c + "'");
        ++i_;
    }
    std::uint64_t number()
    {
        skip();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            unknown("expected a number");
        std::uint64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            if (v > (1ull << 60))
                unknown("number too large");
            v = v * 10 + static_cast<std::uint64_t>(s_[i_++] - '0');
        }
        return v;
    }

    ModuleSpec atom()
    {
        std::size_t start = i_;
        std::string w = word();
        ModuleSpec spec;
        if (w == "P" || w == "S") {
            expect('(');
            std::size_t at = i_;
            std::uint64_t v = number();
            expect(')');
            if (v < 1 || v > static_cast<std::uint64_t>(alg_.num_vertices()))
                throw ModuleSpecError(ModuleSpecError::Kind::VertexOutOfRange, at,
                                      "module spec: vertex " + std::to_string(v) + " not in 1.." +
                                          std::to_string(alg_.num_vertices()));
            spec.kind = w == "P" ? ModuleSpec::Kind::Projective : ModuleSpec::Kind::Simple;
            spec.vertex = static_cast<quiver::VertexId>(v - 1);
        } else if (w == "A") {
            spec.kind = ModuleSpec::Kind::Regular;
        } else if (w == "rand") {
            expect('(');
            spec.seed = number();
            expect(',');
            spec.budget = static_cast<std::size_t>(number());
            expect(')');
            spec.kind = ModuleSpec::Kind::Random;
        } else {
            i_ = start;
            unknown(w.empty() ? "expected a module form" : "unknown form '" + w + "'");
        }
        return spec;
    }

    std::string_view s_;
    const quiver::Algebra& alg_;
    std::size_t i_ = 0;
};

}  // namespace

ModuleSpec parse_module_spec(std::string_view text, const quiver::Algebra& a)
{
    return SpecParser(text, a).parse();
}

std::string to_string(const ModuleSpec& spec)
{
    switch (spec.kind) {
    case ModuleSpec::Kind::Projective: return "P(" + std::to_string(spec.vertex + 1) + ")";
    case ModuleSpec::Kind::Simple: return "S(" + std::to_string(spec.vertex + 1) + ")";
    case ModuleSpec::Kind::Regular: return "A";
    case ModuleSpec::Kind::Random:
        return "rand(" + std::to_string(spec.seed) + "," + std::to_string(spec.budget) + ")";
    case ModuleSpec::Kind::Sum: {
        std::string s;
        for (std::size_t k = 0; k < spec.summands.size(); ++k)
            s += (k ? "+" : "") + to_string(spec.summands[k]);
        return s;
    }
    }
    return "?";
}

}  // namespace qalg::dsl
