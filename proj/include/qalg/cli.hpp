#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qalg/algebra.hpp"

namespace qalg::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kUndetermined = 3,
};

/// `3..9`, `3,4,7`, `1,3..5`, `all`, `none`; vertices are 1-based. Returns
/// 0-based ids, sorted and deduplicated. `auto` is handled by the caller.
std::vector<quiver::VertexId> parse_vertex_selector(const std::string& text, int num_vertices);

/// Runs `qalg <args>`; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qalg::cli
