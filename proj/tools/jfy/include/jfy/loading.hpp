#pragma once

#include "jt/frame.hpp"
#include "jt/oracle.hpp"
#include "jt/program.hpp"

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace jfy {

/// A program grounded and lowered together with its resolved open values.
struct Loaded {
    jt::Program ground;
    std::shared_ptr<const jt::Frame> frame;
    jt::OpenAssignment opens;
    std::vector<std::string> unassigned_opens; // printable, ascending
};

/// Grounds over the program's constants plus any constants in `opens` keys.
/// Atoms named in `opens` join the vocabulary even if no rule mentions them.
/// Throws jt::Error (ParseError for bad program text).
Loaded load(std::string_view text, const jt::NamedOpens& opens = {});

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

/// Looks up "p(a)" or "~p(a)" in the frame; throws UnknownFact.
jt::Fact resolve_fact(const jt::Frame& frame, std::string_view name);

/// "FILE:LINE:COL: message" lines (or "LINE:COL: message" without a file).
std::string describe(const jt::ParseError& e, std::string_view file = {});

} // namespace jfy
