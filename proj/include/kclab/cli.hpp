#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace kclab::cli {

/// Exit codes: 0 success, 1 domain error (message names the failing
/// precondition), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Operation -> hosting subcommand. Each operation is reachable from
/// exactly one subcommand; a coverage test checks this against the leaf
/// commands the parser actually exposes.
struct OperationBinding {
    std::string_view operation;
    std::string_view subcommand;
};

const std::vector<OperationBinding>& operation_registry();

/// Leaf subcommand paths ("encode bij", "dfa run", ...) as built.
std::vector<std::string> leaf_subcommands();

} // namespace kclab::cli
