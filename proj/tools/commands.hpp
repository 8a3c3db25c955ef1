#ifndef FLOWCERT_TOOLS_COMMANDS_HPP
#define FLOWCERT_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "flowcert/graph.hpp"

namespace flowcert::cli {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_input = 2, exit_internal = 3 };

int cmd_dom(const std::string& graph, std::ostream& out, std::ostream& err);
int cmd_lowhigh(const std::string& graph, std::ostream& out, std::ostream& err);
int cmd_validset(const std::string& graph, const std::string& tree, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& graph, const std::string& tree, const std::string& arcset,
               std::ostream& out, std::ostream& err);
int cmd_divergent(const std::string& graph, const std::optional<std::string>& restrict_to,
                  std::ostream& out, std::ostream& err);

struct GenOptions {
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    std::optional<TreeStrategy> tree;
    std::optional<std::uint64_t> tree_seed;
    Format format = Format::edgelist;
    std::optional<std::string> output;
};

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

} // namespace flowcert::cli

#endif
