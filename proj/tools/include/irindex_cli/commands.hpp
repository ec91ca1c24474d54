#pragma once

#include <cstdint>
#include <exception>
#include <string>

#include <nlohmann/json.hpp>

namespace irindex::cli {

using Json = nlohmann::ordered_json;

// Every command returns one structured report. The human form is rendered
// from it afterwards; nothing in a report depends on the clock unless
// timing is added by the caller.

Json cmd_decompose(const std::string& text, std::uint64_t seed = 42);
Json cmd_basechange(const std::string& text, const std::string& descriptor);
Json cmd_dual(const std::string& text);
Json cmd_abelian(const std::string& text, std::uint64_t max_order = 64);
Json cmd_selftest(const std::string& scope, std::uint64_t seed, std::uint64_t max_order = 64);

/// 0 when the report's verdict passes, 1 otherwise.
int exit_code(const Json& report);

/// Report for a failed command; `code` receives 2 (input) or 3 (size cap).
Json error_report(const std::string& command, const std::exception& e, int& code);

std::string render_human(const Json& report);

}  // namespace irindex::cli
