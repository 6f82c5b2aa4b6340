#ifndef ORDTOP_CLI_HPP
#define ORDTOP_CLI_HPP

#include <json.hpp>

#include <map>
#include <string>

namespace ordtop {

/// A validated batch request: one command, named JSON input documents and
/// string options.  The front-end fills it from files or stdin; dispatch
/// checks the schema before touching any module.
struct Manifest {
    std::string command;
    std::map<std::string, nlohmann::json> inputs;
    std::map<std::string, std::string> options;
};

// 0 success, 1 validation error, 2 mathematical refusal (capacity exceeded,
// UNKNOWN verdict, homotopy refusal), 3 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRefusal = 2;
inline constexpr int kExitInternal = 3;

struct DispatchResult {
    int exit_code = kExitOk;
    nlohmann::json document;
};

/// Routes the manifest to its module operation and renders the JSON result.
/// Never throws; errors are encoded in the exit code and document.
DispatchResult dispatch(const Manifest& manifest);

} // namespace ordtop

#endif
