#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "subshift/word.hpp"

namespace testutil {

// Restores the global capacity cap at scope exit.
struct CapacityGuard {
    std::size_t saved = subshift::capacity_limit();

    CapacityGuard() = default;
    CapacityGuard(const CapacityGuard&) = delete;
    CapacityGuard& operator=(const CapacityGuard&) = delete;
    ~CapacityGuard() { subshift::set_capacity_limit(saved); }
};

struct CommandResult {
    int exit_code = -1;
    std::string output;  // captured stdout
};

// Runs a shell command and captures its stdout; the exit code is the
// command's own, or 128+signal if it died on a signal.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = ::pclose(pipe);
    if (status < 0) throw std::runtime_error("pclose failed for: " + command);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        result.exit_code = 128 + WTERMSIG(status);
    }
    return result;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace testutil
