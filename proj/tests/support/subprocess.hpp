// Minimal popen wrapper for driving the CLI binary from tests.

#ifndef SANCAP_TESTS_SUBPROCESS_HPP
#define SANCAP_TESTS_SUBPROCESS_HPP

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace sancap_tests {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace sancap_tests

#endif
