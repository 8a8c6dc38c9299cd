#pragma once

// Runs the CLI binary and captures stdout + exit code. POSIX-only, which
// is fine for this test suite.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace proc {

struct Result {
    int exit_code = -1;
    std::string stdout_text;
};

inline Result run(const std::string& command) {
    Result r;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        r.stdout_text.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

/// Path of the CLI binary, provided by CTest through the environment.
inline std::string cli_path() {
    const char* p = std::getenv("QUBOFORGE_CLI");
    if (!p) throw std::runtime_error("QUBOFORGE_CLI is not set; run through ctest");
    return p;
}

/// Directory with the shipped fixtures.
inline std::string data_dir() {
    const char* p = std::getenv("QUBOFORGE_DATA");
    if (!p) throw std::runtime_error("QUBOFORGE_DATA is not set; run through ctest");
    return p;
}

}  // namespace proc
