#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace clitest {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Scratch directory unique to this process.
inline std::filesystem::path scratch() {
    static const auto dir = [] {
        auto d = std::filesystem::temp_directory_path() / ("ldrs_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

/// Runs the CLI with `args` (already shell-quoted where needed) and an optional environment prefix.
inline Result run(const std::string& args, const std::string& env = "") {
    const auto o = scratch() / "stdout.txt", e = scratch() / "stderr.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" LDRS_CLI_PATH "\" " + args + " >\"" + o.string() +
                            "\" 2>\"" + e.string() + "\"";
    const int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(o);
    r.err = slurp(e);
    return r;
}

/// Value of `key=` in a key=value summary, or empty.
inline std::string field(const std::string& summary, const std::string& key) {
    std::istringstream in(summary);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
    return {};
}

} // namespace clitest
