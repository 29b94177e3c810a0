// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#ifndef TECHLENS_DATA_DIR
#error "TECHLENS_DATA_DIR must be defined by the build"
#endif

namespace testsupport {

inline std::string data_dir() { return TECHLENS_DATA_DIR; }

inline std::string fixture_path(const std::string& name) {
    return data_dir() + "/fixtures/" + name;
}

inline std::string http_fixture_dir() { return data_dir() + "/fixtures/http"; }

inline std::string demo_dict_path() { return data_dir() + "/demo_dictionary.csv"; }

/// Self-cleaning unique directory under the system temp root.
class TempDir {
public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        std::mt19937_64 rng(std::random_device{}());
        for (int i = 0; i < 64; ++i) {
            auto candidate = base / ("techlens_test_" + std::to_string(rng()));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("could not create a temp directory");
    }

    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string str(const std::string& name = "") const {
        return name.empty() ? path_.string() : (path_ / name).string();
    }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

/// Temporarily sets (or clears, with nullptr) an environment variable.
class EnvGuard {
public:
    EnvGuard(const char* name, const char* value) : name_(name) {
        const char* old = std::getenv(name);
        had_old_ = old != nullptr;
        if (had_old_) old_ = old;
        if (value)
            ::setenv(name, value, 1);
        else
            ::unsetenv(name);
    }

    ~EnvGuard() {
        if (had_old_)
            ::setenv(name_.c_str(), old_.c_str(), 1);
        else
            ::unsetenv(name_.c_str());
    }

private:
    std::string name_;
    std::string old_;
    bool had_old_;
};

#ifdef TECHLENS_CLI_PATH
/// Runs the CLI through the shell; returns its exit code. `env_prefix` is
/// prepended verbatim (e.g. "TECHLENS_OFFLINE=1").
inline int run_cli(const std::string& args, const std::string& env_prefix = "",
                   const std::string& capture_file = "") {
    std::string cmd = env_prefix.empty() ? "" : env_prefix + " ";
    cmd += std::string(TECHLENS_CLI_PATH) + " " + args;
    if (capture_file.empty())
        cmd += " >/dev/null 2>&1";
    else
        cmd += " >" + capture_file + " 2>&1";
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}
#endif

}  // namespace testsupport
