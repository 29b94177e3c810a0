// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "techlens/errors.hpp"

// Run summary shared by the pipeline stages. Each stage records its
// counters into a single flat JSON object; later stages running against the
// same output directory merge into the existing file instead of clobbering
// it. Keys ending in "_ms" are wall-clock timings and are the only values
// expected to differ between otherwise identical runs.

namespace techlens {

class RunReport {
public:
    RunReport() : data_(nlohmann::json::object()) {}

    static RunReport load_or_empty(const std::string& path) {
        RunReport report;
        std::ifstream in(path, std::ios::binary);
        if (!in) return report;
        nlohmann::json parsed = nlohmann::json::parse(in, nullptr, false);
        if (parsed.is_object()) report.data_ = std::move(parsed);
        return report;
    }

    void set(const std::string& key, nlohmann::json value) {
        data_[key] = std::move(value);
    }

    void merge(const nlohmann::json& object) {
        if (!object.is_object()) throw DomainError("report fragments must be objects");
        for (auto it = object.begin(); it != object.end(); ++it) data_[it.key()] = it.value();
    }

    const nlohmann::json& data() const { return data_; }

    void save(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError(path, "cannot open for writing");
        out << data_.dump(2) << '\n';
        if (!out) throw IoError(path, "write failed");
    }

    /// Plain-text rendering, one sorted "key: value" line each.
    std::string render_text() const {
        std::ostringstream out;
        for (auto it = data_.begin(); it != data_.end(); ++it) {
            out << it.key() << ": ";
            if (it.value().is_string())
                out << it.value().get<std::string>();
            else
                out << it.value().dump();
            out << '\n';
        }
        return out.str();
    }

private:
    nlohmann::json data_;
};

/// Milliseconds since construction; feeds the *_ms report keys.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace techlens
