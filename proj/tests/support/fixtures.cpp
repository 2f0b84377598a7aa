/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "support/fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace aodesign::testing {

std::string fixture_path(const std::string &name) { return std::string(AODESIGN_FIXTURES) + "/" + name; }

std::string golden_path(const std::string &name) { return std::string(AODESIGN_GOLDEN) + "/" + name; }

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LoadedFixture load_fixture(const std::string &xmi_name, const std::string &config_name) {
    LoadedFixture f;
    f.raw = xmi::parse_xmi_file(fixture_path(xmi_name));
    f.config = load_config_file(fixture_path(config_name));
    f.table = build_message_table(f.raw, f.config.concerns, f.diagnostics);
    return f;
}

MessageTable only_diagram(const MessageTable &table, const std::string &diagram) {
    MessageTable out;
    out.rows = table.rows_in(diagram);
    out.woven = table.woven;
    return out;
}

AodModel aspectize(const MessageTable &table, const ConcernMap &concerns, int threshold, Diagnostics &diags) {
    auto candidates = detect_aspect_candidates(repetition_counts(table), concerns, threshold);
    return transform_model(table, candidates, {}, diags);
}

ScratchDir::ScratchDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("aodesign-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
}

ScratchDir::~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

std::vector<std::string> list_files(const std::filesystem::path &root) {
    std::vector<std::string> out;
    for (const auto &e : std::filesystem::recursive_directory_iterator(root))
        if (e.is_regular_file()) out.push_back(std::filesystem::relative(e.path(), root).generic_string());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace aodesign::testing
