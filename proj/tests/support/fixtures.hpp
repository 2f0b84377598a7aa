/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "aodesign/concerns.hpp"
#include "aodesign/crosscut.hpp"
#include "aodesign/model.hpp"
#include "aodesign/transform.hpp"
#include "aodesign/xmi.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace aodesign::testing {

std::string fixture_path(const std::string &name);
std::string golden_path(const std::string &name);
std::string read_file(const std::string &path);

/// An XMI fixture run through parsing and table construction with the
/// shared concerns.json.
struct LoadedFixture {
    xmi::RawModel raw;
    Config config;
    MessageTable table;
    Diagnostics diagnostics;
};

LoadedFixture load_fixture(const std::string &xmi_name, const std::string &config_name = "concerns.json");

/// Rows of one diagram as a stand-alone table.
MessageTable only_diagram(const MessageTable &table, const std::string &diagram);

/// Detects candidates at `threshold` and transforms.
AodModel aspectize(const MessageTable &table, const ConcernMap &concerns, int threshold, Diagnostics &diags);

/// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
public:
    ScratchDir();
    ~ScratchDir();
    ScratchDir(const ScratchDir &) = delete;
    ScratchDir &operator=(const ScratchDir &) = delete;

    const std::filesystem::path &path() const { return path_; }

private:
    std::filesystem::path path_;
};

/// Regular files below `root` as sorted relative paths.
std::vector<std::string> list_files(const std::filesystem::path &root);

}  // namespace aodesign::testing
