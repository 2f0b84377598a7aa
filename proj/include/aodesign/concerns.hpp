/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "aodesign/names.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace aodesign {

enum class ConcernType { functional, non_functional };

const char *to_string(ConcernType c);
std::optional<ConcernType> parse_concern_type(std::string_view text);

/// Classification of classes into functional / non-functional concerns.
/// Lookups are by name_key (trimmed, case-folded).
class ConcernMap {
public:
    ConcernMap() = default;

    /// Throws ConfigError when the class is already mapped.
    void add(std::string_view class_name, ConcernType type);
    void add_actor(std::string_view class_name) { actors_.insert(class_name); }
    void set_default(ConcernType type) { default_ = type; }

    ConcernType default_type() const { return default_; }
    bool is_mapped(std::string_view class_name) const;
    bool is_actor(std::string_view class_name) const { return actors_.contains(class_name); }
    const NameSet &actors() const { return actors_; }

    /// key -> (display spelling, type)
    const std::map<std::string, std::pair<std::string, ConcernType>> &entries() const { return entries_; }

private:
    std::map<std::string, std::pair<std::string, ConcernType>> entries_;
    NameSet actors_;
    ConcernType default_ = ConcernType::functional;
};

ConcernType classify(std::string_view class_name, const ConcernMap &map);

enum class AdviceKind { before, after, around };

const char *to_string(AdviceKind k);

enum class CouplingMode { distinct_classes, message_count };

/// The pipeline configuration file. JSON document:
///
///   {
///     "concerns":    { "<class>": "functional" | "non-functional", ... },
///     "actors":      [ "<class>", ... ],
///     "threshold":   <integer >= 1>,                 default 3
///     "advice_kind": "before" | "after" | "around",  default "before"
///     "coupling":    "distinct" | "messages"         default "distinct"
///   }
///
/// Every key is optional; unknown keys and duplicate keys are rejected.
struct Config {
    ConcernMap concerns;
    int threshold = 3;
    AdviceKind advice_kind = AdviceKind::before;
    CouplingMode coupling = CouplingMode::distinct_classes;
};

Config load_config(std::string_view document);
Config load_config_file(const std::string &path);

ConcernMap load_concern_map(std::string_view document);

}  // namespace aodesign
