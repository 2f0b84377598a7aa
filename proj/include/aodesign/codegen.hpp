/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "aodesign/concerns.hpp"
#include "aodesign/model.hpp"
#include "aodesign/transform.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aodesign {

/// "home page" -> "HomePage". Splits on anything that is not an ASCII letter
/// or digit and capitalizes each fragment. Idempotent. Throws NamingError
/// when nothing survives.
std::string mangle_type_name(std::string_view raw);

/// "block user" -> "blockUser"; like mangle_type_name with a lower-case head.
std::string mangle_member_name(std::string_view raw);

enum class UnitKind { aspect, klass };

const char *to_string(UnitKind k);

struct GeneratedUnit {
    std::string file_name;
    UnitKind kind = UnitKind::klass;
    std::string text;

    /// Relative output path: aspects/<file> or classes/<file>.
    std::string relative_path() const;

    friend bool operator==(const GeneratedUnit &, const GeneratedUnit &) = default;
};

struct CodegenOptions {
    std::string aspect_extension = ".aj";
    std::string class_extension = ".java";
};

/// AspectJ source for one aspect: a named execution pointcut and an advice
/// per AdviceSpec, a private method per intercepted operation and a boolean
/// placeholder per guard.
GeneratedUnit generate_aspect(const AspectSpec &spec, const CodegenOptions &options = {});

/// Class skeleton whose methods are the distinct call messages the class
/// receives. Returns nullopt for actors and non-functional classes.
std::optional<GeneratedUnit> generate_class(std::string_view class_name, const MessageTable &table,
                                            const ConcernMap &concerns, const CodegenOptions &options = {});

/// Every aspect of the AOD model plus every functional, non-actor class of
/// the original table, aspects first, each group sorted by file name.
/// Throws NamingError when two units would share a file name.
std::vector<GeneratedUnit> generate_units(const MessageTable &ood, const AodModel &aod, const ConcernMap &concerns,
                                          const CodegenOptions &options = {});

std::string sha256_hex(std::string_view data);

}  // namespace aodesign
