/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "aodesign/concerns.hpp"
#include "aodesign/model.hpp"
#include "aodesign/transform.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>

namespace aodesign {

// Coupling counts call rows only and ignores self-calls. In the default mode a
// class pair counts once however many messages it exchanges; message_count
// weights each pair by its number of messages.
long fan_out(std::string_view class_name, std::span<const MessageRecord> rows,
             CouplingMode mode = CouplingMode::distinct_classes);
long fan_in(std::string_view class_name, std::span<const MessageRecord> rows,
            CouplingMode mode = CouplingMode::distinct_classes);

inline long fan_out(std::string_view class_name, const MessageTable &table,
                    CouplingMode mode = CouplingMode::distinct_classes) {
    return fan_out(class_name, table.rows, mode);
}
inline long fan_in(std::string_view class_name, const MessageTable &table,
                   CouplingMode mode = CouplingMode::distinct_classes) {
    return fan_in(class_name, table.rows, mode);
}

struct Coupling {
    long fan_in = 0;
    long fan_out = 0;

    friend bool operator==(const Coupling &, const Coupling &) = default;
};

/// Coupling an aspect keeps without explicit links: the classes it advises
/// and the classes its advice bodies or remaining messages call.
struct AspectCoupling {
    long advised_classes = 0;
    long called_classes = 0;
};

struct CouplingReport {
    CouplingMode mode = CouplingMode::distinct_classes;
    std::map<std::string, Coupling> ood;  // by class display name
    std::map<std::string, Coupling> aod;  // aspects report 0/0 here
    std::map<std::string, AspectCoupling> aspects;
    long ood_total = 0;
    long aod_total = 0;
    long delta = 0;  // ood_total - aod_total
};

/// Rows of the AOD base model that connect two non-aspect classes.
std::vector<MessageRecord> base_class_rows(const AodModel &aod);

CouplingReport coupling_report(const MessageTable &ood, const AodModel &aod,
                               CouplingMode mode = CouplingMode::distinct_classes);

std::string report_to_text(const CouplingReport &report);

}  // namespace aodesign
