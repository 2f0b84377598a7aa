/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/metrics.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace aodesign {

namespace {

// Other endpoint of each call row touching `class_name` on the given side.
long count_partners(std::string_view class_name, std::span<const MessageRecord> rows, CouplingMode mode,
                    bool outgoing) {
    auto self = name_key(class_name);
    std::set<std::string> partners;
    long messages = 0;
    for (const auto &r : rows) {
        if (!r.is_call()) continue;
        auto from = name_key(r.sender_class);
        auto to = name_key(r.receiver_class);
        if (from == to) continue;
        if ((outgoing ? from : to) != self) continue;
        partners.insert(outgoing ? to : from);
        ++messages;
    }
    return mode == CouplingMode::distinct_classes ? static_cast<long>(partners.size()) : messages;
}

}  // namespace

long fan_out(std::string_view class_name, std::span<const MessageRecord> rows, CouplingMode mode) {
    return count_partners(class_name, rows, mode, true);
}

long fan_in(std::string_view class_name, std::span<const MessageRecord> rows, CouplingMode mode) {
    return count_partners(class_name, rows, mode, false);
}

std::vector<MessageRecord> base_class_rows(const AodModel &aod) {
    auto aspects = aod.base_messages.woven;
    for (const auto &a : aod.aspects) aspects.insert(a.source_class);
    std::vector<MessageRecord> rows;
    std::copy_if(aod.base_messages.rows.begin(), aod.base_messages.rows.end(), std::back_inserter(rows),
                 [&](const MessageRecord &r) {
                     return !aspects.contains(r.sender_class) && !aspects.contains(r.receiver_class);
                 });
    return rows;
}

CouplingReport coupling_report(const MessageTable &ood, const AodModel &aod, CouplingMode mode) {
    CouplingReport report;
    report.mode = mode;

    auto aspects = aod.base_messages.woven;
    for (const auto &a : aod.aspects) aspects.insert(a.source_class);
    auto base_rows = base_class_rows(aod);

    for (const auto &c : ood.classes()) {
        Coupling before{fan_in(c, ood.rows, mode), fan_out(c, ood.rows, mode)};
        report.ood[c] = before;
        report.ood_total += before.fan_out;
        if (aspects.contains(c)) {
            report.aod[c] = {};
            continue;
        }
        Coupling after{fan_in(c, base_rows, mode), fan_out(c, base_rows, mode)};
        report.aod[c] = after;
        report.aod_total += after.fan_out;
    }

    for (const auto &spec : aod.aspects) {
        NameSet advised, called;
        for (const auto &a : spec.advices) {
            advised.insert(a.pointcut_class);
            for (const auto &b : a.body_calls) called.insert(b.target_class);
        }
        for (const auto &r : aod.base_messages.rows)
            if (name_key(r.sender_class) == name_key(spec.source_class) && r.is_call() &&
                name_key(r.receiver_class) != name_key(spec.source_class))
                called.insert(r.receiver_class);
        report.aspects[spec.source_class] = {static_cast<long>(advised.size()), static_cast<long>(called.size())};
    }

    report.delta = report.ood_total - report.aod_total;
    return report;
}

std::string report_to_text(const CouplingReport &report) {
    std::size_t width = std::string_view("Class").size();
    for (const auto &[c, v] : report.ood) width = std::max(width, c.size());

    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "Class" << "  OOD fan-in  OOD fan-out  AOD fan-in  AOD fan-out\n";
    os << std::string(width, '-') << "  ----------  -----------  ----------  -----------\n";
    for (const auto &[c, before] : report.ood) {
        const auto &after = report.aod.at(c);
        bool aspect = report.aspects.count(c) != 0;
        os << std::left << std::setw(static_cast<int>(width)) << c << std::right << "  " << std::setw(10)
           << before.fan_in << "  " << std::setw(11) << before.fan_out << "  ";
        if (aspect) os << std::setw(10) << "aspect" << "  " << std::setw(11) << "aspect";
        else os << std::setw(10) << after.fan_in << "  " << std::setw(11) << after.fan_out;
        os << '\n';
    }
    os << '\n'
       << "coupling (" << (report.mode == CouplingMode::distinct_classes ? "distinct class pairs" : "messages")
       << "): OOD " << report.ood_total << ", AOD " << report.aod_total << ", delta " << report.delta << '\n';
    if (!report.aspects.empty()) {
        os << "aspects:\n";
        for (const auto &[name, a] : report.aspects)
            os << "  " << name << ": advises " << a.advised_classes << " class(es), calls " << a.called_classes
               << " class(es)\n";
    }
    return os.str();
}

}  // namespace aodesign
