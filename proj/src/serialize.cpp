/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/serialize.hpp"

namespace aodesign {

namespace {

template <typename T>
ordered_json optional_json(const std::optional<T> &v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json rows_json(const std::vector<MessageRecord> &rows) {
    auto out = ordered_json::array();
    for (const auto &r : rows) out.push_back(to_json(r));
    return out;
}

}  // namespace

ordered_json to_json(const MessageRecord &r) {
    ordered_json j;
    j["message_name"] = r.name;
    j["object_sender"] = r.sender_object;
    j["class_sender"] = r.sender_class;
    j["sender_concern"] = to_string(r.sender_concern);
    j["object_receiver"] = r.receiver_object;
    j["class_receiver"] = r.receiver_class;
    j["receiver_concern"] = to_string(r.receiver_concern);
    j["message_sequence"] = r.label();
    j["diagram_name"] = r.diagram;
    j["repetition"] = optional_json(r.repetition);
    j["xmi_id"] = r.xmi_id;
    j["seq"] = r.seq.to_string();
    j["seqno"] = optional_json(r.seqno);
    j["guard"] = optional_json(r.guard);
    j["assignment"] = optional_json(r.assignment);
    j["args"] = r.args;
    j["synchronicity"] = to_string(r.synchronicity);
    j["kind"] = to_string(r.kind);
    return j;
}

ordered_json to_json(const MessageTable &table) {
    ordered_json j;
    j["rows"] = rows_json(table.rows);
    j["woven"] = table.woven.names();
    return j;
}

ordered_json to_json(const AspectCandidateSet &candidates) {
    ordered_json j;
    j["threshold"] = candidates.threshold;
    auto list = ordered_json::array();
    for (const auto &c : candidates.sorted()) {
        ordered_json entry;
        entry["class"] = c;
        auto evidence = ordered_json::array();
        for (const auto &e : candidates.evidence.at(c))
            evidence.push_back(ordered_json{{"message", e.key.message_name}, {"count", e.count}});
        entry["evidence"] = std::move(evidence);
        list.push_back(std::move(entry));
    }
    j["candidates"] = std::move(list);
    return j;
}

ordered_json to_json(const RepetitionCounts &counts) {
    auto out = ordered_json::array();
    for (const auto &[key, count] : counts)
        out.push_back(ordered_json{{"message", key.message_name}, {"class", key.receiver_class}, {"count", count}});
    return out;
}

ordered_json to_json(const AdviceSpec &a) {
    ordered_json j;
    j["aspect_class"] = a.aspect_class;
    j["operation"] = a.operation;
    j["kind"] = to_string(a.kind);
    j["pointcut"] = ordered_json{{"class", a.pointcut_class}, {"operation", a.pointcut_operation}};
    j["guard"] = optional_json(a.guard);
    auto calls = ordered_json::array();
    for (const auto &c : a.body_calls)
        calls.push_back(ordered_json{{"class", c.target_class}, {"operation", c.operation}, {"guard", optional_json(c.guard)}, {"args", c.args}});
    j["body_calls"] = std::move(calls);
    return j;
}

ordered_json to_json(const AodModel &aod) {
    ordered_json j;
    auto aspects = ordered_json::array();
    for (const auto &spec : aod.aspects) {
        ordered_json a;
        a["name"] = spec.name;
        a["source_class"] = spec.source_class;
        auto advices = ordered_json::array();
        for (const auto &adv : spec.advices) advices.push_back(to_json(adv));
        a["advices"] = std::move(advices);
        aspects.push_back(std::move(a));
    }
    j["aspects"] = std::move(aspects);
    j["base_messages"] = to_json(aod.base_messages);
    j["removed_rows"] = rows_json(aod.removed_rows);
    j["absorbed_rows"] = rows_json(aod.absorbed_rows);
    j["unanchored"] = aod.unanchored;
    return j;
}

ordered_json to_json(const CouplingReport &report) {
    ordered_json j;
    j["mode"] = report.mode == CouplingMode::distinct_classes ? "distinct" : "messages";
    auto classes = ordered_json::array();
    for (const auto &[c, before] : report.ood) {
        ordered_json entry;
        entry["class"] = c;
        entry["ood"] = ordered_json{{"fan_in", before.fan_in}, {"fan_out", before.fan_out}};
        const auto &after = report.aod.at(c);
        entry["aod"] = ordered_json{{"fan_in", after.fan_in}, {"fan_out", after.fan_out}};
        entry["aspect"] = report.aspects.count(c) != 0;
        classes.push_back(std::move(entry));
    }
    j["classes"] = std::move(classes);
    auto aspects = ordered_json::array();
    for (const auto &[name, a] : report.aspects)
        aspects.push_back(ordered_json{
            {"class", name}, {"advised_classes", a.advised_classes}, {"called_classes", a.called_classes}});
    j["aspects"] = std::move(aspects);
    j["totals"] = ordered_json{{"ood", report.ood_total}, {"aod", report.aod_total}};
    j["delta"] = report.delta;
    return j;
}

ordered_json manifest_json(const std::vector<GeneratedUnit> &units) {
    auto list = ordered_json::array();
    for (const auto &u : units)
        list.push_back(ordered_json{{"path", u.relative_path()}, {"kind", to_string(u.kind)}, {"sha256", sha256_hex(u.text)}});
    return ordered_json{{"units", std::move(list)}};
}

ordered_json to_json(const Diagnostics &diags) {
    auto out = ordered_json::array();
    for (const auto &d : diags) {
        ordered_json j;
        j["severity"] = to_string(d.severity);
        j["message"] = d.message;
        if (d.location.line != 0) j["location"] = ordered_json{{"line", d.location.line}, {"column", d.location.column}};
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace aodesign
