/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/transform.hpp"

#include "aodesign/codegen.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace aodesign {

NameSet AodModel::aspect_classes() const {
    NameSet set;
    for (const auto &a : aspects) set.insert(a.source_class);
    return set;
}

std::optional<MessageRecord> enclosing_join_point(const MessageRecord &m, std::span<const MessageRecord> diagram_rows) {
    auto self = std::find_if(diagram_rows.begin(), diagram_rows.end(),
                             [&](const MessageRecord &r) { return r.xmi_id == m.xmi_id; });
    for (auto it = std::make_reverse_iterator(self); it != diagram_rows.rend(); ++it)
        if (it->receiver_object == m.sender_object) return *it;
    return std::nullopt;
}

namespace {

bool is_body_row(const MessageRecord &handler, const MessageRecord &row, const NameSet &aspects) {
    return row.is_call() && row.sender_object == handler.receiver_object && handler.seq.encloses(row.seq) &&
           !aspects.contains(row.receiver_class);
}

void append_unique(std::vector<BodyCall> &calls, const BodyCall &c) {
    if (std::find(calls.begin(), calls.end(), c) == calls.end()) calls.push_back(c);
}

using AdviceKey = std::tuple<std::string, std::string, std::string, std::string, AdviceKind>;

AdviceKey key_of(const AdviceSpec &a) {
    return {name_key(a.aspect_class), name_key(a.operation), name_key(a.pointcut_class),
            name_key(a.pointcut_operation), a.kind};
}

}  // namespace

std::optional<AdviceSpec> derive_advice(const MessageRecord &m, std::span<const MessageRecord> diagram_rows,
                                        const NameSet &aspects, const TransformOptions &options) {
    auto jp = enclosing_join_point(m, diagram_rows);
    if (!jp || aspects.contains(jp->receiver_class)) return std::nullopt;

    AdviceSpec advice;
    advice.aspect_class = m.receiver_class;
    advice.operation = m.name;
    advice.kind = options.advice_kind;
    advice.pointcut_class = jp->receiver_class;
    advice.pointcut_operation = jp->name;
    advice.guard = m.guard;
    for (const auto &row : diagram_rows)
        if (is_body_row(m, row, aspects)) append_unique(advice.body_calls, {row.receiver_class, row.name, row.guard, row.args});
    return advice;
}

AodModel transform_model(const MessageTable &table, const AspectCandidateSet &candidates,
                         const TransformOptions &options, Diagnostics &diags) {
    AodModel out;
    const NameSet &aspects = candidates.classes;
    if (aspects.empty()) {
        out.base_messages = table;
        return out;
    }

    auto classes = table.classes();
    if (!classes.empty() &&
        std::all_of(classes.begin(), classes.end(), [&](const std::string &c) { return aspects.contains(c); }))
        throw TransformError("every class in the model is an aspect candidate; no base class is left to anchor "
                             "pointcuts");

    for (const auto &c : aspects.names()) {
        if (table.woven.contains(c)) continue;
        bool received = std::any_of(table.rows.begin(), table.rows.end(), [&](const MessageRecord &r) {
            return r.is_call() && name_key(r.receiver_class) == name_key(c);
        });
        if (!received)
            throw InternalError("aspect candidate '" + c + "' receives no call in this model; candidates were "
                                "computed against a different table");
    }

    std::set<std::string> removed;
    std::set<std::string> absorbed;
    std::map<AdviceKey, AdviceSpec> merged;

    for (const auto &diagram : table.diagrams()) {
        auto rows = table.rows_in(diagram);
        for (const auto &r : rows) {
            if (!aspects.contains(r.receiver_class)) continue;
            if (!r.is_call() || aspects.contains(r.sender_class)) {
                removed.insert(r.xmi_id);
                continue;
            }
            auto advice = derive_advice(r, rows, aspects, options);
            if (!advice) {
                diags.push_back({Severity::warning,
                                 "call '" + r.label() + "' into aspect '" + r.receiver_class + "' in diagram '" +
                                     diagram + "' has no enclosing join point; left in the base model",
                                 {}});
                out.unanchored.push_back(r.xmi_id);
                continue;
            }
            removed.insert(r.xmi_id);
            for (const auto &row : rows)
                if (is_body_row(r, row, aspects)) absorbed.insert(row.xmi_id);

            auto [it, fresh] = merged.try_emplace(key_of(*advice), *advice);
            if (!fresh)
                for (const auto &call : advice->body_calls) append_unique(it->second.body_calls, call);
        }
    }

    out.base_messages.woven = table.woven;
    for (const auto &c : aspects.names()) out.base_messages.woven.insert(c);
    for (const auto &r : table.rows) {
        if (removed.count(r.xmi_id)) out.removed_rows.push_back(r);
        else if (absorbed.count(r.xmi_id)) out.absorbed_rows.push_back(r);
        else out.base_messages.rows.push_back(r);
    }

    std::map<std::string, AspectSpec> by_name;
    for (const auto &c : aspects.names()) {
        std::vector<AdviceSpec> advices;
        for (const auto &[key, advice] : merged)
            if (std::get<0>(key) == name_key(c)) advices.push_back(advice);
        if (advices.empty()) {
            if (!table.woven.contains(c))
                diags.push_back({Severity::warning, "aspect candidate '" + c + "' yields no advice", {}});
            continue;
        }
        auto name = mangle_type_name(c);
        if (by_name.count(name))
            throw NamingError("aspect classes '" + by_name[name].source_class + "' and '" + c +
                              "' both map to the name '" + name + "'");
        by_name.emplace(name, AspectSpec{name, c, std::move(advices)});
    }
    for (auto &[name, spec] : by_name) out.aspects.push_back(std::move(spec));
    return out;
}

}  // namespace aodesign
