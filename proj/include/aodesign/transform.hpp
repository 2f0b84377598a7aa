/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "aodesign/concerns.hpp"
#include "aodesign/crosscut.hpp"
#include "aodesign/diagnostics.hpp"
#include "aodesign/model.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aodesign {

/// A call issued by the aspect while it handles the intercepted message.
struct BodyCall {
    std::string target_class;
    std::string operation;
    std::optional<std::string> guard;
    std::vector<std::string> args;

    friend bool operator==(const BodyCall &, const BodyCall &) = default;
};

struct AdviceSpec {
    std::string aspect_class;
    std::string operation;  // intercepted message name
    AdviceKind kind = AdviceKind::before;
    std::string pointcut_class;
    std::string pointcut_operation;
    std::optional<std::string> guard;
    std::vector<BodyCall> body_calls;

    friend bool operator==(const AdviceSpec &, const AdviceSpec &) = default;
};

struct AspectSpec {
    std::string name;          // mangled type name
    std::string source_class;  // class as named in the model
    std::vector<AdviceSpec> advices;

    friend bool operator==(const AspectSpec &, const AspectSpec &) = default;
};

struct AodModel {
    MessageTable base_messages;
    std::vector<AspectSpec> aspects;             // sorted by name
    std::vector<MessageRecord> removed_rows;     // rows that targeted an aspect
    std::vector<MessageRecord> absorbed_rows;    // aspect-issued rows moved into advice bodies
    std::vector<std::string> unanchored;         // xmi ids of crosscutting rows left in place

    NameSet aspect_classes() const;
};

struct TransformOptions {
    AdviceKind advice_kind = AdviceKind::before;
};

/// Latest row strictly before `m` (in diagram order) that was received by
/// m's sender object, i.e. the execution during which `m` was sent.
std::optional<MessageRecord> enclosing_join_point(const MessageRecord &m, std::span<const MessageRecord> diagram_rows);

/// Builds the advice for a crosscutting row. Body calls are the rows sent by
/// m's receiver object whose sequence is nested under m's, restricted to
/// non-aspect targets. Returns nullopt when m has no enclosing join point.
std::optional<AdviceSpec> derive_advice(const MessageRecord &m, std::span<const MessageRecord> diagram_rows,
                                        const NameSet &aspects, const TransformOptions &options);

/// Rewrites the table into an aspect-oriented design over `candidates`.
///
/// Rows received by a candidate leave the base model; those sent by a
/// non-aspect class contribute advice. Rows the aspect issues while handling
/// an intercepted call move into that advice's body. Everything else is
/// passed through. An empty candidate set is the identity.
///
/// Throws TransformError when every class of a non-empty table is a
/// candidate, and InternalError when a candidate is never the receiver of a
/// call in a table that has not been transformed for it before.
AodModel transform_model(const MessageTable &table, const AspectCandidateSet &candidates,
                         const TransformOptions &options, Diagnostics &diags);

}  // namespace aodesign
