/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "aodesign/concerns.hpp"
#include "aodesign/diagnostics.hpp"
#include "aodesign/names.hpp"
#include "aodesign/xmi.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aodesign {

/// Dotted message number such as 4.2.1. Ordered lexicographically by
/// component, so a prefix precedes its extensions.
class SequenceExpr {
public:
    SequenceExpr() = default;
    explicit SequenceExpr(std::vector<std::uint32_t> components);

    /// Throws LabelParseError unless text is a dotted list of positive integers.
    static SequenceExpr parse(std::string_view text);
    static std::optional<SequenceExpr> try_parse(std::string_view text);

    const std::vector<std::uint32_t> &components() const { return components_; }
    std::size_t depth() const { return components_.size(); }
    bool empty() const { return components_.empty(); }

    /// True when this is a proper prefix of other (other is nested under this).
    bool encloses(const SequenceExpr &other) const;

    std::string to_string() const;

    friend std::strong_ordering operator<=>(const SequenceExpr &, const SequenceExpr &) = default;
    friend bool operator==(const SequenceExpr &, const SequenceExpr &) = default;

private:
    std::vector<std::uint32_t> components_;
};

std::strong_ordering compare_seq(const SequenceExpr &a, const SequenceExpr &b);

/// A parsed communication-diagram label: `SEQ: [guard]:assign= name(args)`.
struct MessageLabel {
    SequenceExpr seq;
    std::optional<std::string> guard;
    std::optional<std::string> assignment;
    std::string name;
    std::vector<std::string> args;

    std::string to_string() const;

    friend bool operator==(const MessageLabel &, const MessageLabel &) = default;
};

MessageLabel parse_label(std::string_view text);

enum class Synchronicity { synchronous, asynchronous, unknown };
enum class MessageKind { call, other };

const char *to_string(Synchronicity s);
const char *to_string(MessageKind k);

/// One row of the message table.
struct MessageRecord {
    std::string xmi_id;
    std::string name;
    std::string sender_object;
    std::string sender_class;
    ConcernType sender_concern = ConcernType::functional;
    std::string receiver_object;
    std::string receiver_class;
    ConcernType receiver_concern = ConcernType::functional;
    SequenceExpr seq;
    std::optional<long> seqno;
    std::optional<std::string> guard;
    std::optional<std::string> assignment;
    std::vector<std::string> args;
    Synchronicity synchronicity = Synchronicity::unknown;
    MessageKind kind = MessageKind::call;
    std::string diagram;
    std::optional<long> repetition;

    bool is_call() const { return kind == MessageKind::call; }

    /// The label as `seq: [guard]:assign= name(args)`.
    std::string label() const;

    friend bool operator==(const MessageRecord &, const MessageRecord &) = default;
};

inline constexpr std::string_view kUnassignedDiagram = "unassigned";

/// Rows grouped by diagram; each group in message order. `woven` lists the
/// classes that an earlier transformation already turned into aspects.
struct MessageTable {
    std::vector<MessageRecord> rows;
    NameSet woven;

    /// Diagram names in table order.
    std::vector<std::string> diagrams() const;
    std::vector<MessageRecord> rows_in(std::string_view diagram) const;

    /// Classes named as sender or receiver, in canonical order.
    std::vector<std::string> classes() const;

    bool empty() const { return rows.empty(); }

    friend bool operator==(const MessageTable &, const MessageTable &) = default;
};

/// Builds the message table from a parsed model. Within a diagram rows are
/// ordered by seqno when every row has one, otherwise by dotted sequence.
/// Label/sequence disagreements and unparseable labels become diagnostics.
MessageTable build_message_table(const xmi::RawModel &raw, const ConcernMap &concerns, Diagnostics &diags);

/// Sorts the rows of one diagram into message order. Rows whose order keys
/// tie are reported and broken by xmi id.
void order_diagram_rows(std::vector<MessageRecord> &rows, Diagnostics &diags);

/// Fixed column headings of the plain-text and JSON table.
inline constexpr std::string_view kTableColumns[] = {
    "Message Name",   "Object Sender", "Class Sender",    "Concern Type",  "Object Receiver",
    "Class Receiver", "Concern Type",  "Message Sequence", "Diagram Name", "Repetition"};

/// Aligned plain-text rendering with kTableColumns as header.
std::string table_to_text(const MessageTable &table);

}  // namespace aodesign
