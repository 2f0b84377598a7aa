/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/model.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <regex>
#include <sstream>

namespace aodesign {

SequenceExpr::SequenceExpr(std::vector<std::uint32_t> components) : components_(std::move(components)) {}

std::optional<SequenceExpr> SequenceExpr::try_parse(std::string_view text) {
    auto t = trim(text);
    if (t.empty()) return std::nullopt;
    std::vector<std::uint32_t> parts;
    std::size_t pos = 0;
    while (true) {
        auto dot = t.find('.', pos);
        auto piece = std::string_view(t).substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        std::uint32_t value = 0;
        auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || end != piece.data() + piece.size() || value == 0)
            return std::nullopt;
        parts.push_back(value);
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return SequenceExpr(std::move(parts));
}

SequenceExpr SequenceExpr::parse(std::string_view text) {
    auto seq = try_parse(text);
    if (!seq) throw LabelParseError(std::string(text));
    return *seq;
}

bool SequenceExpr::encloses(const SequenceExpr &other) const {
    return components_.size() < other.components_.size() &&
           std::equal(components_.begin(), components_.end(), other.components_.begin());
}

std::string SequenceExpr::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(components_[i]);
    }
    return out;
}

std::strong_ordering compare_seq(const SequenceExpr &a, const SequenceExpr &b) { return a <=> b; }

std::string MessageLabel::to_string() const {
    std::string out = seq.to_string() + ": ";
    if (guard) out += "[" + *guard + "]:";
    if (assignment) out += *assignment + "= ";
    out += name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i];
    return out + ")";
}

namespace {

std::vector<std::string> split_args(const std::string &text) {
    std::vector<std::string> args;
    if (trim(text).empty()) return args;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            args.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    args.push_back(trim(current));
    return args;
}

std::optional<std::string> non_empty(std::string text) {
    text = trim(text);
    if (text.empty()) return std::nullopt;
    return text;
}

}  // namespace

MessageLabel parse_label(std::string_view text) {
    // SEQ ':' WS? ('[' GUARD ']' ':')? (IDENT '=' WS?)? NAME '(' ARGS? ')'
    static const std::regex grammar(
        R"(^\s*([0-9]+(?:\.[0-9]+)*)\s*:\s*(?:\[([^\]]*)\]\s*:\s*)?(?:([A-Za-z_][A-Za-z0-9_]*)\s*=\s*)?([^()=\[\]]+)\((.*)\)\s*$)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, grammar)) throw LabelParseError(s);

    MessageLabel label;
    auto seq = SequenceExpr::try_parse(m[1].str());
    auto name = trim(m[4].str());
    if (!seq || name.empty()) throw LabelParseError(s);
    label.seq = std::move(*seq);
    if (m[2].matched) label.guard = non_empty(m[2].str());
    if (m[3].matched) label.assignment = m[3].str();
    label.name = std::move(name);
    label.args = split_args(m[5].str());
    return label;
}

const char *to_string(Synchronicity s) {
    switch (s) {
        case Synchronicity::synchronous: return "synchronous";
        case Synchronicity::asynchronous: return "asynchronous";
        case Synchronicity::unknown: return "unknown";
    }
    return "unknown";
}

const char *to_string(MessageKind k) { return k == MessageKind::call ? "call" : "other"; }

std::string MessageRecord::label() const {
    return MessageLabel{seq, guard, assignment, name, args}.to_string();
}

std::vector<std::string> MessageTable::diagrams() const {
    std::vector<std::string> out;
    for (const auto &r : rows)
        if (std::find(out.begin(), out.end(), r.diagram) == out.end()) out.push_back(r.diagram);
    return out;
}

std::vector<MessageRecord> MessageTable::rows_in(std::string_view diagram) const {
    std::vector<MessageRecord> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [&](const MessageRecord &r) { return r.diagram == diagram; });
    return out;
}

std::vector<std::string> MessageTable::classes() const {
    NameSet set;
    for (const auto &r : rows) {
        set.insert(r.sender_class);
        set.insert(r.receiver_class);
    }
    return set.names();
}

void order_diagram_rows(std::vector<MessageRecord> &rows, Diagnostics &diags) {
    bool by_seqno = !rows.empty() && std::all_of(rows.begin(), rows.end(),
                                                 [](const MessageRecord &r) { return r.seqno.has_value(); });
    auto key_less = [by_seqno](const MessageRecord &a, const MessageRecord &b) {
        if (by_seqno && *a.seqno != *b.seqno) return *a.seqno < *b.seqno;
        return a.seq < b.seq;
    };
    std::sort(rows.begin(), rows.end(), [&](const MessageRecord &a, const MessageRecord &b) {
        if (key_less(a, b)) return true;
        if (key_less(b, a)) return false;
        return a.xmi_id < b.xmi_id;
    });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!key_less(rows[i - 1], rows[i]))
            diags.push_back({Severity::warning,
                             "messages '" + rows[i - 1].name + "' and '" + rows[i].name + "' in diagram '" +
                                 rows[i].diagram + "' share the order key " +
                                 (by_seqno ? "seqno " + std::to_string(*rows[i].seqno) : rows[i].seq.to_string()) +
                                 "; ordered by xmi id",
                             {}});
    }
}

namespace {

std::optional<long> parse_seqno(const xmi::RawMessage &m, Diagnostics &diags) {
    auto text = m.tag("seqno");
    if (!text) return std::nullopt;
    auto t = trim(*text);
    long value = 0;
    auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || end != t.data() + t.size()) {
        diags.push_back({Severity::warning, "message '" + m.name + "' has non-numeric seqno '" + *text + "'",
                         m.location});
        return std::nullopt;
    }
    return value;
}

std::string diagram_name(const xmi::RawModel &raw, const xmi::RawMessage &m, Diagnostics &diags) {
    auto id = m.tag("diagram");
    if (!id || trim(*id).empty()) {
        diags.push_back({Severity::warning,
                         "message '" + m.name + "' names no diagram; assigned to '" +
                             std::string(kUnassignedDiagram) + "'",
                         m.location});
        return std::string(kUnassignedDiagram);
    }
    if (auto d = raw.find_diagram(trim(*id))) return d->name;
    diags.push_back({Severity::warning,
                     "message '" + m.name + "' references undeclared diagram '" + trim(*id) + "'", m.location});
    return trim(*id);
}

Synchronicity synchronicity_of(const xmi::RawMessage &m) {
    auto v = name_key(m.tag("privatedata1").value_or(""));
    if (v == "synchronous") return Synchronicity::synchronous;
    if (v == "asynchronous") return Synchronicity::asynchronous;
    return Synchronicity::unknown;
}

}  // namespace

MessageTable build_message_table(const xmi::RawModel &raw, const ConcernMap &concerns, Diagnostics &diags) {
    auto participants = xmi::resolve_participants(raw, diags);

    std::map<std::string, std::vector<MessageRecord>> by_diagram;
    for (std::size_t i = 0; i < raw.messages.size(); ++i) {
        const auto &m = raw.messages[i];
        const auto &p = participants[i];

        MessageRecord r;
        r.xmi_id = m.xmi_id;
        r.sender_object = p.sender_object;
        r.sender_class = p.sender_class;
        r.receiver_object = p.receiver_object;
        r.receiver_class = p.receiver_class;
        r.sender_concern = classify(r.sender_class, concerns);
        r.receiver_concern = classify(r.receiver_class, concerns);
        r.seqno = parse_seqno(m, diags);
        r.synchronicity = synchronicity_of(m);
        r.kind = name_key(m.tag("privatedata3").value_or("")) == "call" ? MessageKind::call : MessageKind::other;
        r.diagram = diagram_name(raw, m, diags);

        auto dotted = m.tag("privatedata4");
        auto dotted_seq = dotted ? SequenceExpr::try_parse(*dotted) : std::nullopt;

        std::optional<MessageLabel> label;
        if (auto lt = m.tag("lt")) {
            try {
                label = parse_label(*lt);
            } catch (const LabelParseError &e) {
                diags.push_back({Severity::warning, std::string(e.what()) + "; using message attributes",
                                 m.location});
            }
        }

        if (label) {
            if (dotted_seq && *dotted_seq != label->seq)
                diags.push_back({Severity::warning,
                                 "message '" + label->name + "': label sequence " + label->seq.to_string() +
                                     " differs from privatedata4 " + dotted_seq->to_string() + "; using the label",
                                 m.location});
            r.seq = std::move(label->seq);
            r.guard = std::move(label->guard);
            r.assignment = std::move(label->assignment);
            r.name = std::move(label->name);
            r.args = std::move(label->args);
        } else if (dotted_seq) {
            r.seq = std::move(*dotted_seq);
            r.name = trim(m.name);
            r.guard = non_empty(m.tag("conditional").value_or(""));
        } else {
            diags.push_back({Severity::error,
                             "message '" + m.name + "' (" + m.xmi_id + ") has no usable sequence number; dropped",
                             m.location});
            continue;
        }
        if (r.name.empty()) r.name = trim(m.name);
        by_diagram[r.diagram].push_back(std::move(r));
    }

    // Declared diagrams in document order, then undeclared ones by name,
    // then the synthetic bucket.
    std::vector<std::string> order;
    for (const auto &d : raw.diagrams)
        if (by_diagram.count(d.name) && std::find(order.begin(), order.end(), d.name) == order.end())
            order.push_back(d.name);
    for (const auto &[name, rows] : by_diagram)
        if (name != kUnassignedDiagram && std::find(order.begin(), order.end(), name) == order.end())
            order.push_back(name);
    if (by_diagram.count(std::string(kUnassignedDiagram))) order.emplace_back(kUnassignedDiagram);

    MessageTable table;
    for (const auto &name : order) {
        auto &rows = by_diagram[name];
        order_diagram_rows(rows, diags);
        std::move(rows.begin(), rows.end(), std::back_inserter(table.rows));
    }
    return table;
}

std::string table_to_text(const MessageTable &table) {
    auto concern = [](ConcernType c) {
        return std::string(c == ConcernType::functional ? "functional requirement" : "non functional requirement");
    };
    constexpr std::size_t kColumns = std::size(kTableColumns);
    std::vector<std::array<std::string, kColumns>> cells;
    std::array<std::string, kColumns> header;
    for (std::size_t c = 0; c < kColumns; ++c) header[c] = std::string(kTableColumns[c]);
    cells.push_back(header);
    for (const auto &r : table.rows)
        cells.push_back({r.name, r.sender_object, r.sender_class, concern(r.sender_concern), r.receiver_object,
                         r.receiver_class, concern(r.receiver_concern), r.label(), r.diagram,
                         r.repetition ? std::to_string(*r.repetition) : std::string()});

    std::array<std::size_t, kColumns> width{};
    for (const auto &row : cells)
        for (std::size_t c = 0; c < kColumns; ++c) width[c] = std::max(width[c], row[c].size());

    std::ostringstream os;
    auto emit = [&](const std::array<std::string, kColumns> &row) {
        std::string line;
        for (std::size_t c = 0; c < kColumns; ++c) {
            line += row[c];
            if (c + 1 < kColumns) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << '\n';
    };
    emit(cells.front());
    std::string rule;
    for (std::size_t c = 0; c < kColumns; ++c) rule += std::string(width[c], '-') + (c + 1 < kColumns ? "  " : "");
    os << rule << '\n';
    for (std::size_t i = 1; i < cells.size(); ++i) emit(cells[i]);
    return os.str();
}

}  // namespace aodesign
