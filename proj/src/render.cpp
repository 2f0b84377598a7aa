/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace aodesign {

namespace {

std::string quote(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + '"';
}

std::string node_id(const Participant &p) { return quote(p.object + ":" + p.klass); }

std::vector<Participant> participants_of(std::span<const MessageRecord> rows) {
    std::set<Participant> set;
    for (const auto &r : rows) {
        set.insert({r.sender_object, r.sender_class});
        set.insert({r.receiver_object, r.receiver_class});
    }
    return {set.begin(), set.end()};
}

bool participant_less(const Participant &a, const Participant &b) {
    auto ka = std::make_pair(name_key(a.klass), a.object);
    auto kb = std::make_pair(name_key(b.klass), b.object);
    return ka < kb;
}

}  // namespace

std::string to_dot(const DiagramView &view, const NameSet &aspects) {
    auto participants = view.participants;
    std::sort(participants.begin(), participants.end(), participant_less);
    participants.erase(std::unique(participants.begin(), participants.end()), participants.end());

    std::ostringstream os;
    os << "digraph " << quote(view.name) << " {\n";
    os << "  graph [label=" << quote(view.name) << ", labelloc=t];\n";
    os << "  node [shape=box, fontname=\"Helvetica\"];\n";
    os << "  edge [fontname=\"Helvetica\", fontsize=10];\n";
    for (const auto &p : participants) {
        os << "  " << node_id(p) << " [label=" << quote(p.object + ":" + p.klass);
        if (aspects.contains(p.klass)) os << ", style=filled, fillcolor=red";
        os << "];\n";
    }
    for (const auto &m : view.messages)
        os << "  " << node_id({m.sender_object, m.sender_class}) << " -> "
           << node_id({m.receiver_object, m.receiver_class}) << " [label=" << quote(m.label()) << "];\n";
    for (const auto &c : view.crosscuts)
        os << "  " << node_id(c.aspect) << " -> " << node_id(c.advised) << " [label=" << quote(c.label)
           << ", style=dashed, color=red];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(std::string_view diagram, std::span<const MessageRecord> rows, const NameSet &aspects) {
    DiagramView view{std::string(diagram), participants_of(rows), {rows.begin(), rows.end()}, {}};
    return to_dot(view, aspects);
}

DiagramView ood_view(const MessageTable &table, std::string_view diagram) {
    auto rows = table.rows_in(diagram);
    return {std::string(diagram), participants_of(rows), rows, {}};
}

DiagramView aod_view(const MessageTable &ood, const AodModel &aod, std::string_view diagram) {
    DiagramView view;
    view.name = std::string(diagram);
    view.participants = participants_of(ood.rows_in(diagram));
    view.messages = aod.base_messages.rows_in(diagram);

    auto aspects = aod.aspect_classes();
    std::set<CrosscutLink> links;
    for (const auto &r : aod.removed_rows) {
        if (r.diagram != diagram || !r.is_call() || !aspects.contains(r.receiver_class) ||
            aspects.contains(r.sender_class))
            continue;
        for (const auto &spec : aod.aspects) {
            if (name_key(spec.source_class) != name_key(r.receiver_class)) continue;
            for (const auto &a : spec.advices)
                if (name_key(a.operation) == name_key(r.name)) {
                    links.insert({{r.receiver_object, r.receiver_class},
                                  {r.sender_object, r.sender_class},
                                  "<<" + std::string(to_string(a.kind)) + ">> " + r.name});
                    break;
                }
        }
    }
    view.crosscuts.assign(links.begin(), links.end());
    return view;
}

std::string diagram_file_stem(std::string_view diagram) {
    std::string out;
    for (char c : trim(diagram)) {
        bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                    c == '.';
        out += keep ? c : '_';
    }
    return out.empty() ? std::string("diagram") : out;
}

}  // namespace aodesign
