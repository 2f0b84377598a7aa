/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "aodesign/model.hpp"
#include "aodesign/names.hpp"
#include "aodesign/transform.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aodesign {

struct Participant {
    std::string object;
    std::string klass;

    friend auto operator<=>(const Participant &, const Participant &) = default;
};

/// Dashed edge from an aspect participant to the participant whose execution
/// it advises.
struct CrosscutLink {
    Participant aspect;
    Participant advised;
    std::string label;

    friend auto operator<=>(const CrosscutLink &, const CrosscutLink &) = default;
};

struct DiagramView {
    std::string name;
    std::vector<Participant> participants;
    std::vector<MessageRecord> messages;  // diagram order
    std::vector<CrosscutLink> crosscuts;
};

/// One node per participant, labelled "object:Class" and sorted by class then
/// object; one edge per message in message order. Participants of aspect
/// classes are filled red.
std::string to_dot(const DiagramView &view, const NameSet &aspects);
std::string to_dot(std::string_view diagram, std::span<const MessageRecord> rows, const NameSet &aspects);

DiagramView ood_view(const MessageTable &table, std::string_view diagram);

/// Base messages of the diagram after transformation. Participants are those
/// of the original diagram, so aspects remain visible; each removed call
/// with advice becomes a crosscut link.
DiagramView aod_view(const MessageTable &ood, const AodModel &aod, std::string_view diagram);

/// File stem for a diagram, e.g. "cheque service" -> "cheque_service".
std::string diagram_file_stem(std::string_view diagram);

}  // namespace aodesign
