/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "aodesign/diagnostics.hpp"

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aodesign::xmi {

/// One UML:Message element. Tagged values are kept verbatim, including
/// surrounding whitespace (EA writes e.g. "monitoring " for ea_sourceName).
struct RawMessage {
    std::string xmi_id;
    std::string name;
    std::string sender_id;
    std::string receiver_id;
    std::map<std::string, std::string> tagged;
    SourceLocation location;

    std::optional<std::string> tag(std::string_view key) const;

    friend bool operator==(const RawMessage &, const RawMessage &) = default;
};

/// An interaction participant (EA exports ClassifierRole or Object elements).
struct RawObject {
    std::string name;
    std::string classifier_id;

    friend bool operator==(const RawObject &, const RawObject &) = default;
};

struct RawClassifier {
    std::string name;
    std::string element;  // local element name: Class, Actor, Interface, ...

    friend bool operator==(const RawClassifier &, const RawClassifier &) = default;
};

struct RawDiagram {
    std::string xmi_id;
    std::string name;

    friend bool operator==(const RawDiagram &, const RawDiagram &) = default;
};

struct RawModel {
    std::vector<RawMessage> messages;            // document order
    std::map<std::string, RawObject> objects;    // by xmi.id
    std::map<std::string, RawClassifier> classifiers;
    std::vector<RawDiagram> diagrams;            // document order
    Diagnostics diagnostics;

    const RawDiagram *find_diagram(std::string_view id) const;

    friend bool operator==(const RawModel &, const RawModel &) = default;
};

/// Single-pass SAX parse of an Enterprise Architect XMI 1.1 export.
///
/// Elements are matched by local name, so any namespace prefix is accepted.
/// Throws XmlParseError on malformed XML and UnsupportedFormatError when the
/// root is not an XMI 1.1 document. Duplicate xmi.id values are reported as
/// diagnostics; the first occurrence is kept.
RawModel parse_xmi(std::istream &in);
RawModel parse_xmi(std::string_view document);
RawModel parse_xmi_file(const std::string &path);

inline constexpr std::string_view kUnresolved = "\xC2\xABunresolved\xC2\xBB";  // «unresolved»

struct Participants {
    std::string message_id;
    std::string sender_object;
    std::string sender_class;
    std::string receiver_object;
    std::string receiver_class;

    friend bool operator==(const Participants &, const Participants &) = default;
};

/// Joins message endpoints to object and class names. The object table wins;
/// ea_sourceName / ea_targetName tags are the fallback. Failures yield the
/// kUnresolved placeholder plus one diagnostic per message.
std::vector<Participants> resolve_participants(const RawModel &raw, Diagnostics &diags);

}  // namespace aodesign::xmi
