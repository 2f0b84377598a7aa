/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/xmi.hpp"

#include "aodesign/names.hpp"

#include <expat.h>

#include <array>
#include <cstring>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <variant>

namespace aodesign::xmi {

std::optional<std::string> RawMessage::tag(std::string_view key) const {
    auto it = tagged.find(std::string(key));
    if (it == tagged.end()) return std::nullopt;
    return it->second;
}

const RawDiagram *RawModel::find_diagram(std::string_view id) const {
    for (const auto &d : diagrams)
        if (d.xmi_id == id) return &d;
    return nullptr;
}

namespace {

constexpr std::size_t kChunk = 64 * 1024;

std::string_view local_name(const char *qualified) {
    std::string_view name(qualified);
    auto colon = name.rfind(':');
    return colon == std::string_view::npos ? name : name.substr(colon + 1);
}

const char *attribute(const char **attrs, std::string_view key) {
    for (auto a = attrs; *a != nullptr; a += 2)
        if (key == a[0]) return a[1];
    return nullptr;
}

std::string attribute_or_empty(const char **attrs, std::string_view key) {
    auto v = attribute(attrs, key);
    return v ? std::string(v) : std::string();
}

bool is_classifier_element(std::string_view local) {
    return local == "Class" || local == "Actor" || local == "Interface" || local == "Component";
}

bool is_object_element(std::string_view local) {
    return local == "ClassifierRole" || local == "Object" || local == "Instance";
}

// windows-1252 code points for bytes 0x80..0x9F; -1 marks undefined bytes.
constexpr std::array<int, 32> kCp1252High = {
    0x20AC, -1,     0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021, 0x02C6, 0x2030, 0x0160,
    0x2039, 0x0152, -1,     0x017D, -1,     -1,     0x2018, 0x2019, 0x201C, 0x201D, 0x2022,
    0x2013, 0x2014, 0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, -1,     0x017E, 0x0178};

// EA writes encoding="windows-1252" by default, which expat does not know.
int XMLCALL unknown_encoding(void *, const XML_Char *name, XML_Encoding *info) {
    auto enc = casefold(name);
    if (enc != "windows-1252" && enc != "cp1252") return XML_STATUS_ERROR;
    for (int i = 0; i < 256; ++i) info->map[i] = i;
    for (int i = 0; i < 32; ++i) info->map[0x80 + i] = kCp1252High[static_cast<std::size_t>(i)];
    info->data = nullptr;
    info->convert = nullptr;
    info->release = nullptr;
    return XML_STATUS_OK;
}

struct DeferredTag {
    std::string element_id;
    std::string tag;
    std::string value;
};

class Builder {
public:
    explicit Builder(XML_Parser parser) : parser_(parser) {}

    static void XMLCALL on_start(void *self, const XML_Char *name, const XML_Char **attrs) {
        static_cast<Builder *>(self)->start(name, attrs);
    }
    static void XMLCALL on_end(void *self, const XML_Char *name) { static_cast<Builder *>(self)->end(name); }

    RawModel finish() {
        if (!saw_root_)
            throw UnsupportedFormatError("document has no XMI root element");
        apply_deferred();
        return std::move(model_);
    }

    void rethrow_if_failed() const {
        if (failure_) std::rethrow_exception(failure_);
    }

private:
    enum class Kind { other, skipped, message, object, classifier, diagram };

    struct Frame {
        Kind kind;
        std::string id;
    };

    SourceLocation here() const {
        return {static_cast<std::size_t>(XML_GetCurrentLineNumber(parser_)),
                static_cast<std::size_t>(XML_GetCurrentColumnNumber(parser_)) + 1};
    }

    void fail(std::exception_ptr e) {
        failure_ = std::move(e);
        XML_StopParser(parser_, XML_FALSE);
    }

    void diag(Severity s, std::string msg) { model_.diagnostics.push_back({s, std::move(msg), here()}); }

    bool claim_id(const std::string &id, std::string_view element) {
        if (id.empty()) return true;
        if (seen_ids_.insert(id).second) return true;
        diag(Severity::warning,
             "duplicate xmi.id '" + id + "' on " + std::string(element) + "; keeping the first occurrence");
        return false;
    }

    void check_root(std::string_view local, const char **attrs) {
        saw_root_ = true;
        if (local != "XMI") {
            fail(std::make_exception_ptr(
                UnsupportedFormatError("root element <" + std::string(local) + "> is not an XMI document")));
            return;
        }
        if (auto v = attribute(attrs, "xmi.version")) {
            if (std::string_view(v) != "1.1")
                fail(std::make_exception_ptr(UnsupportedFormatError(
                    "XMI version " + std::string(v) + " is not supported; expected an XMI 1.1 export")));
            return;
        }
        std::string version = attribute_or_empty(attrs, "xmi:version");
        if (version.empty()) version = attribute_or_empty(attrs, "version");
        fail(std::make_exception_ptr(UnsupportedFormatError(
            version.empty() ? std::string("XMI root carries no xmi.version attribute")
                            : "XMI version " + version + " is not supported; expected an XMI 1.1 export")));
    }

    void start(const char *qname, const char **attrs) {
        auto local = local_name(qname);
        if (!saw_root_) {
            check_root(local, attrs);
            stack_.push_back({Kind::other, {}});
            return;
        }

        Frame frame{Kind::other, {}};
        if (local == "Message") {
            frame = start_message(attrs);
        } else if (local == "TaggedValue") {
            tagged_value(attrs);
        } else if (is_object_element(local)) {
            frame = start_object(local, attrs);
        } else if (is_classifier_element(local)) {
            frame = start_classifier(local, attrs);
        } else if (local == "Diagram") {
            frame = start_diagram(attrs);
        }
        stack_.push_back(std::move(frame));
    }

    void end(const char *) {
        if (stack_.empty()) return;
        if (stack_.back().kind == Kind::message && current_) {
            model_.messages.push_back(std::move(*current_));
            current_.reset();
        }
        stack_.pop_back();
    }

    Frame start_message(const char **attrs) {
        auto id = attribute_or_empty(attrs, "xmi.id");
        if (id.empty()) {
            diag(Severity::error, "UML:Message without xmi.id ignored");
            return {Kind::skipped, {}};
        }
        if (!claim_id(id, "Message")) return {Kind::skipped, id};
        RawMessage m;
        m.xmi_id = id;
        m.name = attribute_or_empty(attrs, "name");
        m.sender_id = attribute_or_empty(attrs, "sender");
        m.receiver_id = attribute_or_empty(attrs, "receiver");
        m.location = here();
        current_ = std::move(m);
        return {Kind::message, std::move(id)};
    }

    Frame start_object(std::string_view local, const char **attrs) {
        auto id = attribute_or_empty(attrs, "xmi.id");
        if (id.empty()) return {Kind::other, {}};
        if (!claim_id(id, local)) return {Kind::skipped, id};
        RawObject obj;
        obj.name = attribute_or_empty(attrs, "name");
        // ClassifierRole.base is an IDREFS list; the first entry is the classifier.
        std::string base = attribute_or_empty(attrs, "base");
        if (base.empty()) base = attribute_or_empty(attrs, "classifier");
        std::istringstream(base) >> obj.classifier_id;
        model_.objects.emplace(id, std::move(obj));
        return {Kind::object, std::move(id)};
    }

    Frame start_classifier(std::string_view local, const char **attrs) {
        auto id = attribute_or_empty(attrs, "xmi.id");
        if (id.empty()) return {Kind::other, {}};
        if (!claim_id(id, local)) return {Kind::skipped, id};
        model_.classifiers.emplace(id, RawClassifier{attribute_or_empty(attrs, "name"), std::string(local)});
        return {Kind::classifier, std::move(id)};
    }

    Frame start_diagram(const char **attrs) {
        auto id = attribute_or_empty(attrs, "xmi.id");
        if (id.empty()) return {Kind::other, {}};
        if (!claim_id(id, "Diagram")) return {Kind::skipped, id};
        model_.diagrams.push_back({id, attribute_or_empty(attrs, "name")});
        return {Kind::diagram, std::move(id)};
    }

    void tagged_value(const char **attrs) {
        auto tag = attribute(attrs, "tag");
        if (tag == nullptr) return;
        std::string value = attribute_or_empty(attrs, "value");

        for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
            switch (it->kind) {
                case Kind::message:
                    if (current_) current_->tagged.try_emplace(tag, std::move(value));
                    return;
                case Kind::object:
                    if (std::string_view(tag) == "classifier") {
                        auto &obj = model_.objects.at(it->id);
                        if (obj.classifier_id.empty()) obj.classifier_id = trim(value);
                    }
                    return;
                case Kind::skipped:
                case Kind::classifier:
                case Kind::diagram:
                    return;
                case Kind::other:
                    break;
            }
        }
        // Free-standing tagged values name their owner explicitly.
        if (auto owner = attribute(attrs, "modelElement"))
            deferred_.push_back({owner, tag, std::move(value)});
    }

    void apply_deferred() {
        if (deferred_.empty()) return;
        std::map<std::string, RawMessage *> by_id;
        for (auto &m : model_.messages) by_id.emplace(m.xmi_id, &m);
        for (auto &d : deferred_) {
            auto it = by_id.find(d.element_id);
            if (it != by_id.end()) it->second->tagged.try_emplace(d.tag, d.value);
        }
    }

    XML_Parser parser_;
    RawModel model_;
    std::vector<Frame> stack_;
    std::optional<RawMessage> current_;
    std::set<std::string> seen_ids_;
    std::vector<DeferredTag> deferred_;
    bool saw_root_ = false;
    std::exception_ptr failure_;
};

struct ParserDeleter {
    void operator()(XML_Parser p) const { XML_ParserFree(p); }
};

}  // namespace

RawModel parse_xmi(std::istream &in) {
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser(XML_ParserCreate(nullptr));
    if (!parser) throw std::bad_alloc();

    Builder builder(parser.get());
    XML_SetUserData(parser.get(), &builder);
    XML_SetElementHandler(parser.get(), &Builder::on_start, &Builder::on_end);
    XML_SetUnknownEncodingHandler(parser.get(), &unknown_encoding, nullptr);

    bool done = false;
    while (!done) {
        void *buffer = XML_GetBuffer(parser.get(), static_cast<int>(kChunk));
        if (buffer == nullptr) throw std::bad_alloc();
        in.read(static_cast<char *>(buffer), static_cast<std::streamsize>(kChunk));
        auto got = in.gcount();
        done = got < static_cast<std::streamsize>(kChunk);
        if (XML_ParseBuffer(parser.get(), static_cast<int>(got), done ? XML_TRUE : XML_FALSE) != XML_STATUS_OK) {
            builder.rethrow_if_failed();
            SourceLocation where{static_cast<std::size_t>(XML_GetCurrentLineNumber(parser.get())),
                                 static_cast<std::size_t>(XML_GetCurrentColumnNumber(parser.get())) + 1};
            throw XmlParseError(XML_ErrorString(XML_GetErrorCode(parser.get())), where);
        }
    }
    builder.rethrow_if_failed();
    return builder.finish();
}

RawModel parse_xmi(std::string_view document) {
    std::istringstream in{std::string(document)};
    return parse_xmi(in);
}

RawModel parse_xmi_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UserError("cannot open '" + path + "'");
    return parse_xmi(in);
}

namespace {

struct Endpoint {
    std::string object;
    std::string klass;
};

std::optional<std::string> class_of(const RawModel &raw, const RawObject &obj) {
    auto it = raw.classifiers.find(obj.classifier_id);
    if (it == raw.classifiers.end()) return std::nullopt;
    return trim(it->second.name);
}

std::optional<std::string> class_by_object_name(const RawModel &raw, const std::string &object) {
    for (const auto &[id, obj] : raw.objects)
        if (trim(obj.name) == object)
            if (auto c = class_of(raw, obj)) return c;
    return std::nullopt;
}

Endpoint resolve_endpoint(const RawModel &raw, const RawMessage &m, const std::string &id, const char *name_tag,
                          const char *role, std::vector<std::string> &issues) {
    if (auto it = raw.objects.find(id); it != raw.objects.end()) {
        Endpoint e{trim(it->second.name), std::string(kUnresolved)};
        if (auto c = class_of(raw, it->second)) {
            e.klass = *c;
        } else {
            issues.push_back(std::string(role) + " object '" + e.object + "' has no resolvable classifier");
        }
        return e;
    }

    auto tagged = m.tag(name_tag);
    auto name = tagged ? trim(*tagged) : std::string();
    if (name.empty()) {
        issues.push_back(std::string(role) + " '" + id + "' is not in the object table and carries no " + name_tag);
        return {std::string(kUnresolved), std::string(kUnresolved)};
    }
    issues.push_back(std::string(role) + " '" + id + "' resolved through " + name_tag);
    Endpoint e{name, std::string(kUnresolved)};
    if (auto c = class_by_object_name(raw, name)) e.klass = *c;
    return e;
}

}  // namespace

std::vector<Participants> resolve_participants(const RawModel &raw, Diagnostics &diags) {
    std::vector<Participants> out;
    out.reserve(raw.messages.size());
    for (const auto &m : raw.messages) {
        std::vector<std::string> issues;
        auto sender = resolve_endpoint(raw, m, m.sender_id, "ea_sourceName", "sender", issues);
        auto receiver = resolve_endpoint(raw, m, m.receiver_id, "ea_targetName", "receiver", issues);
        if (!issues.empty()) {
            bool placeholder = sender.object == kUnresolved || sender.klass == kUnresolved ||
                               receiver.object == kUnresolved || receiver.klass == kUnresolved;
            std::string text = "message '" + m.name + "' (" + m.xmi_id + "): ";
            for (std::size_t i = 0; i < issues.size(); ++i) text += (i ? "; " : "") + issues[i];
            diags.push_back({placeholder ? Severity::error : Severity::warning, std::move(text), m.location});
        }
        out.push_back({m.xmi_id, std::move(sender.object), std::move(sender.klass), std::move(receiver.object),
                       std::move(receiver.klass)});
    }
    return out;
}

}  // namespace aodesign::xmi
