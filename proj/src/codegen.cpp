/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/codegen.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace aodesign {

namespace {

constexpr std::string_view kAspectHeader =
    "// Generated by aodesign from the aspect-oriented design model. Do not edit.\n\n";
constexpr std::string_view kClassHeader =
    "// Generated by aodesign from the communication diagram model. Do not edit.\n\n";
constexpr std::string_view kIndent = "    ";

const std::set<std::string, std::less<>> kJavaKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",   "case",     "catch",        "char",
    "class",    "const",      "continue",  "default",   "do",     "double",   "else",         "enum",
    "extends",  "final",      "finally",   "float",     "for",    "goto",     "if",           "implements",
    "import",   "instanceof", "int",       "interface", "long",   "native",   "new",          "package",
    "private",  "protected",  "public",    "return",    "short",  "static",   "strictfp",     "super",
    "switch",   "synchronized", "this",    "throw",     "throws", "transient", "try",         "void",
    "volatile", "while",      "true",      "false",     "null",   "aspect",   "pointcut",     "before",
    "after",    "around",     "proceed"};

bool ascii_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

std::vector<std::string> fragments(std::string_view raw) {
    std::vector<std::string> out;
    std::string current;
    for (char c : raw) {
        if (ascii_alnum(c)) {
            current += c;
        } else if (!current.empty()) {
            out.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

std::string finish_identifier(std::string name) {
    if (std::isdigit(static_cast<unsigned char>(name.front()))) name.insert(name.begin(), '_');
    if (kJavaKeywords.count(name)) name += '_';
    return name;
}

std::string mangle(std::string_view raw, bool lower_head) {
    auto parts = fragments(raw);
    if (parts.empty()) throw NamingError("name '" + std::string(raw) + "' has no letters or digits to build an identifier");
    std::string out;
    for (auto &p : parts) {
        p[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(p[0])));
        out += p;
    }
    if (lower_head) out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
    return finish_identifier(std::move(out));
}

bool is_identifier(std::string_view s) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return ascii_alnum(c) || c == '_'; });
}

/// Assigns identifiers to distinct source names; throws on collisions.
class IdentifierTable {
public:
    explicit IdentifierTable(std::string scope) : scope_(std::move(scope)) {}

    // Sources in different namespaces (operations vs. guards) never alias,
    // but their identifiers still must not collide.
    const std::string &add(const std::string &source, bool lower_head, char ns = 'm') {
        auto key = ns + name_key(source);
        if (auto it = by_source_.find(key); it != by_source_.end()) return it->second;
        auto id = mangle(source, lower_head);
        if (auto owner = owners_.find(id); owner != owners_.end())
            throw NamingError("in " + scope_ + ": '" + owner->second + "' and '" + source +
                              "' both map to the identifier '" + id + "'");
        owners_.emplace(id, source);
        return by_source_.emplace(key, id).first->second;
    }

    const std::string &at(const std::string &source, char ns = 'm') const {
        return by_source_.at(ns + name_key(source));
    }

private:
    std::string scope_;
    std::map<std::string, std::string> by_source_;  // namespace + name key -> identifier
    std::map<std::string, std::string> owners_;     // identifier -> source name
};

}  // namespace

std::string mangle_type_name(std::string_view raw) { return mangle(raw, false); }

std::string mangle_member_name(std::string_view raw) { return mangle(raw, true); }

const char *to_string(UnitKind k) { return k == UnitKind::aspect ? "aspect" : "class"; }

std::string GeneratedUnit::relative_path() const {
    return std::string(kind == UnitKind::aspect ? "aspects/" : "classes/") + file_name;
}

GeneratedUnit generate_aspect(const AspectSpec &spec, const CodegenOptions &options) {
    std::vector<std::string> unresolved;
    for (const auto &a : spec.advices)
        if (trim(a.pointcut_class).empty() || a.pointcut_class == xmi::kUnresolved ||
            trim(a.pointcut_operation).empty())
            unresolved.push_back("'" + a.operation + "'");
    if (!unresolved.empty()) {
        std::string list;
        for (std::size_t i = 0; i < unresolved.size(); ++i) list += (i ? ", " : "") + unresolved[i];
        throw GenerationError("aspect " + spec.name + ": advice " + list + " has no resolvable pointcut class");
    }

    auto advices = spec.advices;
    std::stable_sort(advices.begin(), advices.end(), [](const AdviceSpec &a, const AdviceSpec &b) {
        return name_key(a.operation) < name_key(b.operation);
    });

    IdentifierTable members("aspect " + spec.name);
    std::vector<std::string> operations;  // method order
    for (const auto &a : advices) {
        const auto &op = members.add(a.operation, true);
        if (std::find(operations.begin(), operations.end(), op) == operations.end()) operations.push_back(op);
    }
    std::map<std::string, std::string> guards;  // identifier -> guard text
    auto guard_id = [&](const std::string &text) {
        const auto &id = members.add(text, true, 'g');
        guards.emplace(id, text);
        return id;
    };

    std::ostringstream os;
    os << kAspectHeader << "public aspect " << spec.name << " {\n";

    std::map<std::string, int> pointcut_uses;
    for (const auto &a : advices) {
        const auto &op = members.at(a.operation);
        auto n = ++pointcut_uses[op];
        auto pointcut = op + "JoinPoint" + (n > 1 ? std::to_string(n) : std::string());
        os << '\n'
           << kIndent << "pointcut " << pointcut << "(): execution(* " << mangle_type_name(a.pointcut_class) << '.'
           << mangle_member_name(a.pointcut_operation) << "(..));\n\n";

        std::string body_indent(kIndent);
        body_indent += kIndent;
        switch (a.kind) {
            case AdviceKind::before: os << kIndent << "before(): " << pointcut << "() {\n"; break;
            case AdviceKind::after: os << kIndent << "after(): " << pointcut << "() {\n"; break;
            case AdviceKind::around: os << kIndent << "Object around(): " << pointcut << "() {\n"; break;
        }
        std::string inner = body_indent;
        if (a.guard) {
            os << body_indent << "if (" << guard_id(*a.guard) << "()) {\n";
            inner += kIndent;
        }
        os << inner << op << "();\n";
        for (const auto &call : a.body_calls) {
            std::string dispatch = mangle_type_name(call.target_class) + "." + mangle_member_name(call.operation) + "(";
            for (std::size_t i = 0; i < call.args.size(); ++i) dispatch += i ? ", null" : "null";
            dispatch += ");";
            if (call.guard) {
                os << inner << "if (" << guard_id(*call.guard) << "()) {\n"
                   << inner << kIndent << dispatch << '\n'
                   << inner << "}\n";
            } else {
                os << inner << dispatch << '\n';
            }
        }
        if (a.guard) os << body_indent << "}\n";
        if (a.kind == AdviceKind::around) os << body_indent << "return proceed();\n";
        os << kIndent << "}\n";
    }

    for (const auto &op : operations) os << '\n' << kIndent << "private void " << op << "() {\n" << kIndent << "}\n";
    for (const auto &[id, text] : guards)
        os << '\n'
           << kIndent << "// guard: [" << text << "]\n"
           << kIndent << "private boolean " << id << "() {\n"
           << kIndent << kIndent << "return false;\n"
           << kIndent << "}\n";
    os << "}\n";

    return {spec.name + options.aspect_extension, UnitKind::aspect, os.str()};
}

std::optional<GeneratedUnit> generate_class(std::string_view class_name, const MessageTable &table,
                                            const ConcernMap &concerns, const CodegenOptions &options) {
    if (concerns.is_actor(class_name) || classify(class_name, concerns) != ConcernType::functional)
        return std::nullopt;

    auto type_name = mangle_type_name(class_name);
    IdentifierTable members("class " + type_name);
    std::map<std::string, std::vector<std::string>> methods;  // identifier -> args of first occurrence
    for (const auto &r : table.rows) {
        if (!r.is_call() || name_key(r.receiver_class) != name_key(class_name)) continue;
        const auto &id = members.add(r.name, true);
        methods.try_emplace(id, r.args);
    }

    std::ostringstream os;
    os << kClassHeader << "public class " << type_name << " {\n";
    for (const auto &[id, args] : methods) {
        os << '\n' << kIndent << "public void " << id << "(";
        std::set<std::string> used;
        for (std::size_t i = 0; i < args.size(); ++i) {
            std::string param = args[i];
            if (!is_identifier(param) || kJavaKeywords.count(param) || used.count(param))
                param = "arg" + std::to_string(i);
            used.insert(param);
            os << (i ? ", " : "") << "Object " << param;
        }
        os << ") {\n" << kIndent << "}\n";
    }
    os << "}\n";
    return GeneratedUnit{type_name + options.class_extension, UnitKind::klass, os.str()};
}

namespace {

/// First spelling of each class and operation name, in table order.
class Spellings {
public:
    explicit Spellings(const MessageTable &table) {
        for (const auto &r : table.rows) {
            classes_.try_emplace(name_key(r.sender_class), r.sender_class);
            classes_.try_emplace(name_key(r.receiver_class), r.receiver_class);
            operations_.try_emplace(name_key(r.name), r.name);
        }
    }

    void klass(std::string &name) const { canonical(classes_, name); }
    void operation(std::string &name) const { canonical(operations_, name); }

private:
    static void canonical(const std::map<std::string, std::string> &spellings, std::string &name) {
        if (auto it = spellings.find(name_key(name)); it != spellings.end()) name = it->second;
    }

    std::map<std::string, std::string> classes_;
    std::map<std::string, std::string> operations_;
};

}  // namespace

std::vector<GeneratedUnit> generate_units(const MessageTable &ood, const AodModel &aod, const ConcernMap &concerns,
                                          const CodegenOptions &options) {
    // Spelling variants of one name must mangle to one identifier everywhere.
    Spellings spellings(ood);
    MessageTable table = ood;
    for (auto &r : table.rows) {
        spellings.klass(r.sender_class);
        spellings.klass(r.receiver_class);
        spellings.operation(r.name);
    }

    std::vector<GeneratedUnit> aspects, classes;
    for (auto spec : aod.aspects) {
        for (auto &a : spec.advices) {
            spellings.operation(a.operation);
            spellings.klass(a.pointcut_class);
            spellings.operation(a.pointcut_operation);
            for (auto &c : a.body_calls) {
                spellings.klass(c.target_class);
                spellings.operation(c.operation);
            }
        }
        aspects.push_back(generate_aspect(spec, options));
    }

    auto aspect_classes = aod.aspect_classes();
    for (const auto &c : aod.base_messages.woven.names()) aspect_classes.insert(c);
    for (const auto &c : table.classes()) {
        if (aspect_classes.contains(c) || c == xmi::kUnresolved) continue;
        if (auto unit = generate_class(c, table, concerns, options)) classes.push_back(std::move(*unit));
    }

    auto by_file = [](const GeneratedUnit &a, const GeneratedUnit &b) { return a.file_name < b.file_name; };
    std::sort(aspects.begin(), aspects.end(), by_file);
    std::sort(classes.begin(), classes.end(), by_file);

    std::map<std::string, std::string> seen;  // type name (sans extension) -> path
    std::vector<GeneratedUnit> all;
    for (auto *group : {&aspects, &classes}) {
        for (auto &u : *group) {
            auto stem = u.file_name.substr(0, u.file_name.find('.'));
            if (auto it = seen.find(stem); it != seen.end())
                throw NamingError("generated units '" + it->second + "' and '" + u.relative_path() +
                                  "' both declare the type '" + stem + "'");
            seen.emplace(stem, u.relative_path());
            all.push_back(std::move(u));
        }
    }
    return all;
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
        throw InternalError("SHA-256 digest failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(length * 2);
    for (unsigned int i = 0; i < length; ++i) {
        out += kHex[digest[i] >> 4];
        out += kHex[digest[i] & 0x0F];
    }
    return out;
}

}  // namespace aodesign
