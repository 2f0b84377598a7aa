/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/cli.hpp"

#include "aodesign/codegen.hpp"
#include "aodesign/concerns.hpp"
#include "aodesign/crosscut.hpp"
#include "aodesign/metrics.hpp"
#include "aodesign/model.hpp"
#include "aodesign/render.hpp"
#include "aodesign/serialize.hpp"
#include "aodesign/transform.hpp"
#include "aodesign/xmi.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

namespace aodesign::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string xmi;
    std::string config;
    std::string out_dir;
    std::optional<int> threshold;
    bool json = false;
    CodegenOptions codegen;
};

struct Pipeline {
    Config config;
    MessageTable table;  // with repetitions
    RepetitionCounts counts;
    AspectCandidateSet candidates;
};

void report(const Diagnostics &diags, std::ostream &err) {
    for (const auto &d : diags) err << "aodesign: " << d << '\n';
}

void write_file(const fs::path &path, const std::string &content) {
    fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UserError("cannot write '" + path.string() + "'");
    f << content;
    if (!f.flush()) throw UserError("cannot write '" + path.string() + "'");
}

std::string dump(const ordered_json &j) { return j.dump(2) + "\n"; }

Pipeline load(const Options &opts, bool need_config, std::ostream &err) {
    Pipeline p;
    if (!opts.config.empty()) p.config = load_config_file(opts.config);
    else if (need_config) throw ConfigError("--config is required");
    if (opts.threshold) {
        if (*opts.threshold < 1) throw ConfigError("--threshold must be at least 1");
        p.config.threshold = *opts.threshold;
    }

    Diagnostics diags;
    auto raw = xmi::parse_xmi_file(opts.xmi);
    diags = raw.diagnostics;
    p.table = annotate_repetitions(build_message_table(raw, p.config.concerns, diags));
    report(diags, err);

    p.counts = repetition_counts(p.table);
    p.candidates = detect_aspect_candidates(p.counts, p.config.concerns, p.config.threshold);
    return p;
}

AodModel transform(const Pipeline &p, std::ostream &err) {
    Diagnostics diags;
    auto aod = transform_model(p.table, p.candidates, TransformOptions{p.config.advice_kind}, diags);
    report(diags, err);
    return aod;
}

int cmd_inspect(const Options &opts, std::ostream &out, std::ostream &err) {
    auto p = load(opts, false, err);
    out << (opts.json ? dump(to_json(p.table)) : table_to_text(p.table));
    return kSuccess;
}

int cmd_analyze(const Options &opts, std::ostream &out, std::ostream &err) {
    auto p = load(opts, true, err);
    auto doc = to_json(p.candidates);
    doc["repetitions"] = to_json(p.counts);
    out << dump(doc);
    return kSuccess;
}

int cmd_transform(const Options &opts, std::ostream &out, std::ostream &err) {
    auto p = load(opts, true, err);
    auto aod = transform(p, err);
    auto coupling = coupling_report(p.table, aod, p.config.coupling);

    fs::path dir(opts.out_dir);
    write_file(dir / "message_table.json", dump(to_json(p.table)));
    write_file(dir / "aod_model.json", dump(to_json(aod)));
    write_file(dir / "coupling.json", dump(to_json(coupling)));
    write_file(dir / "coupling.txt", report_to_text(coupling));

    auto aspects = aod.aspect_classes();
    std::map<std::string, std::string> stems;
    for (const auto &d : p.table.diagrams()) {
        auto stem = diagram_file_stem(d);
        if (auto [it, fresh] = stems.emplace(stem, d); !fresh)
            throw UserError("diagrams '" + it->second + "' and '" + d + "' map to the same file name '" + stem + "'");
        write_file(dir / "diagrams" / (stem + "__ood.dot"), to_dot(ood_view(p.table, d), {}));
        write_file(dir / "diagrams" / (stem + "__aod.dot"), to_dot(aod_view(p.table, aod, d), aspects));
    }

    out << "aspects:";
    if (aod.aspects.empty()) out << " (none)";
    for (const auto &a : aod.aspects) out << ' ' << a.name;
    out << "\ncoupling delta: " << coupling.delta << " (OOD " << coupling.ood_total << " -> AOD "
        << coupling.aod_total << ")\n";
    return kSuccess;
}

int cmd_codegen(const Options &opts, std::ostream &out, std::ostream &err) {
    auto p = load(opts, true, err);
    auto aod = transform(p, err);
    auto units = generate_units(p.table, aod, p.config.concerns, opts.codegen);

    fs::path dir(opts.out_dir);
    for (const auto &u : units) write_file(dir / u.relative_path(), u.text);
    write_file(dir / "manifest.json", dump(manifest_json(units)));
    for (const auto &u : units) out << u.relative_path() << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Aspect-oriented redesign of UML communication diagrams exported as EA XMI 1.1", "aodesign"};
    app.require_subcommand(1, 1);

    Options opts;
    auto add_common = [&](CLI::App *sub, bool config_required) {
        sub->add_option("xmi", opts.xmi, "XMI 1.1 export (Enterprise Architect)")->required();
        auto cfg = sub->add_option("--config", opts.config, "concern configuration (JSON)");
        if (config_required) cfg->required();
        sub->add_option("--threshold", opts.threshold, "repetition threshold; overrides the config value");
    };

    auto inspect = app.add_subcommand("inspect", "print the message table");
    add_common(inspect, false);
    inspect->add_flag("--json", opts.json, "print the table as JSON");

    auto analyze = app.add_subcommand("analyze", "report repetition counts and aspect candidates");
    add_common(analyze, true);

    auto transform = app.add_subcommand("transform", "write the AOD model, DOT diagrams and coupling report");
    add_common(transform, true);
    transform->add_option("--out", opts.out_dir, "output directory")->required();

    auto codegen = app.add_subcommand("codegen", "write aspect and class skeletons plus a manifest");
    add_common(codegen, true);
    codegen->add_option("--out", opts.out_dir, "output directory")->required();
    codegen->add_option("--class-ext", opts.codegen.class_extension, "class file extension")
        ->capture_default_str();
    codegen->add_option("--aspect-ext", opts.codegen.aspect_extension, "aspect file extension")
        ->capture_default_str();

    std::vector<std::string> argv_storage{"aodesign"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUserError;
    }

    try {
        if (*inspect) return cmd_inspect(opts, out, err);
        if (*analyze) return cmd_analyze(opts, out, err);
        if (*transform) return cmd_transform(opts, out, err);
        if (*codegen) return cmd_codegen(opts, out, err);
    } catch (const UserError &e) {
        err << "aodesign: error: " << e.what() << '\n';
        return kUserError;
    } catch (const fs::filesystem_error &e) {
        err << "aodesign: error: " << e.what() << '\n';
        return kUserError;
    } catch (const std::exception &e) {
        err << "aodesign: internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kInternalError;
}

}  // namespace aodesign::cli
