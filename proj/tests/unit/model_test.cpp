/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/model.hpp"

#include "aodesign/crosscut.hpp"

#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

namespace aodesign {
namespace {

using testing::fixture_path;
using testing::load_fixture;
using testing::read_file;
using Seq = std::vector<std::uint32_t>;

const std::vector<std::string> kChequeServiceNames = {
    "access",           "click login",           "display login",         "enter",
    "verify",           "valid user",            "display option menu",   "check behavior",
    "recording user behavior", "select cheque service", "display cheque book", "check user status",
    "block user",       "logout",                "view cheque book"};

std::string wrap(const std::string &content) {
    return "<XMI xmi.version=\"1.1\"><XMI.content>\n"
           "<UML:Class name=\"A\" xmi.id=\"CA\"/><UML:Class name=\"B\" xmi.id=\"CB\"/>\n"
           "<UML:ClassifierRole name=\"a\" xmi.id=\"OA\" base=\"CA\"/>\n"
           "<UML:ClassifierRole name=\"b\" xmi.id=\"OB\" base=\"CB\"/>\n"
           "<UML:Diagram name=\"main\" xmi.id=\"D1\"/>\n" +
           content + "</XMI.content></XMI>\n";
}

std::string message(const std::string &id, const std::string &name,
                    const std::vector<std::pair<std::string, std::string>> &tags) {
    std::string out = "<UML:Message name=\"" + name + "\" xmi.id=\"" + id +
                      "\" sender=\"OA\" receiver=\"OB\"><UML:ModelElement.taggedValue>";
    for (const auto &[k, v] : tags) out += "<UML:TaggedValue tag=\"" + k + "\" value=\"" + v + "\"/>";
    return out + "</UML:ModelElement.taggedValue></UML:Message>\n";
}

MessageTable table_of(const std::string &doc, Diagnostics &diags) {
    return build_message_table(xmi::parse_xmi(doc), ConcernMap{}, diags);
}

TEST(Label, SampleMessageLabel) {
    auto l = parse_label("5.2.1: [any misuse]:block user()");
    EXPECT_EQ(l.seq, SequenceExpr(Seq{5, 2, 1}));
    EXPECT_EQ(l.guard, "any misuse");
    EXPECT_EQ(l.assignment, std::nullopt);
    EXPECT_EQ(l.name, "block user");
    EXPECT_TRUE(l.args.empty());
}

TEST(Label, AssignmentPrefix) {
    auto l = parse_label("3: behave= check behavior()");
    EXPECT_EQ(l.seq, SequenceExpr(Seq{3}));
    EXPECT_EQ(l.guard, std::nullopt);
    EXPECT_EQ(l.assignment, "behave");
    EXPECT_EQ(l.name, "check behavior");
    EXPECT_TRUE(l.args.empty());
}

TEST(Label, MinimalAndArguments) {
    auto l = parse_label("1: x()");
    EXPECT_EQ(l.seq, SequenceExpr(Seq{1}));
    EXPECT_EQ(l.name, "x");
    EXPECT_FALSE(l.guard || l.assignment);

    auto e = parse_label("2: enter(username,  password )");
    EXPECT_EQ(e.args, (std::vector<std::string>{"username", "password"}));
    auto nested = parse_label("4: f(g(a, b), c)");
    EXPECT_EQ(nested.args, (std::vector<std::string>{"g(a, b)", "c"}));
    EXPECT_EQ(parse_label("4.1: display= display cheque book()").assignment, "display");
    EXPECT_EQ(parse_label("1: []:x()").guard, std::nullopt);
}

TEST(Label, RejectsMalformedText) {
    for (auto bad : {"", "x()", "1:", "1: ()", "0: x()", "1..2: x()", "1: x(", "1 x()", "1: [g] x()", "a.1: x()"}) {
        try {
            parse_label(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const LabelParseError &e) {
            EXPECT_EQ(e.label(), bad);
        }
    }
}

TEST(Sequence, ParseAndRender) {
    EXPECT_EQ(SequenceExpr::parse("4.2.1").to_string(), "4.2.1");
    EXPECT_EQ(SequenceExpr::parse(" 10 ").components(), Seq{10});
    for (auto bad : {"", "1.", ".1", "a", "0", "1.0", "-1", "1.2a"})
        EXPECT_FALSE(SequenceExpr::try_parse(bad)) << bad;
    EXPECT_THROW(SequenceExpr::parse("1..2"), LabelParseError);
}

TEST(Sequence, CompareExamples) {
    auto s = [](Seq v) { return SequenceExpr(std::move(v)); };
    EXPECT_EQ(compare_seq(s({1, 2}), s({2})), std::strong_ordering::less);
    EXPECT_EQ(compare_seq(s({4}), s({4, 2, 1})), std::strong_ordering::less);
    EXPECT_EQ(compare_seq(s({4, 2}), s({4, 10})), std::strong_ordering::less);
    EXPECT_EQ(compare_seq(s({4, 2}), s({4, 2})), std::strong_ordering::equal);
    EXPECT_TRUE(s({4}).encloses(s({4, 2, 1})));
    EXPECT_FALSE(s({4}).encloses(s({4})));
    EXPECT_FALSE(s({4, 2}).encloses(s({4, 3, 1})));
}

int lexicographic(const Seq &a, const Seq &b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; }

TEST(SequenceProperty, CompareIsATotalOrder) {
    testing::Rng rng(1234);
    auto random_seq = [&] {
        Seq v(static_cast<std::size_t>(testing::uniform(rng, 1, 4)));
        for (auto &c : v) c = static_cast<std::uint32_t>(testing::uniform(rng, 1, 4));
        return v;
    };
    for (int i = 0; i < 3000; ++i) {
        auto a = random_seq(), b = random_seq(), c = random_seq();
        SequenceExpr x(a), y(b), z(c);
        ASSERT_EQ(sign(compare_seq(x, y)), lexicographic(a, b));
        ASSERT_EQ(sign(compare_seq(x, y)), -sign(compare_seq(y, x)));
        ASSERT_EQ(compare_seq(x, y) == 0, a == b);
        if (compare_seq(x, y) < 0 && compare_seq(y, z) < 0) {
            ASSERT_LT(sign(compare_seq(x, z)), 0);
        }
        if (compare_seq(x, y) <= 0 && compare_seq(y, z) <= 0) {
            ASSERT_LE(sign(compare_seq(x, z)), 0);
        }
    }
}

TEST(LabelProperty, RenderParseIsAFixedPoint) {
    testing::Rng rng(99);
    for (int i = 0; i < 2000; ++i) {
        auto label = testing::random_label(rng);
        auto text = label.to_string();
        auto once = parse_label(text);
        ASSERT_EQ(once, label) << text;
        ASSERT_EQ(parse_label(once.to_string()).to_string(), text);
        ASSERT_EQ(SequenceExpr::parse(label.seq.to_string()), label.seq);
    }
}

TEST(MessageTable, SampleMessageRow) {
    auto f = load_fixture("block_user_message.xmi");
    ASSERT_EQ(f.table.rows.size(), 1u);
    const auto &r = f.table.rows[0];
    EXPECT_EQ(r.name, "block user");
    EXPECT_EQ(r.sender_object, "monitoring");
    EXPECT_EQ(r.sender_class, "security");
    EXPECT_EQ(r.sender_concern, ConcernType::non_functional);
    EXPECT_EQ(r.receiver_object, "h-page");
    EXPECT_EQ(r.receiver_class, "home page");
    EXPECT_EQ(r.receiver_concern, ConcernType::functional);
    EXPECT_EQ(r.seq, SequenceExpr(Seq{5, 2, 1}));
    EXPECT_EQ(r.seqno, 15);
    EXPECT_EQ(r.guard, "any misuse");
    EXPECT_EQ(r.synchronicity, Synchronicity::synchronous);
    EXPECT_EQ(r.kind, MessageKind::call);
    EXPECT_EQ(r.diagram, "cheque service");
    EXPECT_EQ(r.label(), "5.2.1: [any misuse]:block user()");
    EXPECT_TRUE(f.diagnostics.empty());
}

TEST(MessageTable, MissingSeqnoFallsBackToDottedSequence) {
    std::string text = read_file(fixture_path("block_user_message.xmi"));
    auto pos = text.find("<UML:TaggedValue tag=\"seqno\"");
    text.erase(pos, text.find('\n', pos) - pos + 1);
    Diagnostics diags;
    auto table = build_message_table(xmi::parse_xmi(text), ConcernMap{}, diags);
    ASSERT_EQ(table.rows.size(), 1u);
    EXPECT_EQ(table.rows[0].seqno, std::nullopt);
    EXPECT_EQ(table.rows[0].seq.to_string(), "5.2.1");
}

TEST(MessageTable, EmptyModel) {
    auto f = load_fixture("empty.xmi");
    EXPECT_TRUE(f.table.empty());
    EXPECT_TRUE(f.table.diagrams().empty());
}

TEST(MessageTable, BankingReconstruction) {
    auto f = load_fixture("banking.xmi");
    EXPECT_EQ(f.table.diagrams(), (std::vector<std::string>{"cheque service", "logging"}));
    auto cheque = f.table.rows_in("cheque service");
    ASSERT_EQ(cheque.size(), 15u);
    for (std::size_t i = 0; i < cheque.size(); ++i) EXPECT_EQ(cheque[i].name, kChequeServiceNames[i]);
    auto logging = f.table.rows_in("logging");
    ASSERT_EQ(logging.size(), 7u);
    for (std::size_t i = 0; i < logging.size(); ++i) EXPECT_EQ(logging[i].name, kChequeServiceNames[i]);
    EXPECT_EQ(cheque[7].label(), "3: behave= check behavior()");
    EXPECT_EQ(cheque[12].label(), "4.2.1: [any misuse]:block user()");
    EXPECT_EQ(cheque[3].args, (std::vector<std::string>{"username", "password"}));
    EXPECT_EQ(count_severity(f.diagnostics, Severity::error), 0u);
    EXPECT_EQ(count_severity(f.diagnostics, Severity::warning), 0u);
}

TEST(MessageTable, NonCallMessagesAreKept) {
    Diagnostics diags;
    auto t = table_of(wrap(message("M1", "ret", {{"privatedata3", "Return"}, {"lt", "1: ret()"}, {"diagram", "D1"}}) +
                           message("M2", "go", {{"privatedata3", "call"}, {"lt", "2: go()"}, {"diagram", "D1"}})),
                      diags);
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.rows[0].kind, MessageKind::other);
    EXPECT_FALSE(t.rows[0].is_call());
    EXPECT_TRUE(t.rows[1].is_call());
}

TEST(MessageTable, LabelWinsOverPrivateSequence) {
    Diagnostics diags;
    auto t = table_of(wrap(message("M1", "x", {{"privatedata3", "Call"}, {"privatedata4", "5.2.1"},
                                               {"lt", "4.2.1: x()"}, {"diagram", "D1"}})),
                      diags);
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.rows[0].seq.to_string(), "4.2.1");
    ASSERT_EQ(diags.size(), 1u);
    EXPECT_EQ(diags[0].severity, Severity::warning);
}

TEST(MessageTable, UnparseableLabelFallsBackToAttributes) {
    Diagnostics diags;
    auto t = table_of(wrap(message("M1", "block user ", {{"privatedata3", "Call"}, {"privatedata4", "2.1"},
                                                          {"conditional", "any misuse"}, {"lt", "garbled"},
                                                          {"diagram", "D1"}})),
                      diags);
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.rows[0].name, "block user");
    EXPECT_EQ(t.rows[0].seq.to_string(), "2.1");
    EXPECT_EQ(t.rows[0].guard, "any misuse");
    EXPECT_EQ(diags.size(), 1u);
}

TEST(MessageTable, RowWithoutSequenceIsDropped) {
    Diagnostics diags;
    auto t = table_of(wrap(message("M1", "x", {{"privatedata3", "Call"}, {"diagram", "D1"}})), diags);
    EXPECT_TRUE(t.empty());
    EXPECT_EQ(count_severity(diags, Severity::error), 1u);
}

TEST(MessageTable, DiagramAssignment) {
    Diagnostics diags;
    auto t = table_of(wrap(message("M1", "x", {{"privatedata3", "Call"}, {"lt", "1: x()"}}) +
                           message("M2", "y", {{"privatedata3", "Call"}, {"lt", "1: y()"}, {"diagram", "ZZ"}}) +
                           message("M3", "z", {{"privatedata3", "Call"}, {"lt", "1: z()"}, {"diagram", "D1"}})),
                      diags);
    EXPECT_EQ(t.diagrams(), (std::vector<std::string>{"main", "ZZ", "unassigned"}));
    EXPECT_EQ(count_severity(diags, Severity::warning), 2u);
}

TEST(MessageTable, OrdersBySeqnoOnlyWhenEveryRowHasOne) {
    auto rows_with = [](bool all_seqno) {
        return wrap(message("M1", "late", {{"privatedata3", "Call"}, {"lt", "1: late()"}, {"seqno", "9"}, {"diagram", "D1"}}) +
                    message("M2", "early", {{"privatedata3", "Call"}, {"lt", "2: early()"}, {"seqno", "3"}, {"diagram", "D1"}}) +
                    message("M3", "mid", all_seqno
                                             ? std::vector<std::pair<std::string, std::string>>{{"privatedata3", "Call"}, {"lt", "1.1: mid()"}, {"seqno", "5"}, {"diagram", "D1"}}
                                             : std::vector<std::pair<std::string, std::string>>{{"privatedata3", "Call"}, {"lt", "1.1: mid()"}, {"diagram", "D1"}}));
    };
    Diagnostics diags;
    auto by_seqno = table_of(rows_with(true), diags);
    EXPECT_EQ(by_seqno.rows[0].name, "early");
    EXPECT_EQ(by_seqno.rows[1].name, "mid");
    EXPECT_EQ(by_seqno.rows[2].name, "late");
    auto by_dotted = table_of(rows_with(false), diags);
    EXPECT_EQ(by_dotted.rows[0].name, "late");
    EXPECT_EQ(by_dotted.rows[1].name, "mid");
    EXPECT_EQ(by_dotted.rows[2].name, "early");
    EXPECT_TRUE(diags.empty());
}

TEST(MessageTable, TiesAreReportedAndBrokenByXmiId) {
    Diagnostics diags;
    auto t = table_of(wrap(message("M2", "b", {{"privatedata3", "Call"}, {"lt", "1: b()"}, {"diagram", "D1"}}) +
                           message("M1", "a", {{"privatedata3", "Call"}, {"lt", "1: a()"}, {"diagram", "D1"}})),
                      diags);
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.rows[0].xmi_id, "M1");
    EXPECT_EQ(diags.size(), 1u);
}

TEST(MessageTableProperty, OrderIsInvariantUnderInputPermutation) {
    auto raw = xmi::parse_xmi_file(fixture_path("banking_full.xmi"));
    auto concerns = load_config_file(fixture_path("concerns.json")).concerns;
    Diagnostics diags;
    auto expected = build_message_table(raw, concerns, diags);
    testing::Rng rng(77);
    for (int i = 0; i < 25; ++i) {
        auto shuffled = raw;
        std::shuffle(shuffled.messages.begin(), shuffled.messages.end(), rng);
        ASSERT_EQ(build_message_table(shuffled, concerns, diags), expected);
    }
}

TEST(MessageTableProperty, RowOrderingIsInvariantOnRandomTables) {
    testing::Rng rng(4242);
    for (int i = 0; i < 300; ++i) {
        auto model = testing::random_model(rng);
        for (const auto &d : model.table.diagrams()) {
            auto rows = model.table.rows_in(d);
            auto shuffled = rows;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            if (testing::uniform(rng, 0, 1))
                for (auto &r : shuffled) r.seqno.reset();
            Diagnostics diags;
            order_diagram_rows(shuffled, diags);
            auto reference = shuffled;
            std::shuffle(reference.begin(), reference.end(), rng);
            order_diagram_rows(reference, diags);
            ASSERT_EQ(shuffled, reference);
            ASSERT_TRUE(std::is_sorted(shuffled.begin(), shuffled.end(),
                                       [](const MessageRecord &a, const MessageRecord &b) {
                                           return a.seqno && b.seqno ? *a.seqno < *b.seqno : a.seq < b.seq;
                                       }));
        }
    }
}

TEST(MessageTable, PlainTextHasBankingColumns) {
    auto f = load_fixture("banking.xmi");
    auto text = table_to_text(annotate_repetitions(f.table));
    auto header = text.substr(0, text.find('\n'));
    std::size_t at = 0;
    for (auto column : kTableColumns) {
        auto next = header.find(column, at);
        ASSERT_NE(next, std::string::npos) << column;
        at = next + column.size();
    }
    EXPECT_NE(text.find("click login"), std::string::npos);
    EXPECT_NE(text.find("non functional requirement"), std::string::npos);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2 + 22);
    EXPECT_EQ(text.back(), '\n');
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) EXPECT_TRUE(line.empty() || line.back() != ' ');
}

}  // namespace
}  // namespace aodesign
