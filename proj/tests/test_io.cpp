#include "tga/json_io.hpp"
#include "tga/tga.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

using namespace tga;
using tga::testing::random_single_colored_expr;

namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = TGA_CORPUS_DIR;

std::vector<fs::path> corpus_files(const std::string& dir, const std::string& ext) {
    std::vector<fs::path> out;
    for (const auto& entry : fs::directory_iterator(kCorpus / dir))
        if (entry.path().extension() == ext) out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

Json sidecar(const fs::path& p) {
    auto s = p;
    s.replace_extension(".expected.json");
    return parse_json(tga::testing::read_file(s.string()));
}

WeightedTargetGraph target(const std::string& name) {
    return read_target_graph(tga::testing::read_file((kCorpus / "targets" / (name + ".txt")).string()));
}

Alphabet with_recolorings(int k) {
    Alphabet a = full_join_alphabet(k);
    a.add_recoloring(Recoloring({{ColorSet{1}, ColorSet{2}}}));
    a.add_recoloring(Recoloring({{ColorSet{2}, ColorSet{}}}));
    return a;
}

}  // namespace

TEST(PresentationFile, RoundTripEvaluatesIdentically) {
    const auto p = mis_presentation(2, with_recolorings(2));
    const auto text = write_presentation<MaxPlus>(p);
    const auto q = read_presentation<MaxPlus>(text);
    EXPECT_EQ(q.k, p.k);
    EXPECT_EQ(q.m, p.m);
    EXPECT_EQ(q.union_tab, p.union_tab);
    EXPECT_EQ(q.join_tab, p.join_tab);
    EXPECT_EQ(q.recolor_tab, p.recolor_tab);
    EXPECT_EQ(q.out, p.out);
    EXPECT_EQ(write_presentation<MaxPlus>(q), text);

    std::mt19937_64 rng(11);
    int recolored = 0;
    for (int t = 0; t < 200; ++t) {
        auto e = random_single_colored_expr(rng, 2, 1 + rng() % 9, true);
        bool supported = true;
        for (const auto& r : e.recolorings()) supported = supported && p.recolor_tab.contains(r.name());
        if (!supported) continue;
        recolored += !e.recolorings().empty();
        EXPECT_EQ(eval_presentation<MaxPlus>(e, q), eval_presentation<MaxPlus>(e, p)) << serialize_expr(e);
    }
    EXPECT_GT(recolored, 0);
}

TEST(PresentationFile, SynthesizedPresentationRoundTrips) {
    GraphParameter<MaxPlus> f = [](const ColoredGraph& g) { return f_A<MaxPlus>(g, 0, UltimatelyPeriodicSet({1})); };
    auto res = synthesize_presentation<MaxPlus>(f, 1, 3);
    const auto q = read_presentation<MaxPlus>(write_presentation<MaxPlus>(res.presentation));
    for (const char* text : {"(v {1})", "(u (v {1}) (v {}))", "(u (u (v {1}) (v {1})) (v {}))"}) {
        auto e = parse_expr(text);
        EXPECT_EQ(eval_presentation<MaxPlus>(e, q), eval_presentation<MaxPlus>(e, res.presentation)) << text;
    }
}

TEST(PresentationFile, RationalValuesAndNaturalCarrier) {
    Presentation<RationalField> p;
    p.k = 1;
    p.m = 1;
    p.leaf[ColorSet{1}] = {{Rational(1, 2)}, std::nullopt};
    p.leaf[ColorSet{}] = {{Rational(-3)}, std::nullopt};
    p.union_tab = Table<RationalField>::from_dense(1, 1, {Rational(2, 3)});
    p.out = {Rational(5, 7)};
    auto q = read_presentation<RationalField>(write_presentation<RationalField>(p));
    auto e = parse_expr("(u (v {1}) (v {}))");
    EXPECT_EQ(eval_presentation<RationalField>(e, q), Rational(1, 2) * Rational(-3) * Rational(2, 3) * Rational(5, 7));
    EXPECT_EQ(eval_presentation<RationalField>(e, q), eval_presentation<RationalField>(e, p));
}

TEST(PresentationFile, Errors) {
    const auto good = presentation_to_json<MaxPlus>(mis_presentation(1));
    try {
        read_presentation<MaxPlus>("{\n  \"k\": ,\n}");
        FAIL() << "no exception";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(presentation_from_json<RationalField>(good), FormatError);

    auto bad = good;
    bad["out"].push_back("0");
    EXPECT_THROW(presentation_from_json<MaxPlus>(bad), FormatError);
    bad = good;
    bad.erase("union");
    EXPECT_THROW(presentation_from_json<MaxPlus>(bad), FormatError);
    bad = good;
    bad["join"]["2,1"] = Json::array();
    EXPECT_THROW(presentation_from_json<MaxPlus>(bad), FormatError);
    bad = good;
    bad["out"][0] = "zero";
    EXPECT_THROW(presentation_from_json<MaxPlus>(bad), FormatError);
    bad = good;
    bad["union"].push_back(Json::array({7, 0, good["out"]}));
    EXPECT_THROW(presentation_from_json<MaxPlus>(bad), FormatError);
    EXPECT_NO_THROW(presentation_from_json<MaxPlus>(good));
}

TEST(ReportJson, Keys) {
    GraphParameter<MaxPlus> omega = [](const ColoredGraph& g) { return omega_brute(g); };
    auto j = to_json(rank_report<MaxPlus>(omega, "omega", HankelShape{HankelOp::unite, 0}, {2, 3}));
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    EXPECT_EQ(keys, (std::vector<std::string>{"param", "op", "semiring", "sizes", "ranks", "basis_rows", "stabilized"}));
    EXPECT_EQ(j["op"], "union");
    EXPECT_EQ(j["ranks"], Json::parse("[2,2]"));
    EXPECT_TRUE(j["stabilized"].get<bool>());
}

TEST(Corpus, ExpressionsRoundTrip) {
    const auto files = corpus_files("expr", ".cwe");
    ASSERT_GE(files.size(), 10u);
    for (const auto& f : files) {
        const auto e = parse_expr(tga::testing::read_file(f.string()));
        EXPECT_EQ(parse_expr(serialize_expr(e)), e) << f;
    }
}

TEST(Corpus, ExpressionsMatchSidecars) {
    for (const auto& f : corpus_files("expr", ".cwe")) {
        SCOPED_TRACE(f.filename().string());
        const auto e = parse_expr(tga::testing::read_file(f.string()));
        const auto want = sidecar(f);
        const int k = std::max(1, e.max_color());
        const auto g = eval_expr(e, k);
        EXPECT_EQ(g.n(), want["n"].get<std::size_t>());
        EXPECT_EQ(g.edge_count(), want["edges"].get<std::size_t>());
        const auto weights = tga::testing::weights_or_one(e);
        EXPECT_EQ(Tropical(weighted_alpha_brute(g, weights)).to_string(), want["alpha"]);
        EXPECT_EQ(omega_brute(g).to_string(), want["omega"]);
        if (want["single_colored"].get<bool>()) {
            EXPECT_EQ(eval_presentation<MaxPlus>(e, mis_presentation(k, alphabet_of(e))).to_string(), want["alpha"]);
        } else {
            EXPECT_THROW(eval_presentation<MaxPlus>(e, mis_presentation(k, alphabet_of(e))), UnsupportedError);
        }
        if (want.contains("count")) {
            std::vector<std::uint64_t> w;
            for (const auto& x : weights) w.push_back(Natural::from_rational(x));
            EXPECT_EQ(std::to_string(weighted_count_independent_sets(g, w)), want["count"]);
            if (auto word = as_linear(e); word && want["single_colored"].get<bool>()) {
                EXPECT_EQ(std::to_string(eval_linear<Natural>(*word, count_is_presentation(k, alphabet_of(e)))), want["count"]);
            }
        }
        if (want.contains("zH")) {
            for (const auto& [name, value] : want["zH"].items()) {
                EXPECT_EQ(z_partition_brute(g, target(name)).to_string(), value) << name;
                if (is_plain(e)) {
                    EXPECT_EQ(eval_zH(e, target(name)).to_string(), value) << name;
                }
            }
        }
    }
}

TEST(Corpus, GraphsMatchSidecars) {
    for (const auto& f : corpus_files("graphs", ".g")) {
        SCOPED_TRACE(f.filename().string());
        const auto g = read_graph(tga::testing::read_file(f.string()));
        EXPECT_EQ(read_graph(write_graph(g)), g);
        const auto want = sidecar(f);
        EXPECT_EQ(g.n(), want["n"].get<std::size_t>());
        EXPECT_EQ(alpha_brute(g).to_string(), want["alpha"]);
        EXPECT_EQ(omega_brute(g).to_string(), want["omega"]);
        EXPECT_EQ(std::to_string(count_independent_sets(g)), want["count"]);
        if (want.contains("zH")) {
            for (const auto& [name, value] : want["zH"].items())
                EXPECT_EQ(z_partition_brute(g, target(name)).to_string(), value) << name;
        }
    }
}

TEST(Corpus, BadFilesReportPositions) {
    const auto files = corpus_files("bad", ".cwe");
    ASSERT_FALSE(files.empty());
    for (const auto& f : files) {
        try {
            parse_expr(tga::testing::read_file(f.string()));
            ADD_FAILURE() << f << " parsed";
        } catch (const ParseError& e) {
            EXPECT_GE(e.line(), 1u);
            EXPECT_GE(e.column(), 1u);
        }
    }
}
