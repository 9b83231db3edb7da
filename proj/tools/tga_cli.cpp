// tga: command-line front end. One JSON object per line on stdout; errors are
// a single JSON line on stderr with a nonzero exit status.

#include "checks.hpp"
#include "tga/json_io.hpp"
#include "tga/tga.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tga;

enum Exit : int { ok = 0, failure = 1, parse = 2, guard = 3, unsupported = 4, unsolvable = 5 };

struct Config {
    std::string expr_path;
    std::string graph_path;
    std::string presentation_path;
    std::string param;
    std::string semiring = "maxplus";
    std::string A = "all";
    std::size_t k0 = 0;
    std::size_t r = 2;
    std::string H_path;
    std::string else_value = "zero";
    std::string op = "glue";
    int i = 1;
    int j = 2;
    int k = -1;
    std::vector<std::size_t> sizes;
    std::size_t max_n = 3;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string family;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string suite = "all";
    std::size_t cases = 100;
    std::size_t pool = 30;
    std::size_t guard = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

// Guard from --guard, else TGA_GUARD_CAP, else the library default.
std::size_t guard_cap(const Config& c, std::size_t fallback) {
    if (c.guard > 0) return c.guard;
    if (const char* env = std::getenv("TGA_GUARD_CAP")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) throw std::invalid_argument("TGA_GUARD_CAP must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    return fallback;
}

ElseValue else_value(const Config& c) {
    if (c.else_value == "zero") return ElseValue::integer_zero;
    if (c.else_value == "bottom") return ElseValue::semiring_zero;
    throw std::invalid_argument("--else must be zero or bottom");
}

int colors_of(const Config& c, const CwExpr& e) { return c.k >= 0 ? c.k : std::max(1, e.max_color()); }

CwExpr load_expr(const Config& c) {
    if (c.expr_path.empty()) throw std::invalid_argument("--expr is required");
    return parse_expr(read_file(c.expr_path));
}

WeightedTargetGraph load_target(const Config& c) {
    if (c.H_path.empty()) throw std::invalid_argument("--H is required for zH");
    return read_target_graph(read_file(c.H_path));
}

template <Semiring S>
Value<S> embed(const Tropical& t) {
    if constexpr (std::same_as<S, MaxPlus>) {
        return t;
    } else {
        if (!t.is_finite()) throw UnsupportedError("value " + t.to_string() + " has no counterpart in " + std::string(S::name));
        return S::from_rational(t.value());
    }
}

template <Semiring S>
GraphParameter<S> make_parameter(const Config& c) {
    const auto A = UltimatelyPeriodicSet::parse(c.A);
    const auto ev = else_value(c);
    if (c.param == "alpha") return [](const ColoredGraph& g) { return embed<S>(alpha_brute(g)); };
    if (c.param == "omega") return [](const ColoredGraph& g) { return embed<S>(omega_brute(g)); };
    if (c.param == "count")
        return [](const ColoredGraph& g) { return S::from_rational(Rational(static_cast<std::int64_t>(count_independent_sets(g)))); };
    if (c.param == "fA") return [A, ev, k0 = c.k0](const ColoredGraph& g) { return f_A<S>(g, k0, A, ev); };
    if (c.param == "gAr") return [A, ev, r = c.r](const ColoredGraph& g) { return g_Ar<S>(g, r, A, ev); };
    if (c.param == "zH") {
        if constexpr (!std::same_as<S, MaxPlus>) {
            throw UnsupportedError("zH is a max-plus parameter");
        } else {
            return [H = load_target(c)](const ColoredGraph& g) { return z_partition_brute(g, H); };
        }
    }
    throw std::invalid_argument("unknown parameter '" + c.param + "'");
}

HankelShape make_shape(const Config& c) {
    const int k = std::max(c.k, 0);
    if (c.op == "glue") return {HankelOp::glue, k};
    if (c.op == "union") return {HankelOp::unite, k};
    if (c.op == "join") return {HankelOp::join, k, c.i, c.j};
    if (c.op == "stacked") return {HankelOp::stacked, k};
    throw std::invalid_argument("--op must be glue, join, union or stacked");
}

int cmd_eval(const Config& c) {
    const auto e = load_expr(c);
    EvalStats stats;
    std::string value;
    if (!c.presentation_path.empty()) {
        const auto j = parse_json(read_file(c.presentation_path));
        value = with_semiring(presentation_semiring(j), [&]<Semiring S>() {
            return S::to_string(eval_presentation<S>(e, presentation_from_json<S>(j), &stats));
        });
    } else if (c.param == "mis") {
        const int k = colors_of(c, e);
        value = MaxPlus::to_string(eval_presentation<MaxPlus>(e, mis_presentation(k, alphabet_of(e)), &stats));
    } else if (c.param == "count") {
        const auto w = as_linear(e);
        if (!w) throw UnsupportedError("count needs a linear expression (one operand of every union or join is a leaf)");
        const int k = colors_of(c, e);
        value = Natural::to_string(eval_linear<Natural>(*w, count_is_presentation(k, alphabet_of(e)), &stats));
    } else if (c.param == "zH") {
        value = MaxPlus::to_string(eval_zH(e, load_target(c), &stats, guard_cap(c, kZStateCap)));
    } else {
        throw std::invalid_argument("eval needs --param mis, count or zH, or --presentation");
    }
    emit(Json{{"value", value}, {"nodes", stats.nodes}, {"ops", stats.ops}});
    return ok;
}

int cmd_brute(const Config& c) {
    ColoredGraph g;
    std::vector<Rational> weights;
    bool weighted = false;
    if (!c.graph_path.empty()) {
        g = read_graph(read_file(c.graph_path));
    } else {
        const auto e = load_expr(c);
        g = eval_expr(e, colors_of(c, e));
        for (const auto& w : leaf_weights(e)) {
            weighted = weighted || w.has_value();
            weights.push_back(w.value_or(Rational(1)));
        }
    }
    std::string value;
    if (c.param == "alpha" && weighted) {
        value = Tropical(weighted_alpha_brute(g, weights)).to_string();
    } else if (c.param == "count" && weighted) {
        std::vector<std::uint64_t> w;
        for (const auto& x : weights) w.push_back(Natural::from_rational(x));
        value = std::to_string(weighted_count_independent_sets(g, w));
    } else if (c.param == "count") {
        value = std::to_string(count_independent_sets(g));
    } else {
        value = with_semiring(c.semiring, [&]<Semiring S>() { return S::to_string(make_parameter<S>(c)(g)); });
    }
    emit(Json{{"param", c.param}, {"n", g.n()}, {"value", value}});
    return ok;
}

int cmd_hankel(const Config& c) {
    if (c.sizes.empty()) throw std::invalid_argument("--sizes is required");
    const auto shape = make_shape(c);
    const auto report = with_semiring(c.semiring, [&]<Semiring S>() -> RankReport {
        if constexpr (std::same_as<S, Boolean>) {
            throw UnsupportedError("no rank computation over bool");
        } else {
            return rank_report<S>(make_parameter<S>(c), c.param, shape, c.sizes, guard_cap(c, kHankelSideCap));
        }
    });
    emit(to_json(report));
    return ok;
}

int cmd_synth(const Config& c) {
    if (c.out_path.empty()) throw std::invalid_argument("synth needs --out");
    const int k = std::max(c.k, 1);
    std::vector<CwExpr> pool;
    for (std::size_t x = 0; x < c.pool; ++x) {
        checks::Rng rng(checks::case_seed(c.seed, "synth/pool", x));
        pool.push_back(checks::detail::random_expr(rng, k, 1 + rng() % 6, false));
    }
    const auto diag = with_semiring(c.semiring, [&]<Semiring S>() -> SynthDiagnostics {
        if constexpr (!TropicalSemiring<S>) {
            throw UnsupportedError("synthesis needs maxplus or minplus");
        } else {
            auto res = synthesize_presentation<S>(make_parameter<S>(c), k, c.max_n, pool, guard_cap(c, kHankelSideCap));
            write_file(c.out_path, write_presentation<S>(res.presentation));
            return res.diagnostics;
        }
    });
    Json j = to_json(diag);
    j["out"] = c.out_path;
    emit(j);
    return ok;
}

int cmd_gen(const Config& c) {
    FamilySpec spec{parse_family(c.family), c.n, c.m, c.seed};
    const auto e = generate(spec);
    const auto text = serialize_expr(e) + "\n";
    Json j{{"family", c.family}, {"n", family_size(spec)}, {"k", family_colors(spec.family)}, {"nodes", e.size()}};
    if (c.out_path.empty()) {
        j["expr"] = serialize_expr(e);
    } else {
        write_file(c.out_path, text);
        j["out"] = c.out_path;
    }
    emit(j);
    return ok;
}

int cmd_check(const Config& c) {
    const auto names = checks::suite_names();
    if (c.suite != "all" && std::find(names.begin(), names.end(), c.suite) == names.end())
        throw std::invalid_argument("unknown suite '" + c.suite + "'");
    std::size_t failed = 0;
    const auto outcomes = checks::run_suite(c.suite, c.seed, c.cases);
    for (const auto& o : outcomes) {
        Json j{{"suite", o.suite}, {"property", o.name}, {"cases", o.cases}, {"pass", !o.counterexample}};
        if (o.counterexample) {
            ++failed;
            j["case_seed"] = o.failing_seed;
            j["counterexample"] = *o.counterexample;
        }
        emit(j);
    }
    emit(Json{{"suite", c.suite}, {"seed", c.seed}, {"properties", outcomes.size()}, {"failed", failed}});
    return failed == 0 ? ok : failure;
}

int fail(int code, const std::string& kind, const std::string& message, Json extra = Json::object()) {
    Json j{{"error", kind}, {"message", message}};
    j.update(extra);
    std::cout.flush();
    std::cerr << j.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    Config c;
    CLI::App app{"tropical graph algebra tools"};
    app.require_subcommand(1);
    app.add_option("--guard", c.guard, "size guard for Hankel sides and DP states (overrides TGA_GUARD_CAP)")
        ->check(CLI::PositiveNumber);

    auto add_param = [&](CLI::App* sub) {
        sub->add_option("--param", c.param, "parameter name");
        sub->add_option("--semiring", c.semiring, "maxplus, minplus, nat or rat")
            ->check(CLI::IsMember({"maxplus", "minplus", "nat", "rat", "bool"}));
        sub->add_option("--A", c.A, "ultimately periodic set, e.g. {1,2}+2@2 or all");
        sub->add_option("--k0", c.k0, "connectivity threshold for fA");
        sub->add_option("--r", c.r, "regularity for gAr");
        sub->add_option("--H", c.H_path, "weighted target graph file for zH");
        sub->add_option("--else", c.else_value, "value when fA/gAr's predicate fails: zero or bottom");
    };

    auto* eval = app.add_subcommand("eval", "evaluate a parameter on an expression via a presentation");
    eval->add_option("--expr", c.expr_path)->required();
    eval->add_option("--param", c.param, "mis, count or zH");
    eval->add_option("--presentation", c.presentation_path, "presentation JSON file");
    eval->add_option("--H", c.H_path, "weighted target graph file for zH");
    eval->add_option("--k", c.k, "color count (default: largest color used)");

    auto* brute = app.add_subcommand("brute", "brute-force oracle on a graph or expression");
    brute->add_option("--graph", c.graph_path);
    brute->add_option("--expr", c.expr_path);
    brute->add_option("--k", c.k, "color count for --expr");
    add_param(brute);

    auto* hankel = app.add_subcommand("hankel", "rank report of a truncated Hankel matrix");
    add_param(hankel);
    hankel->add_option("--op", c.op, "glue, join, union or stacked");
    hankel->add_option("--k", c.k, "labels or colors");
    hankel->add_option("--i", c.i);
    hankel->add_option("--j", c.j);
    hankel->add_option("--sizes", c.sizes, "truncation sizes")->delimiter(',');

    auto* synth = app.add_subcommand("synth", "synthesize a presentation from a truncated Hankel matrix");
    add_param(synth);
    synth->add_option("--k", c.k, "colors");
    synth->add_option("--max-n", c.max_n, "largest enumerated graph");
    synth->add_option("--pool", c.pool, "validation expressions");
    synth->add_option("--seed", c.seed);
    synth->add_option("-o,--out", c.out_path, "presentation file to write");

    auto* gen = app.add_subcommand("gen", "write the expression of a graph family");
    gen->add_option("--family", c.family, "path, cycle, complete, complete_bipartite, star or cograph_random")->required();
    gen->add_option("--n", c.n)->required();
    gen->add_option("--m", c.m, "right side of complete_bipartite");
    gen->add_option("--seed", c.seed);
    gen->add_option("-o,--out", c.out_path);

    auto* check = app.add_subcommand("check", "run property suites");
    check->add_option("--suite", c.suite, "all, semiring, linalg, graphs, expr, engine or hankel");
    check->add_option("--seed", c.seed);
    check->add_option("--cases", c.cases)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(parse, "usage", e.what());
    }

    try {
        if (eval->parsed()) return cmd_eval(c);
        if (brute->parsed()) return cmd_brute(c);
        if (hankel->parsed()) return cmd_hankel(c);
        if (synth->parsed()) return cmd_synth(c);
        if (gen->parsed()) return cmd_gen(c);
        return cmd_check(c);
    } catch (const ParseError& e) {
        return fail(parse, "parse", e.what(), Json{{"line", e.line()}, {"column", e.column()}});
    } catch (const FormatError& e) {
        return fail(parse, "format", e.what());
    } catch (const ResourceError& e) {
        return fail(guard, "guard", e.what());
    } catch (const UnsupportedError& e) {
        return fail(unsupported, "unsupported", e.what());
    } catch (const UnsolvableError& e) {
        return fail(unsolvable, "unsolvable", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(parse, "argument", e.what());
    } catch (const std::exception& e) {
        return fail(failure, "error", e.what());
    }
}
