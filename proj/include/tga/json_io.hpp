#pragma once

// JSON encodings: presentation files, rank reports and synthesis diagnostics.
// Semiring values are strings ("-inf" for the max-plus bottom).

#include "tga/error.hpp"
#include "tga/hankel.hpp"
#include "tga/presentation.hpp"
#include "tga/synth.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>

namespace tga {

using Json = nlohmann::ordered_json;

// Presentations whose file form would exceed this many table cells are refused.
inline constexpr std::size_t kPresentationFileMaxCells = std::size_t{1} << 22;

namespace detail {

template <Semiring S>
Json vector_json(const Vector<S>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(S::to_string(x));
    return out;
}

template <Semiring S>
Vector<S> vector_from_json(const Json& j, std::size_t m, const std::string& what) {
    if (!j.is_array() || j.size() != m) throw FormatError(what + ": expected an array of " + std::to_string(m) + " values");
    Vector<S> out;
    for (const auto& x : j) {
        if (!x.is_string() && !x.is_number_integer()) throw FormatError(what + ": values must be strings");
        const std::string text = x.is_string() ? x.get<std::string>() : x.dump();
        try {
            out.push_back(S::parse(text));
        } catch (const std::exception&) {
            throw FormatError(what + ": bad value '" + text + "'");
        }
    }
    return out;
}

template <Semiring S>
Json bilinear_json(const Table<S>& t, std::size_t m) {
    Json out = Json::array();
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            auto v = t.vector_at(p * m + q);
            if (std::all_of(v.begin(), v.end(), [](const Value<S>& x) { return is_zero<S>(x); })) continue;
            out.push_back(Json::array({p, q, vector_json<S>(v)}));
        }
    return out;
}

inline bool is_natural(const Json& j) { return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0); }

template <Semiring S>
Table<S> bilinear_from_json(const Json& j, std::size_t m, const std::string& what) {
    if (!j.is_array()) throw FormatError(what + ": expected an array of [p, q, vector] entries");
    std::vector<std::vector<typename Table<S>::Entry>> rows(m * m);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !is_natural(e[0]) || !is_natural(e[1]))
            throw FormatError(what + ": expected [p, q, vector]");
        const auto p = e[0].get<std::size_t>();
        const auto q = e[1].get<std::size_t>();
        if (p >= m || q >= m) throw FormatError(what + ": basis index out of range");
        auto v = vector_from_json<S>(e[2], m, what);
        for (std::size_t r = 0; r < m; ++r)
            if (!is_zero<S>(v[r])) rows[p * m + q].emplace_back(static_cast<std::uint32_t>(r), v[r]);
    }
    return Table<S>::from_entries(m * m, m, std::move(rows));
}

inline std::pair<std::size_t, std::size_t> offset_position(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t x = 0; x < offset && x < text.size(); ++x) {
        if (text[x] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        auto [line, col] = detail::offset_position(text, err.byte == 0 ? 0 : err.byte - 1);
        throw ParseError("invalid JSON", line, col);
    }
}

template <Semiring S>
Json presentation_to_json(const Presentation<S>& p) {
    const std::size_t cells = p.m * p.m * (p.m * (1 + p.join_tab.size()) + p.recolor_tab.size());
    if (cells > kPresentationFileMaxCells)
        throw ResourceError("presentation with m=" + std::to_string(p.m) + " is too large to write");
    Json j;
    j["k"] = p.k;
    j["m"] = p.m;
    j["semiring"] = std::string(S::name);
    j["leaf"] = Json::array();
    for (const auto& [c, lv] : p.leaf) {
        Json leaf;
        leaf["colors"] = c.colors();
        leaf["vec"] = detail::vector_json<S>(lv.vec);
        if (lv.wvec) leaf["wvec"] = detail::vector_json<S>(*lv.wvec);
        j["leaf"].push_back(std::move(leaf));
    }
    j["union"] = detail::bilinear_json<S>(p.union_tab, p.m);
    j["join"] = Json::object();
    for (const auto& [ij, t] : p.join_tab)
        j["join"][std::to_string(ij.first) + "," + std::to_string(ij.second)] = detail::bilinear_json<S>(t, p.m);
    j["recolor"] = Json::object();
    for (const auto& [name, t] : p.recolor_tab) {
        Json rows = Json::array();
        for (std::size_t a = 0; a < p.m; ++a) rows.push_back(detail::vector_json<S>(t.vector_at(a)));
        j["recolor"][name] = std::move(rows);
    }
    j["out"] = detail::vector_json<S>(p.out);
    return j;
}

template <Semiring S>
std::string write_presentation(const Presentation<S>& p) {
    return presentation_to_json<S>(p).dump(1) + "\n";
}

inline std::string presentation_semiring(const Json& j) {
    if (!j.is_object() || !j.contains("semiring") || !j["semiring"].is_string())
        throw FormatError("presentation: missing \"semiring\"");
    return j["semiring"].get<std::string>();
}

template <Semiring S>
Presentation<S> presentation_from_json(const Json& j) {
    if (presentation_semiring(j) != S::name)
        throw FormatError("presentation is over " + presentation_semiring(j) + ", expected " + std::string(S::name));
    for (const char* key : {"k", "m", "leaf", "union", "join", "recolor", "out"})
        if (!j.contains(key)) throw FormatError(std::string("presentation: missing \"") + key + "\"");
    if (!detail::is_natural(j["k"]) || !detail::is_natural(j["m"])) throw FormatError("presentation: k and m must be naturals");
    Presentation<S> p;
    p.k = j["k"].get<int>();
    p.m = j["m"].get<std::size_t>();
    if (p.k > kMaxColors) throw FormatError("presentation: k exceeds " + std::to_string(kMaxColors));
    if (p.m * p.m > kPresentationFileMaxCells) throw ResourceError("presentation: m is too large");
    if (!j["leaf"].is_array()) throw FormatError("presentation: \"leaf\" must be an array");
    for (const auto& leaf : j["leaf"]) {
        if (!leaf.is_object() || !leaf.contains("colors") || !leaf.contains("vec") || !leaf["colors"].is_array())
            throw FormatError("presentation: leaf entries need \"colors\" and \"vec\"");
        ColorSet c;
        for (const auto& x : leaf["colors"]) {
            if (!x.is_number_integer() || x.get<int>() < 1 || x.get<int>() > p.k) throw FormatError("presentation: leaf color out of range");
            c.insert(x.get<int>());
        }
        LeafVectors<S> lv{detail::vector_from_json<S>(leaf["vec"], p.m, "leaf vector"), std::nullopt};
        if (leaf.contains("wvec")) lv.wvec = detail::vector_from_json<S>(leaf["wvec"], p.m, "leaf weight vector");
        if (!p.leaf.emplace(c, std::move(lv)).second) throw FormatError("presentation: duplicate leaf " + c.to_string());
    }
    p.union_tab = detail::bilinear_from_json<S>(j["union"], p.m, "union table");
    if (!j["join"].is_object()) throw FormatError("presentation: \"join\" must be an object");
    for (const auto& [key, table] : j["join"].items()) {
        int i = 0;
        int jj = 0;
        char comma = 0;
        std::istringstream is(key);
        if (!(is >> i >> comma >> jj) || comma != ',' || !is.eof() || i < 1 || jj <= i || jj > p.k)
            throw FormatError("presentation: bad join key \"" + key + "\"");
        p.join_tab[{i, jj}] = detail::bilinear_from_json<S>(table, p.m, "join table " + key);
    }
    if (!j["recolor"].is_object()) throw FormatError("presentation: \"recolor\" must be an object");
    for (const auto& [name, rows] : j["recolor"].items()) {
        if (!rows.is_array() || rows.size() != p.m) throw FormatError("presentation: recoloring " + name + " must have m rows");
        std::vector<Value<S>> data;
        for (const auto& row : rows) {
            auto v = detail::vector_from_json<S>(row, p.m, "recoloring " + name);
            data.insert(data.end(), v.begin(), v.end());
        }
        p.recolor_tab[name] = Table<S>::from_dense(p.m, p.m, std::move(data));
    }
    p.out = detail::vector_from_json<S>(j["out"], p.m, "output vector");
    try {
        p.validate();
    } catch (const std::invalid_argument& err) {
        throw FormatError(std::string("presentation: ") + err.what());
    }
    return p;
}

template <Semiring S>
Presentation<S> read_presentation(std::string_view text) {
    return presentation_from_json<S>(parse_json(text));
}

inline Json to_json(const RankReport& r) {
    Json j;
    j["param"] = r.param;
    j["op"] = r.op;
    j["semiring"] = r.semiring;
    j["sizes"] = r.sizes;
    j["ranks"] = r.ranks;
    j["basis_rows"] = r.basis_rows;
    j["stabilized"] = r.stabilized;
    return j;
}

inline Json to_json(const SynthDiagnostics& d) {
    Json j;
    j["side"] = d.side;
    j["basis_size"] = d.basis_size;
    j["all_solved"] = d.all_solved();
    j["unsolved"] = d.unsolved;
    j["pool_size"] = d.pool_size;
    j["pool_agree"] = d.pool_agree;
    j["disagreements"] = d.disagreements;
    return j;
}

}  // namespace tga
