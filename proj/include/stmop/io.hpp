#ifndef STMOP_IO_HPP
#define STMOP_IO_HPP

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "construct.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "graph.hpp"
#include "mop.hpp"
#include "vertex_set.hpp"

namespace stmop {

using json = nlohmann::json;

/// A parsed graph file. `mop` is set for diagonal input and for edge input
/// that certifies as maximal outerplanar.
struct GraphInput {
    Graph graph;
    std::optional<MopGraph> mop;
};

inline json read_json_file(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw Error(Errc::ParseError, "cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

namespace detail {

inline std::vector<Edge> read_pairs(const json& j, const char* key)
{
    if (!j.at(key).is_array())
        throw Error(Errc::ParseError, std::string(key) + " must be an array");
    std::vector<Edge> out;
    for (const auto& p : j.at(key)) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            throw Error(Errc::ParseError, std::string(key) + " entries must be [int, int]");
        out.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return out;
}

inline bool is_identity(const std::vector<int>& labels)
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<int>(i))
            return false;
    return true;
}

} // namespace detail

/// Accepts `{"n", "diagonals"[, "labels"]}` for mops and `{"n", "edges"}` for general graphs.
inline GraphInput graph_from_json(const json& j)
{
    try {
        if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
            throw Error(Errc::ParseError, "graph JSON needs an integer \"n\"");
        const int n = j.at("n").get<int>();
        if (n < 0)
            throw Error(Errc::ParseError, "\"n\" must be non-negative");
        if (j.contains("diagonals")) {
            std::vector<int> labels;
            if (j.contains("labels"))
                labels = j.at("labels").get<std::vector<int>>();
            auto mop = mop_from_diagonals(n, detail::read_pairs(j, "diagonals"), labels);
            GraphInput in{detail::is_identity(mop.labels()) ? mop.graph() : mop.vertex_graph(), mop};
            return in;
        }
        if (j.contains("edges")) {
            Graph g(n, detail::read_pairs(j, "edges"));
            auto cert = is_maximal_outerplanar(g);
            return {std::move(g), cert.mop};
        }
        throw Error(Errc::ParseError, "graph JSON needs \"diagonals\" or \"edges\"");
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

inline json to_json(const MopGraph& g)
{
    json j{{"n", g.size()}, {"diagonals", json::array()}};
    for (auto [a, b] : g.diagonals())
        j["diagonals"].push_back({a, b});
    if (!detail::is_identity(g.labels()))
        j["labels"] = g.labels();
    return j;
}

inline json to_json(const Graph& g)
{
    json j{{"n", g.size()}, {"edges", json::array()}};
    for (auto [a, b] : g.edges())
        j["edges"].push_back({a, b});
    return j;
}

inline json to_json(const VertexSet& s) { return s.members(); }

/// Sorted array of vertex ids; duplicates are merged.
inline VertexSet set_from_json(const json& j, int n)
{
    if (!j.is_array())
        throw Error(Errc::ParseError, "vertex set must be a JSON array");
    VertexSet s(n);
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw Error(Errc::ParseError, "vertex ids must be integers");
        const int id = v.get<int>();
        if (id < 0 || id >= n)
            throw Error(Errc::ParseError, "vertex " + std::to_string(id) + " out of range");
        s.insert(id);
    }
    return s;
}

inline json to_json(const DominationClass& c)
{
    json j{{"dominating", c.dominating},
           {"total_dominating", c.total_dominating},
           {"two_dominating", c.two_dominating},
           {"secure_total", c.secure_total},
           {"defender_map", json::array()},
           {"failure_witness", nullptr}};
    for (auto [u, v] : c.defender_map)
        j["defender_map"].push_back({u, v});
    if (c.failure_witness)
        j["failure_witness"] = {{"vertex", c.failure_witness->vertex}, {"reason", c.failure_witness->reason}};
    return j;
}

inline json to_json(const SolveResult& r, Kind kind)
{
    return {{"kind", to_string(kind)}, {"value", r.value}, {"witness", r.witness.members()}, {"explored", r.explored}};
}

inline json to_json(const TraceStep& s)
{
    json chords = json::array();
    for (auto [a, b] : s.config.witness_chords)
        chords.push_back({a, b});
    return {{"kind", std::string(1, to_char(s.config.kind))},
            {"start", s.config.start},
            {"mirrored", s.config.mirrored},
            {"span", s.config.span},
            {"witness_chords", chords},
            {"order", s.order},
            {"span_labels", s.span_labels},
            {"deleted", s.deleted},
            {"branch", s.branch},
            {"added", s.added},
            {"removed", s.removed}};
}

inline json to_json(const ConstructionTrace& t)
{
    json steps = json::array();
    for (const auto& s : t.steps)
        steps.push_back(to_json(s));
    json diags = json::array();
    for (auto [a, b] : t.base_diagonals)
        diags.push_back({a, b});
    return {{"steps", steps},
            {"base", {{"n", t.base_order}, {"labels", t.base_labels}, {"diagonals", diags}, {"stds", t.base_set}}}};
}

} // namespace stmop

#endif // STMOP_IO_HPP
