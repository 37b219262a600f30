#ifndef STMOP_CONSTRUCT_HPP
#define STMOP_CONSTRUCT_HPP

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "configuration.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "mop.hpp"
#include "vertex_set.hpp"

namespace stmop {

/// One reduction step. Vertex lists are labels of the input graph.
struct TraceStep {
    Configuration config; // positions in the graph of this step
    int order = 0;        // vertex count before deletion
    std::vector<int> span_labels;
    std::vector<int> deleted;
    std::string branch;
    std::vector<int> added;
    std::vector<int> removed;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ConstructionTrace {
    std::vector<TraceStep> steps; // outermost graph first
    int base_order = 0;
    std::vector<int> base_labels;
    std::vector<Edge> base_diagonals;
    std::vector<int> base_set;

    friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

/// A step where the reduced set lacks a property the induction relies on.
class InvariantViolation : public Error {
public:
    InvariantViolation(const std::string& what, ConstructionTrace trace)
        : Error(Errc::InternalInvariantViolation, what), trace_(std::move(trace))
    {
    }

    const ConstructionTrace& trace() const noexcept { return trace_; }

private:
    ConstructionTrace trace_;
};

struct BuildOptions {
    // Re-verify every intermediate set with classify and the per-case defence claims.
    bool verify_steps = true;
};

inline constexpr int floor_two_thirds(int n) noexcept { return 2 * n / 3; }
inline constexpr int ceil_n_plus_2_thirds(int n) noexcept { return (n + 4) / 3; }

namespace detail {

// Degree-2-free minimum secure total dominating sets for the base mops,
// computed once per diagonal set. Positions of the base graph.
inline std::vector<int> base_set(const MopGraph& g)
{
    if (g.size() == 3)
        return {0, 1};
    static std::mutex mutex;
    static std::map<std::vector<Edge>, std::vector<int>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(g.diagonals());
    if (it == cache.end()) {
        SolveOptions opt;
        opt.exclude_degree_2 = true;
        auto res = solve(g.graph(), Kind::secure_total, opt);
        it = cache.emplace(g.diagonals(), res.witness.members()).first;
    }
    return it->second;
}

struct RuleOutcome {
    std::string branch;
    std::vector<int> added;
    std::vector<int> removed;
    std::string violation; // non-empty when the reduced set breaks a precondition
};

// Extension of the reduced set S' back to the graph of the step.
template <class LabelOf>
RuleOutcome extension_rule(ConfigKind kind, LabelOf&& L, const VertexSet& reduced)
{
    using R = Role;
    auto in = [&](R r) { return reduced.contains(L(r)); };
    auto require = [&](RuleOutcome& out, std::initializer_list<R> present, R absent) {
        for (R r : present)
            if (!in(r))
                out.violation += std::string(1, to_char(r)) + " not in reduced set; ";
        if (in(absent))
            out.violation += std::string(1, to_char(absent)) + " in reduced set; ";
    };
    RuleOutcome out;
    switch (kind) {
    case ConfigKind::a:
        out = {"a", {L(R::v), L(R::x)}, {}, {}};
        break;
    case ConfigKind::b:
        if (in(R::u))
            out = {"b-1", {L(R::w), L(R::x)}, {}, {}};
        else
            out = {"b-2", {L(R::u), L(R::w)}, {}, {}};
        break;
    case ConfigKind::c:
        out = {"c", {L(R::w)}, {}, {}};
        require(out, {R::u, R::y}, R::w);
        break;
    case ConfigKind::d:
        out = {"d", {L(R::u), L(R::w)}, {}, {}};
        require(out, {R::t, R::y}, R::w);
        break;
    case ConfigKind::e:
        out = {"e", {L(R::v), L(R::w)}, {}, {}};
        require(out, {R::t, R::y}, R::w);
        break;
    case ConfigKind::f:
        out = {"f", {L(R::u), L(R::y)}, {}, {}};
        require(out, {R::w, R::z}, R::y);
        break;
    case ConfigKind::g:
        out = {"g", {L(R::u), L(R::x)}, {}, {}};
        require(out, {R::w, R::z}, R::x);
        break;
    case ConfigKind::h:
        if (in(R::t))
            out = {"h-1", {L(R::v), L(R::x)}, {}, {}};
        else
            out = {"h-2", {L(R::t), L(R::v), L(R::x)}, {L(R::w)}, {}};
        require(out, {R::w, R::z}, R::x);
        break;
    }
    return out;
}

inline VertexSet apply_outcome(VertexSet s, const RuleOutcome& r)
{
    for (int l : r.removed)
        s.erase(l);
    for (int l : r.added)
        s.insert(l);
    return s;
}

// Defence facts asserted after each branch: `defended` must be totally
// defended by one of `defenders`. Skipped when `defended` ends up in S.
struct DefenceClaim {
    Role defended;
    std::vector<Role> defenders;
};

inline std::vector<DefenceClaim> defence_claims(const std::string& branch)
{
    using R = Role;
    if (branch == "a") return {{R::w, {R::v}}};
    if (branch == "b-1") return {{R::v, {R::w}}, {R::y, {R::x}}};
    if (branch == "b-2") return {{R::v, {R::w}}, {R::x, {R::w}}};
    if (branch == "c") return {{R::v, {R::w}}, {R::x, {R::w}}};
    if (branch == "d") return {{R::v, {R::w}}, {R::x, {R::w}}};
    if (branch == "e") return {{R::u, {R::v}}, {R::x, {R::w}}};
    // With t outside S, u is internally private to w and not adjacent to x; y covers x then.
    if (branch == "f") return {{R::v, {R::w}}, {R::x, {R::w, R::y}}, {R::t, {R::w}}};
    if (branch == "g") return {{R::v, {R::w}}, {R::t, {R::w}}, {R::y, {R::x}}};
    if (branch == "h-1") return {{R::u, {R::v}}, {R::y, {R::x}}};
    if (branch == "h-2") return {{R::y, {R::x}}, {R::w, {R::x}}, {R::u, {R::v}}};
    return {};
}

inline std::vector<int> sorted_labels(const MopGraph& g, std::span<const int> positions)
{
    std::vector<int> out;
    for (int p : positions)
        out.push_back(g.label(p));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string check_set(const MopGraph& g, const VertexSet& labels)
{
    const VertexSet s = g.to_positions(labels);
    const int n = g.size();
    if (s.size() > floor_two_thirds(n))
        return "size " + std::to_string(s.size()) + " exceeds floor(2n/3) = " + std::to_string(floor_two_thirds(n));
    if (n >= 4 && s.intersects(degree_two_positions(g)))
        return "set contains a degree-2 vertex";
    if (!classify(s, g.graph()).secure_total)
        return "set is not secure total dominating";
    return {};
}

} // namespace detail

/// Builds a secure total dominating set of size at most floor(2n/3) that,
/// for n >= 4, avoids every degree-2 vertex. The set is in label space.
///
/// Mops with n >= 7 are reduced by deleting the vertices of a located
/// pattern; the set found on the smaller mop is extended by the pattern's
/// rule. Mops of order 3..6 use precomputed minimum sets.
inline std::pair<VertexSet, ConstructionTrace> build_stds(const MopGraph& g, const BuildOptions& opt = {})
{
    ConstructionTrace trace;
    std::vector<MopGraph> graphs{g};
    while (graphs.back().size() >= 7) {
        const MopGraph& cur = graphs.back();
        TraceStep step;
        step.config = find_configuration(cur);
        step.order = cur.size();
        for (int p : step.config.span_positions())
            step.span_labels.push_back(cur.label(p));
        std::vector<int> doomed;
        for (Role r : pattern(step.config.kind).deleted)
            doomed.push_back(step.config.at(r));
        step.deleted = detail::sorted_labels(cur, doomed);
        trace.steps.push_back(step);
        try {
            graphs.push_back(remove_consecutive(cur, doomed));
        } catch (const Error& e) {
            throw InvariantViolation(std::string("reduction failed: ") + e.what(), trace);
        }
    }

    const MopGraph& base = graphs.back();
    const auto base_positions = detail::base_set(base);
    trace.base_order = base.size();
    trace.base_labels = base.labels();
    trace.base_diagonals = base.diagonals();
    trace.base_set = detail::sorted_labels(base, base_positions);

    VertexSet s(g.universe(), trace.base_set);
    if (opt.verify_steps)
        if (auto bad = detail::check_set(base, s); !bad.empty())
            throw InvariantViolation("base case: " + bad, trace);

    for (std::size_t i = trace.steps.size(); i-- > 0;) {
        TraceStep& step = trace.steps[i];
        const MopGraph& cur = graphs[i];
        auto label_of = [&](Role r) { return cur.label(step.config.at(r)); };
        auto outcome = detail::extension_rule(step.config.kind, label_of, s);
        if (!outcome.violation.empty())
            throw InvariantViolation("case " + std::string(1, to_char(step.config.kind)) + ": " + outcome.violation, trace);
        if (outcome.branch == "h-2" && opt.verify_steps) {
            const MopGraph& reduced = graphs[i + 1];
            const VertexSet sp = reduced.to_positions(s);
            const int w = reduced.position_of(label_of(Role::w));
            const int z = reduced.position_of(label_of(Role::z));
            if (!ipn(z, sp, reduced.graph()).contains(w))
                throw InvariantViolation("case h-2: w not in ipn(z, S')", trace);
        }
        const int before = s.size();
        s = detail::apply_outcome(std::move(s), outcome);
        if (s.size() != before + static_cast<int>(outcome.added.size()) - static_cast<int>(outcome.removed.size()))
            throw InvariantViolation("case " + outcome.branch + ": size accounting off", trace);
        step.branch = outcome.branch;
        step.added = outcome.added;
        step.removed = outcome.removed;

        if (!opt.verify_steps)
            continue;
        if (auto bad = detail::check_set(cur, s); !bad.empty())
            throw InvariantViolation("case " + outcome.branch + " at order " + std::to_string(cur.size()) + ": " + bad, trace);
        const VertexSet sp = cur.to_positions(s);
        for (const auto& claim : detail::defence_claims(outcome.branch)) {
            const int u = step.config.at(claim.defended);
            if (sp.contains(u))
                continue;
            const bool held = std::any_of(claim.defenders.begin(), claim.defenders.end(), [&](Role r) {
                const int v = step.config.at(r);
                return sp.contains(v) && totally_defends(v, u, sp, cur.graph());
            });
            if (!held)
                throw InvariantViolation("case " + outcome.branch + ": " + to_char(claim.defended) +
                                             " is not defended as claimed",
                                         trace);
        }
    }
    return {std::move(s), std::move(trace)};
}

/// Rebuilds the set from a trace, re-checking every recorded reduction against g.
inline VertexSet replay_trace(const ConstructionTrace& trace, const MopGraph& g)
{
    auto mismatch = [](const std::string& what) { return Error(Errc::TraceMismatch, what); };
    std::vector<MopGraph> graphs{g};
    try {
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const TraceStep& step = trace.steps[i];
            const MopGraph& cur = graphs.back();
            if (cur.size() != step.order)
                throw mismatch("step " + std::to_string(i) + ": order differs");
            auto cfg = match_configuration(cur, step.config.kind, step.config.start, step.config.mirrored);
            if (!cfg || !(*cfg == step.config))
                throw mismatch("step " + std::to_string(i) + ": recorded pattern is absent");
            std::vector<int> span;
            for (int p : cfg->span_positions())
                span.push_back(cur.label(p));
            if (span != step.span_labels)
                throw mismatch("step " + std::to_string(i) + ": span labels differ");
            std::vector<int> doomed;
            for (Role r : pattern(cfg->kind).deleted)
                doomed.push_back(cfg->at(r));
            if (detail::sorted_labels(cur, doomed) != step.deleted)
                throw mismatch("step " + std::to_string(i) + ": deleted vertices differ");
            graphs.push_back(remove_consecutive(cur, doomed));
        }
    } catch (const Error& e) {
        if (e.code() == Errc::TraceMismatch)
            throw;
        throw mismatch(e.what());
    }

    const MopGraph& base = graphs.back();
    if (base.size() != trace.base_order || base.labels() != trace.base_labels || base.diagonals() != trace.base_diagonals)
        throw mismatch("base graph differs");
    VertexSet s(g.universe());
    for (int l : trace.base_set) {
        if (base.position_of(l) < 0)
            throw mismatch("base set names a vertex outside the base graph");
        s.insert(l);
    }

    for (std::size_t i = trace.steps.size(); i-- > 0;) {
        const TraceStep& step = trace.steps[i];
        const MopGraph& cur = graphs[i];
        auto label_of = [&](Role r) { return cur.label(step.config.at(r)); };
        auto outcome = detail::extension_rule(step.config.kind, label_of, s);
        if (outcome.branch != step.branch || outcome.added != step.added || outcome.removed != step.removed)
            throw mismatch("step " + std::to_string(i) + ": extension differs from record");
        s = detail::apply_outcome(std::move(s), outcome);
    }
    return s;
}

} // namespace stmop

#endif // STMOP_CONSTRUCT_HPP
