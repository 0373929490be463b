#include "jt/justification.hpp"

#include "jt/error.hpp"
#include "scc.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace jt {

namespace {

// Reachable part of a (possibly partial) justification, indexed locally.
// Defined facts without a chosen rule are kept as edge-less pending nodes.
struct LocalGraph {
    std::vector<Fact> nodes;
    std::unordered_map<std::uint32_t, int> index;
    std::vector<std::vector<int>> adj;
    std::vector<bool> pending;

    int add(Fact x)
    {
        auto [it, fresh] = index.emplace(x.code(), static_cast<int>(nodes.size()));
        if (fresh) {
            nodes.push_back(x);
            adj.emplace_back();
            pending.push_back(false);
        }
        return it->second;
    }
};

LocalGraph explore(const Frame& frame, const Justification& j, Fact start)
{
    LocalGraph g;
    std::deque<int> queue{g.add(start)};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        const Fact x = g.nodes[v];
        if (!frame.is_defined(x))
            continue;
        const Rule* r = j.rule_for(x);
        if (r == nullptr) {
            g.pending[v] = true;
            continue;
        }
        for (Fact b : r->body) {
            const std::size_t before = g.nodes.size();
            const int w = g.add(b);
            g.adj[v].push_back(w);
            if (g.nodes.size() != before)
                queue.push_back(w);
        }
    }
    return g;
}

std::vector<std::vector<int>> induced(const LocalGraph& g, const std::vector<bool>& keep)
{
    std::vector<std::vector<int>> adj(g.nodes.size());
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        if (!keep[v])
            continue;
        for (int w : g.adj[v])
            if (keep[w])
                adj[v].push_back(w);
    }
    return adj;
}

// Branch values of the reachable graph. With `partial`, unchosen defined facts
// contribute nothing; every value found this way stays a value of any
// completion of the justification.
std::set<Fact> values_impl(const Frame& frame, const Justification& j, Fact start,
                           BranchEvaluation be, bool partial)
{
    std::set<Fact> values;
    if (!partial && !is_locally_complete(frame, j, start))
        throw Error{ErrorKind::NotLocallyComplete, frame.to_string(start)};

    if (be == BranchEvaluation::Completion) {
        if (const Rule* r = j.rule_for(start))
            values.insert(r->body.begin(), r->body.end());
        return values;
    }

    if (be == BranchEvaluation::Stable) {
        // Walk the same-sign defined region; anything leaving it ends the
        // branch's same-sign prefix and is its value.
        const Polarity s = start.polarity();
        LocalGraph g;
        std::deque<int> queue{g.add(start)};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            const Rule* r = j.rule_for(g.nodes[v]);
            if (r == nullptr)
                continue;
            for (Fact b : r->body) {
                if (b.is_literal() && b.polarity() == s && frame.is_defined(b)) {
                    const std::size_t before = g.nodes.size();
                    const int w = g.add(b);
                    g.adj[v].push_back(w);
                    if (g.nodes.size() != before)
                        queue.push_back(w);
                } else {
                    values.insert(b);
                }
            }
        }
        if (detail::has_cycle(g.adj))
            values.insert(s == Polarity::Positive ? Fact::f() : Fact::t());
        return values;
    }

    const LocalGraph g = explore(frame, j, start);
    for (std::size_t v = 0; v < g.nodes.size(); ++v)
        if (!frame.is_defined(g.nodes[v]))
            values.insert(g.nodes[v]);

    const detail::SccResult scc = detail::strongly_connected(g.adj);
    if (be == BranchEvaluation::KripkeKleene) {
        if (std::find(scc.cyclic.begin(), scc.cyclic.end(), true) != scc.cyclic.end())
            values.insert(Fact::u());
        return values;
    }

    // WellFounded
    std::vector<bool> neg(g.nodes.size()), pos(g.nodes.size());
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        const bool defined = frame.is_defined(g.nodes[v]);
        neg[v] = defined && g.nodes[v].is_negative();
        pos[v] = defined && g.nodes[v].is_positive();
    }
    if (detail::has_cycle(induced(g, neg)))
        values.insert(Fact::t());
    if (detail::has_cycle(induced(g, pos)))
        values.insert(Fact::f());
    std::vector<bool> seen_pos(scc.count, false), seen_neg(scc.count, false);
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        seen_pos[scc.component[v]] = seen_pos[scc.component[v]] || pos[v];
        seen_neg[scc.component[v]] = seen_neg[scc.component[v]] || neg[v];
    }
    for (int c = 0; c < scc.count; ++c)
        if (scc.cyclic[c] && seen_pos[c] && seen_neg[c])
            values.insert(Fact::u());
    return values;
}

bool within(const std::set<Fact>& values, const Interpretation& interp)
{
    return std::all_of(values.begin(), values.end(), [&](Fact x) { return interp.contains(x); });
}

} // namespace

ReachableGraph reachable_graph(const Frame& frame, const Justification& j, Fact start)
{
    const LocalGraph g = explore(frame, j, start);
    ReachableGraph out;
    out.nodes = g.nodes;
    std::sort(out.nodes.begin(), out.nodes.end());
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        if (!frame.is_defined(g.nodes[v]))
            out.sinks.push_back(g.nodes[v]);
        for (int w : g.adj[v])
            out.edges.emplace_back(g.nodes[v], g.nodes[w]);
    }
    std::sort(out.sinks.begin(), out.sinks.end());
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

bool is_locally_complete(const Frame& frame, const Justification& j, Fact start)
{
    if (!j.contains(start))
        throw Error{ErrorKind::StartUnmapped, frame.to_string(start)};
    const LocalGraph g = explore(frame, j, start);
    return std::find(g.pending.begin(), g.pending.end(), true) == g.pending.end();
}

std::set<Fact> branch_values(const Frame& frame, const Justification& j, Fact start,
                             BranchEvaluation be)
{
    return values_impl(frame, j, start, be, false);
}

std::vector<BranchPrefix> enumerate_branch_prefixes(const Frame& frame, const Justification& j,
                                                    Fact start, std::size_t max_len)
{
    if (!j.contains(start))
        throw Error{ErrorKind::StartUnmapped, frame.to_string(start)};
    std::vector<BranchPrefix> out;
    if (max_len == 0)
        return out;
    std::vector<Fact> path{start};
    auto walk = [&](auto&& self) -> void {
        const Fact last = path.back();
        if (!frame.is_defined(last)) {
            out.push_back({path, false});
            return;
        }
        if (path.size() >= max_len) {
            out.push_back({path, true});
            return;
        }
        const Rule* r = j.rule_for(last);
        if (r == nullptr)
            throw Error{ErrorKind::NotLocallyComplete, frame.to_string(last)};
        for (Fact b : r->body) {
            path.push_back(b);
            self(self);
            path.pop_back();
        }
    };
    walk(walk);
    return out;
}

SupportResult supports_bruteforce(const Frame& frame, BranchEvaluation be,
                                  const Interpretation& interp, Fact x, std::size_t cap)
{
    if (!frame.is_defined(x))
        return {};

    Justification j;
    std::set<Fact> pending{x};
    std::size_t tried = 0;

    auto search = [&](auto&& self) -> bool {
        if (pending.empty())
            return within(values_impl(frame, j, x, be, false), interp);
        const Fact y = *pending.begin();
        pending.erase(pending.begin());
        for (RuleId id : frame.rules_for(y)) {
            if (++tried > cap)
                throw Error{ErrorKind::SearchSpaceTooLarge,
                            frame.to_string(x) + " after " + std::to_string(cap) + " choices"};
            const Rule& r = frame.rule(id);
            j.choose(r);
            std::vector<Fact> added;
            for (Fact b : r.body) {
                if (frame.is_defined(b) && !j.contains(b) && pending.insert(b).second)
                    added.push_back(b);
            }
            if (within(values_impl(frame, j, x, be, true), interp) && self(self))
                return true;
            for (Fact b : added)
                pending.erase(b);
            j.unchoose(y);
        }
        pending.insert(y);
        return false;
    };

    if (!search(search))
        return {};
    return {true, std::move(j)};
}

namespace {

// Nested fixpoint over defined facts, viewed as a game: a fact picks one of
// its rules, then every body member must be acceptable. Body members in the
// Sink slot must lie in I; the others must lie in the inner or the outer
// iterate, depending on the slot the edge was assigned.
enum class Slot : std::uint8_t { Sink, Inner, Outer };

struct CompiledRule {
    bool sinks_ok = true;
    std::vector<std::pair<int, Slot>> edges;
};

class SupportGame {
public:
    template <typename Classify>
    SupportGame(const Frame& frame, const Interpretation& interp, Classify classify)
        : nodes_{frame.defined()}
    {
        std::unordered_map<std::uint32_t, int> index;
        for (std::size_t v = 0; v < nodes_.size(); ++v)
            index.emplace(nodes_[v].code(), static_cast<int>(v));
        rules_.resize(nodes_.size());
        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            for (RuleId id : frame.rules_for(nodes_[v])) {
                CompiledRule cr;
                for (Fact b : frame.rule(id).body) {
                    const Slot slot = frame.is_defined(b) ? classify(nodes_[v], b) : Slot::Sink;
                    if (slot == Slot::Sink)
                        cr.sinks_ok = cr.sinks_ok && interp.contains(b);
                    else
                        cr.edges.emplace_back(index.at(b.code()), slot);
                }
                if (cr.sinks_ok)
                    rules_[v].push_back(std::move(cr));
            }
        }
    }

    // outer_greatest / inner_greatest select nu (true) or mu (false).
    std::vector<bool> solve(bool outer_greatest, bool inner_greatest) const
    {
        std::vector<bool> outer(nodes_.size(), outer_greatest);
        while (true) {
            std::vector<bool> inner(nodes_.size(), inner_greatest);
            while (true) {
                std::vector<bool> next = step(outer, inner);
                if (next == inner)
                    break;
                inner = std::move(next);
            }
            if (inner == outer)
                return outer;
            outer = std::move(inner);
        }
    }

    [[nodiscard]] const std::vector<Fact>& nodes() const { return nodes_; }

private:
    std::vector<bool> step(const std::vector<bool>& outer, const std::vector<bool>& inner) const
    {
        std::vector<bool> out(nodes_.size(), false);
        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            out[v] = std::any_of(rules_[v].begin(), rules_[v].end(), [&](const CompiledRule& r) {
                return std::all_of(r.edges.begin(), r.edges.end(), [&](const auto& e) {
                    return e.second == Slot::Inner ? inner[e.first] : outer[e.first];
                });
            });
        }
        return out;
    }

    std::vector<Fact> nodes_;
    std::vector<std::vector<CompiledRule>> rules_;
};

void collect(const SupportGame& game, const std::vector<bool>& win, Interpretation& out,
             std::optional<Polarity> only = std::nullopt)
{
    for (std::size_t v = 0; v < win.size(); ++v)
        if (win[v] && (!only || game.nodes()[v].polarity() == *only))
            out.insert(game.nodes()[v]);
}

} // namespace

Interpretation supported_set(const Frame& frame, BranchEvaluation be, const Interpretation& interp)
{
    Interpretation out;
    const bool has_t = interp.contains(Fact::t());
    const bool has_f = interp.contains(Fact::f());
    const bool has_u = interp.contains(Fact::u());

    switch (be) {
    case BranchEvaluation::Completion: {
        SupportGame game{frame, interp, [](Fact, Fact) { return Slot::Sink; }};
        collect(game, game.solve(false, false), out);
        return out;
    }
    case BranchEvaluation::KripkeKleene: {
        // any cycle evaluates to u
        SupportGame game{frame, interp, [](Fact, Fact) { return Slot::Inner; }};
        collect(game, game.solve(has_u, has_u), out);
        return out;
    }
    case BranchEvaluation::Stable: {
        // only same-sign defined members continue the branch's first segment
        SupportGame game{frame, interp, [](Fact x, Fact b) {
                             return b.polarity() == x.polarity() ? Slot::Inner : Slot::Sink;
                         }};
        collect(game, game.solve(has_f, has_f), out, Polarity::Positive);
        collect(game, game.solve(has_t, has_t), out, Polarity::Negative);
        return out;
    }
    case BranchEvaluation::WellFounded:
        break;
    }

    // WellFounded: an infinite branch is allowed iff the set of signs it
    // visits infinitely often is permitted ({-} needs t, {+} needs f, both
    // need u). Each combination is a reachability, safety, Buchi or co-Buchi
    // condition on edges, solved by an at most two-level nested fixpoint.
    auto switch_edge = [](Fact x, Fact b) { return x.polarity() != b.polarity(); };
    auto from_pos = [](Fact x, Fact) { return x.is_positive(); };
    auto from_neg = [](Fact x, Fact) { return x.is_negative(); };
    auto outer_if = [](auto pred) {
        return [pred](Fact x, Fact b) { return pred(x, b) ? Slot::Outer : Slot::Inner; };
    };
    auto run = [&](auto classify, bool outer_greatest, bool inner_greatest) {
        SupportGame game{frame, interp, classify};
        collect(game, game.solve(outer_greatest, inner_greatest), out);
    };
    auto all_inner = [](Fact, Fact) { return Slot::Inner; };

    if (!has_t && !has_f && !has_u)
        run(all_inner, false, false); // no infinite branch at all
    else if (has_t && has_f && has_u)
        run(all_inner, true, true); // any infinite branch
    else if (has_t && !has_f && !has_u)
        run(outer_if(from_pos), false, true); // finitely many positive steps
    else if (!has_t && has_f && !has_u)
        run(outer_if(from_neg), false, true);
    else if (has_t && has_f && !has_u)
        run(outer_if(switch_edge), false, true); // finitely many sign switches
    else if (!has_t && !has_f && has_u)
        run(outer_if(switch_edge), true, false); // infinitely many sign switches
    else if (has_t && !has_f && has_u)
        run(outer_if(from_neg), true, false); // infinitely many negative steps
    else
        run(outer_if(from_pos), true, false); // infinitely many positive steps
    return out;
}

bool supports(const Frame& frame, BranchEvaluation be, const Interpretation& interp, Fact x)
{
    return frame.is_defined(x) && supported_set(frame, be, interp).contains(x);
}

} // namespace jt
