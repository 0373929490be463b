#include "jt/session.hpp"

#include "jt/error.hpp"

#include <algorithm>

namespace jt {

std::string_view to_string(Decision d)
{
    switch (d) {
    case Decision::True: return "true";
    case Decision::False: return "false";
    case Decision::Unknown: return "unknown";
    case Decision::Open: return "open";
    }
    return "?";
}

namespace {

void check_known(const Frame& frame, Fact x)
{
    if (!frame.contains(x))
        throw Error{ErrorKind::UnknownFact, "fact code " + std::to_string(x.code())};
}

// Positive literal whose atom is open in both polarities.
bool is_open_atom(const Frame& frame, Fact x)
{
    return x.is_literal() && frame.is_open(x.positive()) && frame.is_open(negate(x.positive()));
}

void check_answers(const Frame& frame, const OpenAssignment& answered)
{
    for (const auto& [fact, value] : answered) {
        check_known(frame, fact);
        if (!fact.is_positive() || !is_open_atom(frame, fact))
            throw Error{ErrorKind::NotOpen, frame.to_string(fact)};
    }
}

// Status of every query in every completion of `answered`. Completion `mask`
// sets free open k to true iff bit k is set.
struct CompletionTable {
    std::vector<Fact> free;
    std::vector<std::vector<Decision>> status; // [mask][query]
};

CompletionTable completion_table(const Frame& frame, BranchEvaluation be,
                                 const OpenAssignment& answered, std::span<const Fact> queries,
                                 std::size_t cap)
{
    check_answers(frame, answered);
    for (Fact q : queries) {
        check_known(frame, q);
        if (q.is_logical())
            throw Error{ErrorKind::InvalidArgument, "query must be a literal"};
    }

    CompletionTable table;
    for (Fact x : frame.open())
        if (x.is_positive() && is_open_atom(frame, x) && !answered.contains(x))
            table.free.push_back(x);
    if (table.free.size() > cap)
        throw Error{ErrorKind::TooManyOpens, std::to_string(table.free.size()) +
                                                 " unanswered opens exceed the cap of " +
                                                 std::to_string(cap)};

    const std::uint64_t completions = std::uint64_t{1} << table.free.size();
    table.status.reserve(completions);
    for (std::uint64_t mask = 0; mask < completions; ++mask) {
        OpenAssignment total = answered;
        for (std::size_t k = 0; k < table.free.size(); ++k)
            total[table.free[k]] = ((mask >> k) & 1U) != 0;
        const Interpretation fixpoint = extended_lfp(frame, be, initial_interpretation(total));
        std::vector<Decision> row;
        for (Fact q : queries) {
            const bool yes = fixpoint.contains(q);
            const bool no = fixpoint.contains(negate(q));
            if (yes && no)
                throw Error{ErrorKind::DefectDetected, frame.to_string(q)};
            row.push_back(yes ? Decision::True : (no ? Decision::False : Decision::Unknown));
        }
        table.status.push_back(std::move(row));
    }
    return table;
}

Decision agreed(const CompletionTable& table, std::size_t query)
{
    const Decision first = table.status.front()[query];
    for (const auto& row : table.status)
        if (row[query] != first)
            return Decision::Open;
    return first;
}

std::vector<Fact> relevant_from(const CompletionTable& table, std::size_t query)
{
    std::vector<Fact> out;
    for (std::size_t k = 0; k < table.free.size(); ++k) {
        const std::uint64_t bit = std::uint64_t{1} << k;
        for (std::uint64_t mask = 0; mask < table.status.size(); ++mask) {
            if ((mask & bit) == 0 && table.status[mask][query] != table.status[mask | bit][query]) {
                out.push_back(table.free[k]);
                break;
            }
        }
    }
    return out;
}

} // namespace

std::vector<Decision> decided(const Frame& frame, BranchEvaluation be, const OpenAssignment& answered,
                              std::span<const Fact> queries, std::size_t cap)
{
    const CompletionTable table = completion_table(frame, be, answered, queries, cap);
    std::vector<Decision> out;
    for (std::size_t q = 0; q < queries.size(); ++q)
        out.push_back(agreed(table, q));
    return out;
}

Decision decided(const Frame& frame, BranchEvaluation be, const OpenAssignment& answered, Fact query,
                 std::size_t cap)
{
    return decided(frame, be, answered, std::span<const Fact>{&query, 1}, cap).front();
}

std::vector<Fact> relevant_opens(const Frame& frame, BranchEvaluation be,
                                 const OpenAssignment& answered, Fact query, std::size_t cap)
{
    const CompletionTable table =
        completion_table(frame, be, answered, std::span<const Fact>{&query, 1}, cap);
    return relevant_from(table, 0);
}

SessionState::SessionState(std::shared_ptr<const Frame> frame, BranchEvaluation be,
                           OpenAssignment answered, std::vector<Fact> queries)
    : frame_{std::move(frame)}, be_{be}, answered_{std::move(answered)}
{
    for (Fact q : queries) {
        if (std::none_of(queries_.begin(), queries_.end(),
                         [&](const QueryState& s) { return s.fact == q; }))
            queries_.push_back(QueryState{q, Decision::Open, {}, std::nullopt});
    }
    recompute();
}

void SessionState::recompute()
{
    std::vector<Fact> facts;
    for (const QueryState& q : queries_)
        facts.push_back(q.fact);
    const CompletionTable table = completion_table(*frame_, be_, answered_, facts, default_open_cap);

    // Witnesses are extracted with unanswered opens left out of I.
    std::optional<Interpretation> pessimistic;
    for (std::size_t k = 0; k < queries_.size(); ++k) {
        QueryState& q = queries_[k];
        q.status = agreed(table, k);
        q.relevant.clear();
        q.explanation.reset();
        if (q.status == Decision::Open) {
            q.relevant = relevant_from(table, k);
            continue;
        }
        if (q.status == Decision::Unknown)
            continue;
        if (!pessimistic)
            pessimistic = extended_lfp(*frame_, be_, initial_interpretation(answered_));
        const Fact target = q.status == Decision::True ? q.fact : negate(q.fact);
        if (!supports(*frame_, be_, *pessimistic, target))
            continue;
        try {
            q.explanation = explain(*frame_, be_, *pessimistic, target);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SearchSpaceTooLarge)
                throw;
        }
    }
}

SessionState session_step(const SessionState& state, const SessionAction& act)
{
    SessionState next = state;
    const Frame& frame = state.frame();
    auto normalize_open = [&](Fact x) {
        check_known(frame, x);
        if (!is_open_atom(frame, x))
            throw Error{ErrorKind::NotOpen, frame.to_string(x)};
        return x.positive();
    };

    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, action::Answer>) {
                const Fact o = normalize_open(a.open);
                next.answered_[o] = a.open.is_positive() ? a.value : !a.value;
            } else if constexpr (std::is_same_v<T, action::Retract>) {
                next.answered_.erase(normalize_open(a.open));
            } else {
                check_known(frame, a.fact);
                if (a.fact.is_logical())
                    throw Error{ErrorKind::InvalidArgument, "query must be a literal"};
                if (std::none_of(next.queries_.begin(), next.queries_.end(),
                                 [&](const QueryState& s) { return s.fact == a.fact; }))
                    next.queries_.push_back(QueryState{a.fact, Decision::Open, {}, std::nullopt});
            }
        },
        act.kind);
    next.recompute();
    return next;
}

} // namespace jt
