#pragma once

#include "jt/explanation.hpp"
#include "jt/semantics.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace jt {

enum class Decision { True, False, Unknown, Open };

std::string_view to_string(Decision d);

inline constexpr std::size_t default_open_cap = 16;

/// Status of `query` in extended_lfp(frame, be, {t} u c) for every total
/// completion c of `answered`; Open unless all completions agree.
/// Throws TooManyOpens when more than `cap` opens are unanswered.
Decision decided(const Frame& frame, BranchEvaluation be, const OpenAssignment& answered, Fact query,
                 std::size_t cap = default_open_cap);

/// Batched form: one fixpoint per completion serves every query.
std::vector<Decision> decided(const Frame& frame, BranchEvaluation be,
                              const OpenAssignment& answered, std::span<const Fact> queries,
                              std::size_t cap = default_open_cap);

/// Unanswered opens o for which two completions differing only at o give the
/// query different statuses. Ascending.
std::vector<Fact> relevant_opens(const Frame& frame, BranchEvaluation be,
                                 const OpenAssignment& answered, Fact query,
                                 std::size_t cap = default_open_cap);

struct QueryState {
    Fact fact;
    Decision status = Decision::Open;
    std::vector<Fact> relevant;         // empty unless status is Open
    std::optional<Explanation> explanation;
};

struct SessionAction;

/// An immutable snapshot of a decision session.
class SessionState {
public:
    SessionState(std::shared_ptr<const Frame> frame, BranchEvaluation be,
                 OpenAssignment answered = {}, std::vector<Fact> queries = {});

    [[nodiscard]] const Frame& frame() const { return *frame_; }
    [[nodiscard]] const std::shared_ptr<const Frame>& frame_ptr() const { return frame_; }
    [[nodiscard]] BranchEvaluation evaluation() const { return be_; }
    [[nodiscard]] const OpenAssignment& answered() const { return answered_; }
    [[nodiscard]] const std::vector<QueryState>& queries() const { return queries_; }

private:
    friend SessionState session_step(const SessionState&, const SessionAction&);
    void recompute();

    std::shared_ptr<const Frame> frame_;
    BranchEvaluation be_;
    OpenAssignment answered_;
    std::vector<QueryState> queries_;
};

namespace action {
struct Answer { Fact open; bool value; };
struct Retract { Fact open; };
struct AddQuery { Fact fact; };
} // namespace action

struct SessionAction {
    std::variant<action::Answer, action::Retract, action::AddQuery> kind;
};

/// Applies one action and recomputes every query. Throws NotOpen when an
/// answer or retraction names a non-open fact and UnknownFact for facts
/// outside the frame's vocabulary.
SessionState session_step(const SessionState& state, const SessionAction& act);

} // namespace jt
