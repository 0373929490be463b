#pragma once

#include "jt/fact.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace jt {

/// head <- body. The body is kept sorted by fact code and free of duplicates.
struct Rule {
    Fact head;
    std::vector<Fact> body;

    Rule() = default;
    Rule(Fact head, std::vector<Fact> body);

    bool operator==(const Rule&) const = default;
};

using RuleId = std::size_t;

inline constexpr std::size_t default_complement_cap = 10'000;

/// A fact space over a vocabulary together with a rule set.
///
/// Defined facts are exactly the rule heads; every other literal over the
/// vocabulary is open. Rules are stored in declaration order and looked up per
/// head in that same order.
class Frame {
public:
    Frame() = default;

    [[nodiscard]] const Vocabulary& vocabulary() const { return *vocab_; }
    [[nodiscard]] const std::shared_ptr<const Vocabulary>& vocabulary_ptr() const { return vocab_; }

    [[nodiscard]] std::span<const Rule> rules() const { return rules_; }
    [[nodiscard]] const Rule& rule(RuleId id) const { return rules_[id]; }
    [[nodiscard]] std::span<const RuleId> rules_for(Fact head) const;

    [[nodiscard]] bool is_defined(Fact x) const;
    [[nodiscard]] bool is_open(Fact x) const { return x.is_literal() && contains(x) && !is_defined(x); }
    [[nodiscard]] bool contains(Fact x) const { return x.code() < vocab_->code_limit(); }

    /// Defined / open facts in ascending code order.
    [[nodiscard]] std::vector<Fact> defined() const;
    [[nodiscard]] std::vector<Fact> open() const;

    [[nodiscard]] std::uint32_t code_limit() const { return vocab_->code_limit(); }

    [[nodiscard]] std::string to_string(Fact x) const { return vocab_->to_string(x); }
    [[nodiscard]] std::string to_string(const Rule& r) const;

private:
    friend Frame build_frame(std::vector<Rule> rules, std::shared_ptr<const Vocabulary> vocab);

    std::shared_ptr<const Vocabulary> vocab_ = std::make_shared<Vocabulary>();
    std::vector<Rule> rules_;
    std::vector<std::vector<RuleId>> by_head_; // indexed by fact code
};

/// Validates and indexes `rules`. Duplicates are dropped, keeping the first
/// occurrence. Throws EmptyBody or LogicalHead naming the offending rule.
Frame build_frame(std::vector<Rule> rules, std::shared_ptr<const Vocabulary> vocab);

/// Adds the dual rules for ~x for every x in `heads`: one body per selection
/// of a member from each body of x, with every selected member negated.
/// Throws NotDefined for a head without rules and ComplementTooLarge when a
/// head yields more than `cap` distinct dual bodies.
Frame complement(const Frame& frame, std::span<const Fact> heads,
                 std::size_t cap = default_complement_cap);

} // namespace jt
