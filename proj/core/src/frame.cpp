#include "jt/frame.hpp"

#include "jt/error.hpp"

#include <algorithm>
#include <set>

namespace jt {

Rule::Rule(Fact h, std::vector<Fact> b) : head{h}, body{std::move(b)}
{
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
}

std::span<const RuleId> Frame::rules_for(Fact head) const
{
    if (head.code() >= by_head_.size())
        return {};
    return by_head_[head.code()];
}

bool Frame::is_defined(Fact x) const
{
    return x.code() < by_head_.size() && !by_head_[x.code()].empty();
}

std::vector<Fact> Frame::defined() const
{
    std::vector<Fact> out;
    for (std::uint32_t c = 0; c < by_head_.size(); ++c)
        if (!by_head_[c].empty())
            out.push_back(Fact::from_code(c));
    return out;
}

std::vector<Fact> Frame::open() const
{
    std::vector<Fact> out;
    for (std::uint32_t c = Fact::literal_base; c < code_limit(); ++c)
        if (!is_defined(Fact::from_code(c)))
            out.push_back(Fact::from_code(c));
    return out;
}

std::string Frame::to_string(const Rule& r) const
{
    std::string out = to_string(r.head) + " <- {";
    for (std::size_t k = 0; k < r.body.size(); ++k) {
        if (k > 0)
            out += ", ";
        out += to_string(r.body[k]);
    }
    return out + "}";
}

Frame build_frame(std::vector<Rule> rules, std::shared_ptr<const Vocabulary> vocab)
{
    Frame frame;
    frame.vocab_ = std::move(vocab);
    const std::uint32_t limit = frame.vocab_->code_limit();
    frame.by_head_.assign(limit, {});

    std::set<std::pair<Fact, std::vector<Fact>>> seen;
    for (Rule& r : rules) {
        std::sort(r.body.begin(), r.body.end());
        r.body.erase(std::unique(r.body.begin(), r.body.end()), r.body.end());
        if (r.head.is_logical())
            throw Error{ErrorKind::LogicalHead, frame.to_string(r)};
        if (r.body.empty())
            throw Error{ErrorKind::EmptyBody, frame.to_string(r)};
        if (r.head.code() >= limit ||
            std::any_of(r.body.begin(), r.body.end(), [&](Fact x) { return x.code() >= limit; }))
            throw Error{ErrorKind::UnknownFact, frame.to_string(r)};
        if (!seen.emplace(r.head, r.body).second)
            continue;
        frame.by_head_[r.head.code()].push_back(frame.rules_.size());
        frame.rules_.push_back(std::move(r));
    }
    return frame;
}

namespace {

// Distinct element-wise negated selections over `bodies`, in lexicographic
// selection order. Partial products are deduplicated stage by stage, which
// yields the same set as deduplicating the full product.
std::vector<std::vector<Fact>> dual_bodies(const std::vector<const Rule*>& bodies, std::size_t cap,
                                           const Frame& frame, Fact head)
{
    std::vector<std::vector<Fact>> partial{{}};
    for (const Rule* r : bodies) {
        std::vector<std::vector<Fact>> next;
        std::set<std::vector<Fact>> seen;
        for (const auto& prefix : partial) {
            for (Fact member : r->body) {
                std::vector<Fact> extended = prefix;
                const Fact neg = negate(member);
                auto pos = std::lower_bound(extended.begin(), extended.end(), neg);
                if (pos == extended.end() || *pos != neg)
                    extended.insert(pos, neg);
                if (seen.insert(extended).second)
                    next.push_back(std::move(extended));
                if (next.size() > cap)
                    throw Error{ErrorKind::ComplementTooLarge,
                                frame.to_string(head) + " exceeds " + std::to_string(cap) +
                                    " dual bodies"};
            }
        }
        partial = std::move(next);
    }
    return partial;
}

} // namespace

Frame complement(const Frame& frame, std::span<const Fact> heads, std::size_t cap)
{
    std::vector<Rule> rules{frame.rules().begin(), frame.rules().end()};
    for (Fact head : heads) {
        if (!frame.is_defined(head))
            throw Error{ErrorKind::NotDefined, frame.to_string(head)};
        std::vector<const Rule*> bodies;
        for (RuleId id : frame.rules_for(head))
            bodies.push_back(&frame.rule(id));
        for (auto& body : dual_bodies(bodies, cap, frame, head))
            rules.emplace_back(negate(head), std::move(body));
    }
    return build_frame(std::move(rules), frame.vocabulary_ptr());
}

} // namespace jt
