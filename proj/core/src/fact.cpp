#include "jt/fact.hpp"

namespace jt {

std::string_view to_string(Logical v)
{
    switch (v) {
    case Logical::t: return "t";
    case Logical::f: return "f";
    case Logical::u: return "u";
    case Logical::i: return "i";
    }
    return "?";
}

AtomId Vocabulary::intern(std::string_view name)
{
    std::string key{name};
    if (auto it = index_.find(key); it != index_.end())
        return it->second;
    const auto id = static_cast<AtomId>(names_.size());
    names_.push_back(key);
    index_.emplace(std::move(key), id);
    return id;
}

std::optional<AtomId> Vocabulary::find(std::string_view name) const
{
    if (auto it = index_.find(std::string{name}); it != index_.end())
        return it->second;
    return std::nullopt;
}

std::string Vocabulary::to_string(Fact x) const
{
    if (x.is_logical())
        return std::string{jt::to_string(x.value())};
    const std::string& base = x.atom() < names_.size() ? names_[x.atom()]
                                                       : "#" + std::to_string(x.atom());
    return x.is_negative() ? "~" + base : base;
}

std::optional<Fact> Vocabulary::parse_fact(std::string_view text) const
{
    for (Logical v : {Logical::t, Logical::f, Logical::u, Logical::i})
        if (text == jt::to_string(v))
            return Fact::logical(v);
    Polarity p = Polarity::Positive;
    if (text.starts_with('~')) {
        p = Polarity::Negative;
        text.remove_prefix(1);
    }
    if (auto atom = find(text))
        return Fact::literal(*atom, p);
    return std::nullopt;
}

} // namespace jt
