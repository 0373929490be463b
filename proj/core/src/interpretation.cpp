#include "jt/interpretation.hpp"

#include <algorithm>

namespace jt {

Interpretation::Interpretation(std::initializer_list<Fact> facts)
{
    for (Fact x : facts)
        insert(x);
}

void Interpretation::insert(Fact x)
{
    if (x.code() >= bits_.size())
        bits_.resize(x.code() + 1, false);
    bits_[x.code()] = true;
}

void Interpretation::erase(Fact x)
{
    if (x.code() < bits_.size())
        bits_[x.code()] = false;
}

std::vector<Fact> Interpretation::facts() const
{
    std::vector<Fact> out;
    for (std::uint32_t c = 0; c < bits_.size(); ++c)
        if (bits_[c])
            out.push_back(Fact::from_code(c));
    return out;
}

std::size_t Interpretation::size() const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool Interpretation::includes(const Interpretation& other) const
{
    for (std::uint32_t c = 0; c < other.bits_.size(); ++c)
        if (other.bits_[c] && !(c < bits_.size() && bits_[c]))
            return false;
    return true;
}

Interpretation& Interpretation::operator|=(const Interpretation& other)
{
    if (other.bits_.size() > bits_.size())
        bits_.resize(other.bits_.size(), false);
    for (std::size_t c = 0; c < other.bits_.size(); ++c)
        if (other.bits_[c])
            bits_[c] = true;
    return *this;
}

bool operator==(const Interpretation& a, const Interpretation& b)
{
    return a.includes(b) && b.includes(a);
}

} // namespace jt
