#pragma once

#include "jt/fact.hpp"

#include <initializer_list>
#include <vector>

namespace jt {

/// A set of facts, stored densely by fact code.
class Interpretation {
public:
    Interpretation() = default;
    Interpretation(std::initializer_list<Fact> facts);

    [[nodiscard]] bool contains(Fact x) const
    {
        return x.code() < bits_.size() && bits_[x.code()];
    }
    void insert(Fact x);
    void erase(Fact x);

    template <typename Range>
    void insert_all(const Range& facts)
    {
        for (Fact x : facts)
            insert(x);
    }

    /// Members in ascending code order.
    [[nodiscard]] std::vector<Fact> facts() const;
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] bool empty() const { return size() == 0; }

    /// True if every member of `other` is a member of this set.
    [[nodiscard]] bool includes(const Interpretation& other) const;

    Interpretation& operator|=(const Interpretation& other);

    friend bool operator==(const Interpretation& a, const Interpretation& b);

private:
    std::vector<bool> bits_;
};

} // namespace jt
