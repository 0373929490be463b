#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jt {

using AtomId = std::uint32_t;

/// Belnap values: true, false, unknown, inconsistent.
enum class Logical : std::uint8_t { t = 0, f = 1, u = 2, i = 3 };

enum class Polarity : std::uint8_t { Positive = 0, Negative = 1 };

enum class Order : std::uint8_t { Truth, Information };

/// An element of the fact space: a logical value or a signed literal.
///
/// Facts are packed into a single code. Logical values occupy codes 0..3 and
/// literal (a, p) sits at 4 + 2a + p, so comparing codes yields the canonical
/// iteration order: logical values, then atoms by intern id, positive first.
class Fact {
public:
    constexpr Fact() = default;

    static constexpr Fact logical(Logical v) { return Fact{static_cast<std::uint32_t>(v)}; }
    static constexpr Fact literal(AtomId atom, Polarity p = Polarity::Positive)
    {
        return Fact{literal_base + 2 * atom + static_cast<std::uint32_t>(p)};
    }
    static constexpr Fact from_code(std::uint32_t code) { return Fact{code}; }

    static constexpr Fact t() { return logical(Logical::t); }
    static constexpr Fact f() { return logical(Logical::f); }
    static constexpr Fact u() { return logical(Logical::u); }
    static constexpr Fact i() { return logical(Logical::i); }

    [[nodiscard]] constexpr bool is_logical() const { return code_ < literal_base; }
    [[nodiscard]] constexpr bool is_literal() const { return code_ >= literal_base; }
    [[nodiscard]] constexpr Logical value() const { return static_cast<Logical>(code_); }
    [[nodiscard]] constexpr AtomId atom() const { return (code_ - literal_base) / 2; }
    [[nodiscard]] constexpr Polarity polarity() const
    {
        return static_cast<Polarity>((code_ - literal_base) & 1U);
    }
    [[nodiscard]] constexpr bool is_positive() const
    {
        return is_literal() && polarity() == Polarity::Positive;
    }
    [[nodiscard]] constexpr bool is_negative() const
    {
        return is_literal() && polarity() == Polarity::Negative;
    }
    [[nodiscard]] constexpr std::uint32_t code() const { return code_; }

    /// The positive literal over the same atom.
    [[nodiscard]] constexpr Fact positive() const { return literal(atom(), Polarity::Positive); }

    constexpr auto operator<=>(const Fact&) const = default;

    static constexpr std::uint32_t literal_base = 4;

private:
    constexpr explicit Fact(std::uint32_t code) : code_{code} {}

    std::uint32_t code_ = 0;
};

constexpr Fact negate(Fact x)
{
    if (x.is_literal())
        return Fact::from_code(x.code() ^ 1U);
    switch (x.value()) {
    case Logical::t: return Fact::f();
    case Logical::f: return Fact::t();
    default: return x;
    }
}

/// Sign of a literal; logical facts have none.
constexpr std::optional<Polarity> sign(Fact x)
{
    if (x.is_logical())
        return std::nullopt;
    return x.polarity();
}

/// Belnap bilattice orders over {t, f, u, i}.
constexpr bool leq(Order order, Logical a, Logical b)
{
    if (a == b)
        return true;
    // bottom and top of each order; the two middle elements are incomparable
    const Logical bottom = order == Order::Truth ? Logical::f : Logical::u;
    const Logical top = order == Order::Truth ? Logical::t : Logical::i;
    return a == bottom || b == top;
}

/// Interned atom names ("path(a,c)"). Ids are dense and assigned in call order.
class Vocabulary {
public:
    AtomId intern(std::string_view name);
    [[nodiscard]] std::optional<AtomId> find(std::string_view name) const;
    [[nodiscard]] const std::string& name(AtomId atom) const { return names_.at(atom); }
    [[nodiscard]] std::size_t size() const { return names_.size(); }

    /// Printable form: "p", "~p", or one of "t", "f", "u", "i".
    [[nodiscard]] std::string to_string(Fact x) const;

    /// Inverse of to_string for literals and logical values.
    [[nodiscard]] std::optional<Fact> parse_fact(std::string_view text) const;

    /// Upper bound (exclusive) on codes of facts over this vocabulary.
    [[nodiscard]] std::uint32_t code_limit() const
    {
        return Fact::literal_base + 2 * static_cast<std::uint32_t>(names_.size());
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> index_;
};

std::string_view to_string(Logical v);

} // namespace jt
