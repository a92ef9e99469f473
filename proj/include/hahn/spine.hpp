#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "hahn/coeff.hpp"

namespace hahn {

/// Which summand group sits at an index: X = Z_(2) or Y = Z_(3).
enum class Label { x, y };

std::string_view to_string(Label label);
inline LocalTag tag_for(Label label) { return label == Label::x ? LocalTag::x2 : LocalTag::y3; }

/// A position of the index set J of Γ = Γ₂ ⊕ Γ₁.
///
/// Ascending order is decreasing significance:
///
///   … < G2.1.x < G2.1.y < G2.0.x < G2.0.y
///     < G1.0.y0 < G1.0.y1 < … < G1.0.x < G1.1.y0 < … < G1.1.x < …
///
/// Γ₂ blocks run over ℕ in reverse, so block 0 is its least significant
/// block; Γ₁ blocks run over ℕ forwards, each an ω-sequence of Y slots
/// followed by one X slot.
class IndexPoint {
public:
    enum class Part : std::uint8_t { g2, g1 };
    enum class Slot : std::uint8_t { x, y };

    static IndexPoint g2x(std::uint64_t block) { return {Part::g2, block, Slot::x, 0}; }
    static IndexPoint g2y(std::uint64_t block) { return {Part::g2, block, Slot::y, 0}; }
    static IndexPoint g1y(std::uint64_t block, std::uint64_t i) { return {Part::g1, block, Slot::y, i}; }
    static IndexPoint g1x(std::uint64_t block) { return {Part::g1, block, Slot::x, 0}; }

    Part part() const { return part_; }
    std::uint64_t block() const { return block_; }
    Slot slot() const { return slot_; }
    /// Position inside a Γ₁ block's Y run; 0 for every other point.
    std::uint64_t y_index() const { return y_index_; }

    bool in_gamma2() const { return part_ == Part::g2; }
    bool in_gamma1() const { return part_ == Part::g1; }

    friend std::strong_ordering operator<=>(const IndexPoint& p, const IndexPoint& q);
    friend bool operator==(const IndexPoint& p, const IndexPoint& q) = default;

    std::string str() const;

private:
    IndexPoint(Part part, std::uint64_t block, Slot slot, std::uint64_t y_index)
        : part_(part), block_(block), slot_(slot), y_index_(y_index) {}

    Part part_;
    std::uint64_t block_;
    Slot slot_;
    std::uint64_t y_index_;
};

inline std::strong_ordering point_cmp(const IndexPoint& p, const IndexPoint& q) { return p <=> q; }

Label label(const IndexPoint& p);

/// Immediate successor in J; every point has one.
IndexPoint successor(const IndexPoint& p);

/// The least point k with label(k) = label(successor(k)) = Y, i.e. G2.0.y.
IndexPoint definable_k();

/// A final segment of J, i.e. the index set of a convex subgroup.
class Cut {
public:
    enum class Kind : std::uint8_t { nothing, above_point, everything };

    static Cut above(const IndexPoint& p) { return Cut(Kind::above_point, p); }
    static Cut everything() { return Cut(Kind::everything, IndexPoint::g2x(0)); }
    static Cut nothing() { return Cut(Kind::nothing, IndexPoint::g2x(0)); }

    Kind kind() const { return kind_; }
    /// Only meaningful for above_point.
    const IndexPoint& point() const { return point_; }

    bool contains(const IndexPoint& p) const;

    friend bool operator==(const Cut& a, const Cut& b);

    std::string str() const;

private:
    Cut(Kind kind, IndexPoint p) : kind_(kind), point_(p) {}

    Kind kind_;
    IndexPoint point_;
};

inline bool cut_member(const IndexPoint& p, const Cut& c) { return c.contains(p); }

/// Containment order on final segments (lt = strictly smaller segment).
std::strong_ordering cut_cmp(const Cut& a, const Cut& b);

/// Parses one point literal starting at `pos`, advancing it past the literal.
IndexPoint parse_point_at(std::string_view text, std::size_t& pos);
IndexPoint parse_point(std::string_view text);
/// `above(<point>)`, `all` or `none`.
Cut parse_cut(std::string_view text);

}  // namespace hahn
