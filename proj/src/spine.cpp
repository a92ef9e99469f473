#include "hahn/spine.hpp"

#include <limits>

#include "hahn/error.hpp"

namespace hahn {

std::string_view to_string(Label label) { return label == Label::x ? "X" : "Y"; }

std::strong_ordering operator<=>(const IndexPoint& p, const IndexPoint& q) {
    if (p.part_ != q.part_) {
        return p.part_ == IndexPoint::Part::g2 ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
    }
    if (p.part_ == IndexPoint::Part::g2) {
        // ℕ reversed: the larger block is more significant.
        if (p.block_ != q.block_) return q.block_ <=> p.block_;
        return p.slot_ <=> q.slot_;  // x before y
    }
    if (p.block_ != q.block_) return p.block_ <=> q.block_;
    if (p.slot_ != q.slot_) {
        // the y-run precedes the closing x
        return p.slot_ == IndexPoint::Slot::y ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
    }
    return p.y_index_ <=> q.y_index_;
}

std::string IndexPoint::str() const {
    std::string s = part_ == Part::g2 ? "G2." : "G1.";
    s += std::to_string(block_);
    if (slot_ == Slot::x) return s + ".x";
    if (part_ == Part::g2) return s + ".y";
    return s + ".y" + std::to_string(y_index_);
}

Label label(const IndexPoint& p) {
    return p.slot() == IndexPoint::Slot::x ? Label::x : Label::y;
}

IndexPoint successor(const IndexPoint& p) {
    if (p.in_gamma2()) {
        if (p.slot() == IndexPoint::Slot::x) return IndexPoint::g2y(p.block());
        if (p.block() > 0) return IndexPoint::g2x(p.block() - 1);
        return IndexPoint::g1y(0, 0);
    }
    if (p.slot() == IndexPoint::Slot::y) {
        if (p.y_index() == std::numeric_limits<std::uint64_t>::max()) {
            throw Error(ErrorKind::OutOfDomain, "y-index overflow at " + p.str());
        }
        return IndexPoint::g1y(p.block(), p.y_index() + 1);
    }
    if (p.block() == std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorKind::OutOfDomain, "block overflow at " + p.str());
    }
    return IndexPoint::g1y(p.block() + 1, 0);
}

IndexPoint definable_k() {
    auto qualifies = [](const IndexPoint& p) {
        return label(p) == Label::y && label(successor(p)) == Label::y;
    };
    // J has no least element, but the G2 blocks n >= 1 all look alike
    // (x, y followed by the next block's x), so block 1 stands in for all of
    // them. Scanning upward from there meets every label pattern in J.
    IndexPoint p = IndexPoint::g2x(1);
    while (!qualifies(p)) p = successor(p);
    return p;
}

bool Cut::contains(const IndexPoint& p) const {
    switch (kind_) {
        case Kind::nothing: return false;
        case Kind::everything: return true;
        case Kind::above_point: return p > point_;
    }
    return false;
}

bool operator==(const Cut& a, const Cut& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Cut::Kind::above_point || a.point_ == b.point_;
}

std::string Cut::str() const {
    switch (kind_) {
        case Kind::nothing: return "none";
        case Kind::everything: return "all";
        case Kind::above_point: return "above(" + point_.str() + ")";
    }
    return "?";
}

std::strong_ordering cut_cmp(const Cut& a, const Cut& b) {
    if (a.kind() != b.kind()) return a.kind() <=> b.kind();
    if (a.kind() != Cut::Kind::above_point) return std::strong_ordering::equal;
    // A higher starting point leaves a smaller final segment.
    return b.point() <=> a.point();
}

namespace {

std::uint64_t read_natural(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        const std::uint64_t digit = static_cast<std::uint64_t>(text[pos] - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
            throw SyntaxError(start, "index too large");
        }
        value = value * 10 + digit;
        ++pos;
    }
    if (pos == start) throw SyntaxError(pos, "expected a natural number");
    return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c) {
        throw SyntaxError(pos, std::string("expected '") + c + "' in index point");
    }
    ++pos;
}

}  // namespace

IndexPoint parse_point_at(std::string_view text, std::size_t& pos) {
    expect(text, pos, 'G');
    if (pos >= text.size() || (text[pos] != '1' && text[pos] != '2')) {
        throw SyntaxError(pos, "expected G1 or G2");
    }
    const bool g2 = text[pos++] == '2';
    expect(text, pos, '.');
    const std::uint64_t block = read_natural(text, pos);
    expect(text, pos, '.');
    if (pos < text.size() && text[pos] == 'x') {
        ++pos;
        return g2 ? IndexPoint::g2x(block) : IndexPoint::g1x(block);
    }
    expect(text, pos, 'y');
    if (g2) return IndexPoint::g2y(block);
    return IndexPoint::g1y(block, read_natural(text, pos));
}

IndexPoint parse_point(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    IndexPoint p = parse_point_at(text, pos);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos != text.size()) throw SyntaxError(pos, "trailing characters after point");
    return p;
}

Cut parse_cut(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (c != ' ' && c != '\t') compact.push_back(c);
    }
    if (compact == "all") return Cut::everything();
    if (compact == "none") return Cut::nothing();
    constexpr std::string_view prefix = "above(";
    if (compact.size() < prefix.size() + 1 || compact.compare(0, prefix.size(), prefix) != 0 ||
        compact.back() != ')') {
        throw SyntaxError(0, "expected above(<point>), all or none");
    }
    return Cut::above(parse_point(std::string_view(compact).substr(
        prefix.size(), compact.size() - prefix.size() - 1)));
}

}  // namespace hahn
