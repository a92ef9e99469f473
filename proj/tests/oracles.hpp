#pragma once

// Independent reference implementations used to cross-check the library.
// Nothing here calls the library routine it is compared against.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "hahn/coeff.hpp"
#include "hahn/group.hpp"
#include "hahn/spine.hpp"

namespace oracle {

using hahn::IndexPoint;

// Sort key realizing the order on J straight from its definition.
inline std::tuple<int, long long, int, long long> order_key(const IndexPoint& p) {
    const auto b = static_cast<long long>(p.block());
    if (p.in_gamma2()) return {0, -b, p.slot() == IndexPoint::Slot::x ? 0 : 1, 0};
    if (p.slot() == IndexPoint::Slot::y) return {1, b, 0, static_cast<long long>(p.y_index())};
    return {1, b, 1, 0};
}

inline bool less(const IndexPoint& p, const IndexPoint& q) { return order_key(p) < order_key(q); }

inline bool is_y(const IndexPoint& p) { return p.slot() == IndexPoint::Slot::y; }

// All points with block indices and y-indices <= bound.
inline std::vector<IndexPoint> enumerate(unsigned bound) {
    std::vector<IndexPoint> out;
    for (unsigned n = 0; n <= bound; ++n) {
        out.push_back(IndexPoint::g2x(n));
        out.push_back(IndexPoint::g2y(n));
        out.push_back(IndexPoint::g1x(n));
        for (unsigned i = 0; i <= bound; ++i) out.push_back(IndexPoint::g1y(n, i));
    }
    std::sort(out.begin(), out.end(), less);
    return out;
}

// Searches b = p/q with q coprime to the localizing prime and q <= bound
// (default den(a) * r, which always contains the candidate a/r) such that r*b = a.
inline bool brute_divisible(const mpq_class& a, int r, bool two_local, long bound = 0) {
    const long prime = two_local ? 2 : 3;
    if (bound == 0) bound = a.get_den().get_si() * r;
    for (long q = 1; q <= bound; ++q) {
        if (q % prime == 0) continue;
        const mpq_class scaled = a * q;  // r * p = a * q must hold for an integer p
        if (scaled.get_den() != 1 || scaled.get_num() % r != 0) continue;
        mpq_class b(scaled.get_num() / r, q);
        b.canonicalize();
        if (r * b == a) return true;
    }
    return false;
}

// Elements as plain maps keyed by the order oracle, compared by the leading-coefficient rule.
using Dense = std::map<std::tuple<int, long long, int, long long>, mpq_class>;

inline Dense dense(const hahn::GroupElement& a) {
    Dense d;
    for (const auto& [p, c] : a.terms()) d[order_key(p)] += c.value();
    return d;
}

inline int compare(const hahn::GroupElement& a, const hahn::GroupElement& b) {
    Dense d = dense(a);
    for (const auto& [p, c] : b.terms()) d[order_key(p)] -= c.value();
    for (const auto& [k, v] : d) {
        if (v != 0) return sgn(v);
    }
    return 0;
}

// Order-isomorphism oracle. A segment of J is a predicate; the unique monotone
// bijection between two well-ordered (or two reverse well-ordered) segments
// matches points of equal ordinal rank.
using Segment = std::function<bool(const IndexPoint&)>;

// Rank in a well-ordered segment of G1 points, as (a, b) meaning omega*a + b.
// Each nonempty block contributes some y's followed by its x.
inline std::pair<long long, long long> g1_rank(const IndexPoint& p, const Segment& seg) {
    long long limit = 0;
    for (std::uint64_t m = 0; m < p.block(); ++m) {
        if (seg(IndexPoint::g1x(m))) ++limit;
    }
    if (!is_y(p)) return {limit + 1, 0};
    long long below = 0;
    for (std::uint64_t i = 0; i < p.y_index(); ++i) {
        if (seg(IndexPoint::g1y(p.block(), i))) ++below;
    }
    return {limit, below + (limit > 0 ? 1 : 0)};
}

// Rank from the top in a reverse well-ordered segment of G2 points.
inline long long g2_rank(const IndexPoint& p, const Segment& seg) {
    long long above = 0;
    for (std::uint64_t n = 0; n <= p.block(); ++n) {
        for (const IndexPoint q : {IndexPoint::g2x(n), IndexPoint::g2y(n)}) {
            if (seg(q) && less(p, q)) ++above;
        }
    }
    return above;
}

// Finds the point of `to` whose rank equals the rank of p in `from`.
// Both segments must be of the same kind; finite segments use ascending position.
inline std::optional<IndexPoint> match(const IndexPoint& p, const Segment& from, const Segment& to,
                                       bool finite, unsigned bound) {
    const auto points = enumerate(bound);
    std::vector<IndexPoint> src, dst;
    for (const auto& q : points) {
        if (from(q)) src.push_back(q);
        if (to(q)) dst.push_back(q);
    }
    if (finite) {
        auto it = std::find(src.begin(), src.end(), p);
        const auto k = static_cast<std::size_t>(it - src.begin());
        if (k < dst.size()) return dst[k];
        return std::nullopt;
    }
    if (p.in_gamma2()) {
        const long long r = g2_rank(p, from);
        for (const auto& q : dst) {
            if (g2_rank(q, to) == r) return q;
        }
        return std::nullopt;
    }
    const auto r = g1_rank(p, from);
    for (const auto& q : dst) {
        if (g1_rank(q, to) == r) return q;
    }
    return std::nullopt;
}

struct Piece {
    Segment from;
    Segment to;
    bool finite = false;
};

inline bool g2_block_at_least(const IndexPoint& p, std::uint64_t n) { return p.in_gamma2() && p.block() >= n; }
inline bool is_point(const IndexPoint& p, const IndexPoint& q) { return p == q; }

// Pieces of f3 read off the decomposition Γ₂ ⊕ Y ⊕ Λ₁: Γ₂ goes onto Λ₂
// (the inverse of the Λ₂ ≅ Γ₂ isomorphism), the split-off Y goes onto the
// Y of the last X ⊕ Y block as a final segment, and Λ₁ ≅ Γ₁.
inline std::vector<Piece> f3_pieces() {
    return {
        {[](const IndexPoint& p) { return p.in_gamma2(); }, [](const IndexPoint& p) { return g2_block_at_least(p, 1); }},
        {[](const IndexPoint& p) { return is_point(p, IndexPoint::g1y(0, 0)); },
         [](const IndexPoint& p) { return is_point(p, IndexPoint::g2y(0)); }, true},
        {[](const IndexPoint& p) { return p.in_gamma1() && !is_point(p, IndexPoint::g1y(0, 0)); },
         [](const IndexPoint& p) { return p.in_gamma1(); }},
    };
}

// Pieces of g3 read off Λ₂ ⊕ (X ⊕ Y) ⊕ Γ₁: Λ₂ ≅ Γ₂; X ⊕ Y becomes the final
// segment X of block 0 followed by the first Y of block 1; Γ₁ lands on the
// rest of block 1 and all later blocks.
inline std::vector<Piece> g3_pieces() {
    return {
        {[](const IndexPoint& p) { return g2_block_at_least(p, 1); }, [](const IndexPoint& p) { return p.in_gamma2(); }},
        {[](const IndexPoint& p) { return p.in_gamma2() && p.block() == 0; },
         [](const IndexPoint& p) { return is_point(p, IndexPoint::g1x(0)) || is_point(p, IndexPoint::g1y(1, 0)); }, true},
        {[](const IndexPoint& p) { return p.in_gamma1(); },
         [](const IndexPoint& p) {
             return p.in_gamma1() && (p.block() >= 2 || (p.block() == 1 && !is_point(p, IndexPoint::g1y(1, 0))));
         }},
    };
}

inline std::optional<IndexPoint> embed(const std::vector<Piece>& pieces, const IndexPoint& p, unsigned bound) {
    for (const auto& piece : pieces) {
        if (piece.from(p)) return match(p, piece.from, piece.to, piece.finite, bound);
    }
    return std::nullopt;
}

}  // namespace oracle
