#include "hahn/embedding.hpp"

#include <array>
#include <string>

#include "hahn/error.hpp"

namespace hahn {

namespace {

using P = IndexPoint;

constexpr std::array<std::pair<EmbeddingId, std::string_view>, 8> kNames{{
    {EmbeddingId::f1, "f1"},
    {EmbeddingId::f2, "f2"},
    {EmbeddingId::f3, "f3"},
    {EmbeddingId::g11, "g11"},
    {EmbeddingId::g12, "g12"},
    {EmbeddingId::g1, "g1"},
    {EmbeddingId::g2, "g2"},
    {EmbeddingId::g3, "g3"},
}};

bool is_first_y(const P& p) { return p.in_gamma1() && p.block() == 0 && p.slot() == P::Slot::y && p.y_index() == 0; }

P shift_gamma1_block(const P& p) {
    if (p.slot() == P::Slot::x) return P::g1x(p.block() + 1);
    return P::g1y(p.block() + 1, p.y_index());
}

P f1_point(const P& p) {
    if (p.block() == 0 && p.slot() == P::Slot::y) return P::g1y(0, p.y_index() - 1);
    return p;
}

P f2_point(const P& p) {
    if (p.in_gamma1()) return P::g2y(0);
    return p.slot() == P::Slot::x ? P::g2x(p.block() + 1) : P::g2y(p.block() + 1);
}

P g11_point(const P& p) {
    if (p.block() == 0 && p.slot() == P::Slot::y) return P::g1y(1, p.y_index() + 1);
    return shift_gamma1_block(p);
}

P g12_point(const P& p) { return p.slot() == P::Slot::x ? P::g1x(0) : P::g1y(1, 0); }

P g2_point(const P& p) {
    return p.slot() == P::Slot::x ? P::g2x(p.block() - 1) : P::g2y(p.block() - 1);
}

// The composite tables are written out on their own rather than assembled
// from the factors; the tests check that the two agree.
P f3_point(const P& p) {
    if (p.in_gamma2()) return p.slot() == P::Slot::x ? P::g2x(p.block() + 1) : P::g2y(p.block() + 1);
    if (p.block() == 0 && p.slot() == P::Slot::y) {
        return p.y_index() == 0 ? P::g2y(0) : P::g1y(0, p.y_index() - 1);
    }
    return p;
}

P g3_point(const P& p) {
    if (p.in_gamma2()) {
        if (p.block() >= 1) return p.slot() == P::Slot::x ? P::g2x(p.block() - 1) : P::g2y(p.block() - 1);
        return p.slot() == P::Slot::x ? P::g1x(0) : P::g1y(1, 0);
    }
    if (p.block() == 0) {
        return p.slot() == P::Slot::x ? P::g1x(1) : P::g1y(1, p.y_index() + 1);
    }
    return shift_gamma1_block(p);
}

}  // namespace

std::string_view to_string(EmbeddingId id) {
    for (const auto& [e, name] : kNames) {
        if (e == id) return name;
    }
    return "?";
}

EmbeddingId parse_embedding_id(std::string_view text) {
    for (const auto& [e, name] : kNames) {
        if (name == text) return e;
    }
    // f and g name the composite embeddings.
    if (text == "f") return EmbeddingId::f3;
    if (text == "g") return EmbeddingId::g3;
    throw Error(ErrorKind::Precondition, "unknown embedding '" + std::string(text) + "'");
}

bool in_domain(EmbeddingId id, const IndexPoint& p) {
    switch (id) {
        case EmbeddingId::f1: return p.in_gamma1() && !is_first_y(p);
        case EmbeddingId::f2: return p.in_gamma2() || is_first_y(p);
        case EmbeddingId::g11: return p.in_gamma1();
        case EmbeddingId::g12: return p.in_gamma2() && p.block() == 0;
        case EmbeddingId::g1: return p.in_gamma1() || p.block() == 0;
        case EmbeddingId::g2: return p.in_gamma2() && p.block() >= 1;
        case EmbeddingId::f3:
        case EmbeddingId::g3: return true;
    }
    return false;
}

IndexPoint map_point(EmbeddingId id, const IndexPoint& p) {
    if (!in_domain(id, p)) {
        throw Error(ErrorKind::OutOfDomain,
                    p.str() + " is outside the domain of " + std::string(to_string(id)));
    }
    switch (id) {
        case EmbeddingId::f1: return f1_point(p);
        case EmbeddingId::f2: return f2_point(p);
        case EmbeddingId::f3: return f3_point(p);
        case EmbeddingId::g11: return g11_point(p);
        case EmbeddingId::g12: return g12_point(p);
        case EmbeddingId::g1: return p.in_gamma2() ? g12_point(p) : g11_point(p);
        case EmbeddingId::g2: return g2_point(p);
        case EmbeddingId::g3: return g3_point(p);
    }
    return p;
}

GroupElement apply_embedding(EmbeddingId id, const GroupElement& a) {
    std::vector<GroupElement::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& [p, c] : a.terms()) terms.emplace_back(map_point(id, p), c);
    return GroupElement::from_terms(std::move(terms));
}

}  // namespace hahn
