#ifndef TAP_SYMBOLS_HPP
#define TAP_SYMBOLS_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace tap {

// Vertex decorations of the block graph. A star records the genus or
// cross-cap count of a block with no loop around it; O-family symbols mark
// blocks with exactly one loop, Theta-family symbols blocks with two or
// more. The h/c variants track whether nonplanar (handle) or nonorientable
// (cross-cap) structure recurs below the vertex.
enum class SymbolKind : std::uint8_t {
    StarOrient,   // *_i  : orientable, genus i, no loop
    StarInf,      // *_inf: orientable of infinite genus
    StarCross,    // *_i^c: nonorientable with i cross-caps, no loop
    StarInfCross, // *_inf^c: nonorientable of infinite genus
    O,
    Oh,
    Oc,
    Theta,
    ThetaH,
    ThetaC,
};

enum class VariantClass : std::uint8_t { Plain = 0, H = 1, C = 2 };

struct TypeSymbol {
    SymbolKind kind = SymbolKind::StarOrient;
    std::uint64_t index = 0; // genus for StarOrient, cross-caps for StarCross

    friend auto operator<=>(const TypeSymbol&, const TypeSymbol&) = default;
};

constexpr TypeSymbol star_orient(std::uint64_t genus) {
    return {SymbolKind::StarOrient, genus};
}
constexpr TypeSymbol star_cross(std::uint64_t crosscaps) {
    return {SymbolKind::StarCross, crosscaps};
}
constexpr TypeSymbol star_inf() {
    return {SymbolKind::StarInf, 0};
}
constexpr TypeSymbol star_inf_cross() {
    return {SymbolKind::StarInfCross, 0};
}
constexpr TypeSymbol sym_o() {
    return {SymbolKind::O, 0};
}
constexpr TypeSymbol sym_oh() {
    return {SymbolKind::Oh, 0};
}
constexpr TypeSymbol sym_oc() {
    return {SymbolKind::Oc, 0};
}
constexpr TypeSymbol sym_theta() {
    return {SymbolKind::Theta, 0};
}
constexpr TypeSymbol sym_theta_h() {
    return {SymbolKind::ThetaH, 0};
}
constexpr TypeSymbol sym_theta_c() {
    return {SymbolKind::ThetaC, 0};
}

constexpr bool is_starred(TypeSymbol s) {
    switch (s.kind) {
    case SymbolKind::StarOrient:
    case SymbolKind::StarInf:
    case SymbolKind::StarCross:
    case SymbolKind::StarInfCross:
        return true;
    default:
        return false;
    }
}

constexpr bool is_o_family(TypeSymbol s) {
    return s.kind == SymbolKind::O || s.kind == SymbolKind::Oh || s.kind == SymbolKind::Oc;
}

constexpr bool is_theta_family(TypeSymbol s) {
    return s.kind == SymbolKind::Theta || s.kind == SymbolKind::ThetaH ||
           s.kind == SymbolKind::ThetaC;
}

// O-family and Theta-family symbols mark vertices with a loop around them.
constexpr bool is_loop_kind(TypeSymbol s) {
    return is_o_family(s) || is_theta_family(s);
}

// Variant class of a loop-kind symbol; stars are Plain except the cross
// kinds, which count as C.
constexpr VariantClass variant_class(TypeSymbol s) {
    switch (s.kind) {
    case SymbolKind::O:
    case SymbolKind::Theta:
    case SymbolKind::StarOrient:
    case SymbolKind::StarInf:
        return VariantClass::Plain;
    case SymbolKind::Oh:
    case SymbolKind::ThetaH:
        return VariantClass::H;
    default:
        return VariantClass::C;
    }
}

// Applies a variant class to a loop-kind symbol, never downgrading.
constexpr TypeSymbol with_variant_at_least(TypeSymbol s, VariantClass cls) {
    if (!is_loop_kind(s) || variant_class(s) >= cls) {
        return s;
    }
    const bool theta = is_theta_family(s);
    switch (cls) {
    case VariantClass::H:
        return theta ? sym_theta_h() : sym_oh();
    case VariantClass::C:
        return theta ? sym_theta_c() : sym_oc();
    default:
        return s;
    }
}

// Token used in canonical codes and DOT labels.
std::string symbol_token(TypeSymbol s);

} // namespace tap

#endif
