#include "tap/symbols.hpp"

namespace tap {

std::string symbol_token(TypeSymbol s) {
    switch (s.kind) {
    case SymbolKind::StarOrient:
        return "s" + std::to_string(s.index);
    case SymbolKind::StarInf:
        return "sinf";
    case SymbolKind::StarCross:
        return "sc" + std::to_string(s.index);
    case SymbolKind::StarInfCross:
        return "sinfc";
    case SymbolKind::O:
        return "o";
    case SymbolKind::Oh:
        return "oh";
    case SymbolKind::Oc:
        return "oc";
    case SymbolKind::Theta:
        return "t";
    case SymbolKind::ThetaH:
        return "th";
    case SymbolKind::ThetaC:
        return "tc";
    }
    return "?";
}

} // namespace tap
