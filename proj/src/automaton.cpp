#include "tap/automaton.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tap {

BlockSpec signature_block(const SurfaceSignature& sig) {
    BlockSpec b;
    b.signature = sig;
    return b;
}

BlockSpec triangulation_block(Triangulation tri) {
    BlockSpec b;
    b.triangulation = std::move(tri);
    return b;
}

SurfaceSignature block_signature(const BlockSpec& block) {
    if (block.signature) {
        return *block.signature;
    }
    return signature(validate_triangulation(*block.triangulation));
}

std::uint64_t block_boundary_count(const BlockSpec& block) {
    return block_signature(block).boundary_count;
}

namespace {

// Cursor over one physical line; tracks 1-based columns for errors.
class LineScanner {
public:
    LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    bool at_end() {
        skip_spaces();
        return pos_ >= text_.size();
    }

    std::string_view next_token(const char* what) {
        skip_spaces();
        if (pos_ >= text_.size()) {
            throw ParseError(line_, pos_ + 1, std::string("expected ") + what);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        last_col_ = start + 1;
        return text_.substr(start, pos_ - start);
    }

    void expect_end() {
        if (!at_end()) {
            throw ParseError(line_, pos_ + 1, "unexpected trailing text");
        }
    }

    std::size_t line() const { return line_; }
    std::size_t last_col() const { return last_col_; }

private:
    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
    std::size_t last_col_ = 1;
};

std::uint64_t parse_number(LineScanner& sc, std::string_view token, const char* what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ParseError(sc.line(), sc.last_col(),
                         std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    std::uint64_t value = 0;
    for (char c : token) {
        if (value > (UINT64_MAX - (c - '0')) / 10) {
            throw ParseError(sc.line(), sc.last_col(), std::string(what) + " is out of range");
        }
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

std::uint64_t next_number(LineScanner& sc, const char* what) {
    return parse_number(sc, sc.next_token(what), what);
}

// key=value attribute of a signature declaration.
std::pair<std::string_view, std::string_view> split_attr(LineScanner& sc, std::string_view token,
                                                         std::string_view expected_key) {
    std::size_t eq = token.find('=');
    if (eq == std::string_view::npos) {
        throw ParseError(sc.line(), sc.last_col(),
                         "expected " + std::string(expected_key) + "=<value>");
    }
    return {token.substr(0, eq), token.substr(eq + 1)};
}

Triangle parse_triangle(LineScanner& sc, std::string_view token) {
    Triangle t{};
    std::size_t field = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= token.size(); ++i) {
        if (i == token.size() || token[i] == ',') {
            if (field >= 3) {
                throw ParseError(sc.line(), sc.last_col(), "triangle has more than three vertices");
            }
            std::uint64_t v = parse_number(sc, token.substr(start, i - start), "vertex id");
            if (v > UINT32_MAX) {
                throw ParseError(sc.line(), sc.last_col(), "vertex id is out of range");
            }
            t[field++] = static_cast<VertexId>(v);
            start = i + 1;
        }
    }
    if (field != 3) {
        throw ParseError(sc.line(), sc.last_col(), "triangle needs exactly three vertices");
    }
    return t;
}

} // namespace

TopologicalAutomaton parse(const std::string& text) {
    std::map<std::uint32_t, BlockSpec> blocks;
    std::map<std::uint32_t, std::pair<std::uint32_t, std::size_t>> incoming; // k -> (boundary, line)
    std::vector<std::pair<Arrow, std::size_t>> arrows;                       // arrow, line

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    bool saw_header = false;

    while (std::getline(in, raw)) {
        ++line_no;
        if (std::size_t hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        LineScanner sc(raw, line_no);
        if (sc.at_end()) {
            continue;
        }
        std::string_view word = sc.next_token("declaration");

        if (!saw_header) {
            if (word != "automaton") {
                throw ParseError(line_no, sc.last_col(), "expected 'automaton v1' header");
            }
            std::string_view version = sc.next_token("format version");
            if (version != "v1") {
                throw ParseError(line_no, sc.last_col(),
                                 "unsupported format version '" + std::string(version) + "'");
            }
            sc.expect_end();
            saw_header = true;
            continue;
        }

        if (word == "block") {
            std::uint64_t k = next_number(sc, "block index");
            if (k > UINT32_MAX) {
                throw ParseError(line_no, sc.last_col(), "block index is out of range");
            }
            if (blocks.count(static_cast<std::uint32_t>(k))) {
                throw ParseError(line_no, sc.last_col(),
                                 "duplicate declaration of block " + std::to_string(k));
            }
            std::string_view form = sc.next_token("'signature' or 'triangulation'");
            if (form == "signature") {
                auto [okey, oval] = split_attr(sc, sc.next_token("orientable=<bool>"), "orientable");
                if (okey != "orientable" || (oval != "true" && oval != "false")) {
                    throw ParseError(line_no, sc.last_col(), "expected orientable=<true|false>");
                }
                bool orientable = oval == "true";
                auto [gkey, gval] = split_attr(
                    sc, sc.next_token(orientable ? "genus=<g>" : "crosscaps=<c>"),
                    orientable ? "genus" : "crosscaps");
                if (orientable && gkey != "genus") {
                    throw ParseError(line_no, sc.last_col(), "orientable blocks take genus=<g>");
                }
                if (!orientable && gkey != "crosscaps") {
                    throw ParseError(line_no, sc.last_col(),
                                     "nonorientable blocks take crosscaps=<c>");
                }
                std::uint64_t amount = parse_number(sc, gval, gkey == "genus" ? "genus" : "crosscaps");
                if (!orientable && amount == 0) {
                    throw ParseError(line_no, sc.last_col(),
                                     "a nonorientable block needs at least one cross-cap");
                }
                auto [bkey, bval] = split_attr(sc, sc.next_token("boundaries=<b>"), "boundaries");
                if (bkey != "boundaries") {
                    throw ParseError(line_no, sc.last_col(), "expected boundaries=<b>");
                }
                std::uint64_t boundaries = parse_number(sc, bval, "boundary count");
                sc.expect_end();
                blocks[static_cast<std::uint32_t>(k)] = signature_block(
                    orientable ? orientable_signature(amount, boundaries)
                               : nonorientable_signature(amount, boundaries));
            } else if (form == "triangulation") {
                std::vector<Triangle> tris;
                while (!sc.at_end()) {
                    tris.push_back(parse_triangle(sc, sc.next_token("triangle a,b,c")));
                }
                if (tris.empty()) {
                    throw ParseError(line_no, sc.last_col(),
                                     "triangulated block needs at least one triangle");
                }
                try {
                    Triangulation tri = make_triangulation(std::move(tris));
                    validate_triangulation(tri);
                    blocks[static_cast<std::uint32_t>(k)] = triangulation_block(std::move(tri));
                } catch (const Error& e) {
                    throw ParseError(line_no, 1,
                                     "block " + std::to_string(k) +
                                         " is not a valid surface: " + e.what());
                }
            } else {
                throw ParseError(line_no, sc.last_col(),
                                 "expected 'signature' or 'triangulation', got '" +
                                     std::string(form) + "'");
            }
        } else if (word == "incoming") {
            std::uint64_t k = next_number(sc, "block index");
            if (k == 0) {
                throw ParseError(line_no, sc.last_col(),
                                 "block 0 cannot have an incoming boundary");
            }
            if (k > UINT32_MAX) {
                throw ParseError(line_no, sc.last_col(), "block index is out of range");
            }
            std::uint64_t boundary = next_number(sc, "boundary index");
            sc.expect_end();
            auto [it, inserted] = incoming.emplace(
                static_cast<std::uint32_t>(k),
                std::make_pair(static_cast<std::uint32_t>(boundary), line_no));
            if (!inserted) {
                throw ParseError(line_no, 1,
                                 "duplicate incoming assignment for block " + std::to_string(k) +
                                     " (first on line " + std::to_string(it->second.second) + ")");
            }
        } else if (word == "arrow") {
            Arrow a;
            std::uint64_t k = next_number(sc, "source block");
            std::uint64_t boundary = next_number(sc, "boundary index");
            std::string_view sep = sc.next_token("'->'");
            if (sep != "->") {
                throw ParseError(line_no, sc.last_col(), "expected '->'");
            }
            std::uint64_t l = next_number(sc, "target block");
            sc.expect_end();
            if (k > UINT32_MAX || l > UINT32_MAX || boundary > UINT32_MAX) {
                throw ParseError(line_no, 1, "arrow index is out of range");
            }
            a.source_block = static_cast<std::uint32_t>(k);
            a.source_boundary = static_cast<std::uint32_t>(boundary);
            a.target_block = static_cast<std::uint32_t>(l);
            arrows.emplace_back(a, line_no);
        } else {
            throw ParseError(line_no, sc.last_col(),
                             "unknown declaration '" + std::string(word) + "'");
        }
    }

    if (!saw_header) {
        throw ParseError(1, 1, "expected 'automaton v1' header");
    }
    if (blocks.empty()) {
        throw ParseError(line_no, 1, "document declares no blocks");
    }

    // Blocks must form the contiguous range 0..p.
    std::uint32_t expected = 0;
    for (const auto& [k, spec] : blocks) {
        if (k != expected) {
            throw ParseError(line_no, 1,
                             "block indices must be contiguous from 0; block " +
                                 std::to_string(expected) + " is missing");
        }
        ++expected;
    }

    TopologicalAutomaton aut;
    aut.blocks.reserve(blocks.size());
    for (auto& [k, spec] : blocks) {
        aut.blocks.push_back(std::move(spec));
    }
    for (const auto& [k, entry] : incoming) {
        if (k >= aut.blocks.size()) {
            throw ParseError(entry.second, 1,
                             "unknown block reference " + std::to_string(k) + " in incoming");
        }
        aut.incoming[k] = entry.first;
    }
    for (const auto& [arrow, line] : arrows) {
        if (arrow.source_block >= aut.blocks.size()) {
            throw ParseError(line, 1,
                             "unknown block reference " + std::to_string(arrow.source_block) +
                                 " in arrow");
        }
        if (arrow.target_block >= aut.blocks.size()) {
            throw ParseError(line, 1,
                             "unknown block reference " + std::to_string(arrow.target_block) +
                                 " in arrow");
        }
        aut.arrows.push_back(arrow);
    }
    return aut;
}

std::string serialize(const TopologicalAutomaton& aut) {
    std::ostringstream os;
    os << "automaton v1\n";
    for (std::size_t k = 0; k < aut.blocks.size(); ++k) {
        const BlockSpec& block = aut.blocks[k];
        if (block.signature) {
            const SurfaceSignature& sig = *block.signature;
            os << "block " << k << " signature orientable=" << (sig.orientable ? "true" : "false");
            if (sig.orientable) {
                os << " genus=" << sig.genus;
            } else {
                os << " crosscaps=" << sig.crosscaps;
            }
            os << " boundaries=" << sig.boundary_count << "\n";
        } else {
            os << "block " << k << " triangulation";
            for (const Triangle& t : block.triangulation->canonical().triangles) {
                os << " " << t[0] << "," << t[1] << "," << t[2];
            }
            os << "\n";
        }
    }
    for (const auto& [k, boundary] : aut.incoming) {
        os << "incoming " << k << " " << boundary << "\n";
    }
    for (const Arrow& a : aut.arrows) {
        os << "arrow " << a.source_block << " " << a.source_boundary << " -> " << a.target_block
           << "\n";
    }
    return os.str();
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const ValidationIssue& issue : issues) {
        os << issue.message << "\n";
    }
    return os.str();
}

ValidationReport validate(const TopologicalAutomaton& aut) {
    ValidationReport report;
    auto add = [&](ValidationIssueKind kind, std::uint32_t block, std::uint32_t boundary,
                   std::string msg) {
        report.issues.push_back({kind, block, boundary, std::move(msg)});
    };

    std::vector<std::uint64_t> boundary_counts(aut.blocks.size(), 0);
    for (std::size_t k = 0; k < aut.blocks.size(); ++k) {
        boundary_counts[k] = block_boundary_count(aut.blocks[k]);
    }

    for (std::uint32_t k = 1; k < aut.blocks.size(); ++k) {
        auto it = aut.incoming.find(k);
        if (it == aut.incoming.end()) {
            add(ValidationIssueKind::MissingIncoming, k, 0,
                "block " + std::to_string(k) + " has no incoming boundary designation");
        } else if (it->second >= boundary_counts[k]) {
            add(ValidationIssueKind::BoundaryOutOfRange, k, it->second,
                "incoming boundary " + std::to_string(it->second) + " of block " +
                    std::to_string(k) + " is out of range (block has " +
                    std::to_string(boundary_counts[k]) + " boundaries)");
        }
    }
    if (aut.incoming.count(0)) {
        add(ValidationIssueKind::BoundaryOutOfRange, 0, aut.incoming.at(0),
            "block 0 admits no incoming boundary designation");
    }
    for (const auto& [k, boundary] : aut.incoming) {
        if (k >= aut.blocks.size()) {
            add(ValidationIssueKind::BoundaryOutOfRange, k, boundary,
                "incoming references undeclared block " + std::to_string(k));
        }
    }

    // Arrow structure: each outgoing boundary the domain of exactly one arrow.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> arrow_counts;
    for (const Arrow& a : aut.arrows) {
        if (a.source_block >= aut.blocks.size()) {
            add(ValidationIssueKind::BoundaryOutOfRange, a.source_block, a.source_boundary,
                "arrow source references undeclared block " + std::to_string(a.source_block));
            continue;
        }
        if (a.target_block >= aut.blocks.size()) {
            add(ValidationIssueKind::BoundaryOutOfRange, a.target_block, 0,
                "arrow target references undeclared block " + std::to_string(a.target_block));
            continue;
        }
        if (a.source_boundary >= boundary_counts[a.source_block]) {
            add(ValidationIssueKind::BoundaryOutOfRange, a.source_block, a.source_boundary,
                "arrow source boundary " + std::to_string(a.source_boundary) + " of block " +
                    std::to_string(a.source_block) + " is out of range");
            continue;
        }
        auto inc = aut.incoming.find(a.source_block);
        if (inc != aut.incoming.end() && inc->second == a.source_boundary) {
            add(ValidationIssueKind::BoundaryOutOfRange, a.source_block, a.source_boundary,
                "arrow departs from the incoming boundary " + std::to_string(a.source_boundary) +
                    " of block " + std::to_string(a.source_block));
            continue;
        }
        if (a.target_block == 0) {
            add(ValidationIssueKind::BoundaryOutOfRange, 0, 0,
                "arrow targets block 0, which has no incoming boundary C_0");
        }
        if (a.source_block > a.target_block) {
            add(ValidationIssueKind::BackwardArrow, a.source_block, a.source_boundary,
                "arrow from block " + std::to_string(a.source_block) + " to block " +
                    std::to_string(a.target_block) + " runs backward");
        }
        ++arrow_counts[{a.source_block, a.source_boundary}];
    }

    for (std::uint32_t k = 0; k < aut.blocks.size(); ++k) {
        auto inc = aut.incoming.find(k);
        for (std::uint32_t b = 0; b < boundary_counts[k]; ++b) {
            if (inc != aut.incoming.end() && inc->second == b) {
                continue;
            }
            auto it = arrow_counts.find({k, b});
            std::uint64_t n = it == arrow_counts.end() ? 0 : it->second;
            if (n == 0) {
                add(ValidationIssueKind::MissingArrow, k, b,
                    "outgoing boundary " + std::to_string(b) + " of block " + std::to_string(k) +
                        " is the domain of no arrow");
            } else if (n > 1) {
                add(ValidationIssueKind::DuplicateArrow, k, b,
                    "outgoing boundary " + std::to_string(b) + " of block " + std::to_string(k) +
                        " is the domain of " + std::to_string(n) + " arrows");
            }
        }
    }
    return report;
}

void validate_or_throw(const TopologicalAutomaton& aut) {
    ValidationReport report = validate(aut);
    if (!report.ok()) {
        throw Error("invalid automaton:\n" + report.to_string());
    }
}

Development develop(const TopologicalAutomaton& aut, std::uint64_t stage,
                    std::uint64_t stage_cap) {
    if (stage > stage_cap) {
        throw StageCapExceeded(stage, stage_cap);
    }

    std::vector<SurfaceSignature> sigs(aut.blocks.size());
    for (std::size_t k = 0; k < aut.blocks.size(); ++k) {
        sigs[k] = block_signature(aut.blocks[k]);
    }

    // Open boundary circles of M_s, bucketed by the arrow at that circle.
    std::vector<BigInt> open(aut.arrows.size(), 0);
    for (std::size_t i = 0; i < aut.arrows.size(); ++i) {
        if (aut.arrows[i].source_block == 0) {
            open[i] = 1;
        }
    }

    Development dev;
    dev.stage = stage;
    dev.euler_characteristic = sigs[0].euler_characteristic;

    for (std::uint64_t s = 0; s < stage; ++s) {
        std::map<std::uint32_t, BigInt> fresh;
        for (std::size_t i = 0; i < aut.arrows.size(); ++i) {
            if (open[i] != 0) {
                fresh[aut.arrows[i].target_block] += open[i];
            }
        }
        for (auto& count : open) {
            count = 0;
        }
        for (std::size_t i = 0; i < aut.arrows.size(); ++i) {
            auto it = fresh.find(aut.arrows[i].source_block);
            if (it != fresh.end()) {
                open[i] = it->second;
            }
        }
        for (const auto& [block, count] : fresh) {
            dev.copy_counts[block] += count;
            dev.euler_characteristic += count * sigs[block].euler_characteristic;
        }
    }

    dev.boundary_count = 0;
    for (const BigInt& count : open) {
        dev.boundary_count += count;
    }

    dev.orientable = sigs[0].orientable;
    for (const auto& [block, count] : dev.copy_counts) {
        if (count > 0 && !sigs[block].orientable) {
            dev.orientable = false;
        }
    }
    BigInt defect = 2 - dev.euler_characteristic - dev.boundary_count;
    dev.genus_or_crosscaps = dev.orientable ? defect / 2 : defect;
    return dev;
}

} // namespace tap
