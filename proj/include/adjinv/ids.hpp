#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "adjinv/errors.hpp"

namespace adjinv {

/// Generator families: the determinantal minors J, their chain refinements
/// J' and J'', the diagonal-weight generators y_i, and the fully invariant
/// generators Y_{i,j}.
enum class GenKind { J, JPrime, JDoublePrime, SmallY, BigY };

/// One named generator. j is unused for kind SmallY.
struct InvariantId {
    GenKind kind = GenKind::J;
    int i = 0;
    int j = 0;

    friend auto operator<=>(const InvariantId&, const InvariantId&) = default;
};

inline InvariantId id_J(int i, int j) { return {GenKind::J, i, j}; }
inline InvariantId id_Jp(int i, int j) { return {GenKind::JPrime, i, j}; }
inline InvariantId id_Jpp(int i, int j) { return {GenKind::JDoublePrime, i, j}; }
inline InvariantId id_y(int i) { return {GenKind::SmallY, i, 0}; }
inline InvariantId id_Y(int i, int j) { return {GenKind::BigY, i, j}; }

/// Index-range validity for dimension n:
///   J, J':  1 <= i <= n, 0 <= j <= i-1
///   J'', Y: 2 <= i <= n, 0 <= j <= i-2
///   y:      1 <= i <= n
inline bool valid_id(int n, const InvariantId& id) {
    switch (id.kind) {
        case GenKind::J:
        case GenKind::JPrime:
            return 1 <= id.i && id.i <= n && 0 <= id.j && id.j <= id.i - 1;
        case GenKind::JDoublePrime:
        case GenKind::BigY:
            return 2 <= id.i && id.i <= n && 0 <= id.j && id.j <= id.i - 2;
        case GenKind::SmallY:
            return 1 <= id.i && id.i <= n;
    }
    return false;
}

inline std::string to_string(const InvariantId& id) {
    switch (id.kind) {
        case GenKind::J: return "J:" + std::to_string(id.i) + "," + std::to_string(id.j);
        case GenKind::JPrime: return "J':" + std::to_string(id.i) + "," + std::to_string(id.j);
        case GenKind::JDoublePrime:
            return "J'':" + std::to_string(id.i) + "," + std::to_string(id.j);
        case GenKind::SmallY: return "y:" + std::to_string(id.i);
        case GenKind::BigY: return "Y:" + std::to_string(id.i) + "," + std::to_string(id.j);
    }
    return "?";
}

/// Parses "J:i,j", "J':i,j" (alias "Jp:i,j"), "J'':i,j" (alias "Jpp:i,j"),
/// "y:i", "Y:i,j". Throws std::invalid_argument on malformed input.
inline InvariantId parse_invariant_id(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("malformed invariant id: '" + std::string(s) + "'"); };
    auto colon = s.find(':');
    if (colon == std::string_view::npos) fail();
    std::string_view kind = s.substr(0, colon), rest = s.substr(colon + 1);
    GenKind k;
    bool has_j = true;
    if (kind == "J") k = GenKind::J;
    else if (kind == "J'" || kind == "Jp") k = GenKind::JPrime;
    else if (kind == "J''" || kind == "Jpp") k = GenKind::JDoublePrime;
    else if (kind == "Y") k = GenKind::BigY;
    else if (kind == "y") { k = GenKind::SmallY; has_j = false; }
    else { fail(); return {}; }
    auto parse_int = [&](std::string_view t) -> int {
        if (t.empty() || t.size() > 6) fail();
        int v = 0;
        for (char c : t) {
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
        }
        return v;
    };
    if (!has_j) return id_y(parse_int(rest));
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) fail();
    return {k, parse_int(rest.substr(0, comma)), parse_int(rest.substr(comma + 1))};
}

// ---------------------------------------------------------------------------
// Minor specifications

enum class RowSource { X, Adj };

/// One row of a minor: taken either from X or from its adjugate (1-based).
struct RowRef {
    RowSource source;
    int row;
    friend bool operator==(const RowRef&, const RowRef&) = default;
};

/// Row-source plan of the minor J_{i,j}: an i x i determinant on columns
/// 1..i whose first i-j rows are X rows n-i+j+1..n and whose last j rows
/// are adjugate rows n-j+1..n.
struct MinorSpec {
    int n = 0, i = 0, j = 0;
    std::vector<RowRef> row_plan;
    int col_count() const { return i; }
};

inline MinorSpec minor_spec(int n, int i, int j) {
    if (n < 1 || i < 1 || i > n || j < 0 || j > i - 1)
        throw IndexOutOfRange("minor_spec: invalid (n,i,j) = (" + std::to_string(n) + "," +
                              std::to_string(i) + "," + std::to_string(j) + ")");
    MinorSpec ms{n, i, j, {}};
    ms.row_plan.reserve(i);
    for (int r = n - i + j + 1; r <= n; ++r) ms.row_plan.push_back({RowSource::X, r});
    for (int r = n - j + 1; r <= n; ++r) ms.row_plan.push_back({RowSource::Adj, r});
    return ms;
}

/// Total degree of J_{i,j} in the matrix entries: i-j rows of degree 1 and
/// j adjugate rows of degree n-1, so i + j(n-2).
inline int homogeneity_degree(int n, int i, int j) {
    if (n < 1 || i < 1 || i > n || j < 0 || j > i - 1)
        throw IndexOutOfRange("homogeneity_degree: invalid indices");
    return i + j * (n - 2);
}

// ---------------------------------------------------------------------------
// Generator-table stages

/// Stages of the elementary-transformation chain from {J_{i,j}} to the
/// final system {y_i} + {Y_{i,j}}.
enum class Stage { J, Prime, Ys, DoublePrime, Final };

inline std::string to_string(Stage s) {
    switch (s) {
        case Stage::J: return "J";
        case Stage::Prime: return "prime";
        case Stage::Ys: return "y";
        case Stage::DoublePrime: return "doubleprime";
        case Stage::Final: return "Yfinal";
    }
    return "?";
}

inline Stage parse_stage(std::string_view s) {
    if (s == "J" || s == "j") return Stage::J;
    if (s == "prime") return Stage::Prime;
    if (s == "y") return Stage::Ys;
    if (s == "doubleprime") return Stage::DoublePrime;
    if (s == "final" || s == "Yfinal") return Stage::Final;
    throw std::invalid_argument("unknown stage: '" + std::string(s) + "'");
}

/// Triangular generator table at a stage, as columns i = 1..n listed
/// top-to-bottom. Column i of the initial table is J_{i,0} .. J_{i,i-1};
/// from the y stage on, the bottom entry of column i is y_i.
inline std::vector<std::vector<InvariantId>> generator_table(int n, Stage stage = Stage::J) {
    if (n < 1) throw IndexOutOfRange("generator_table: n must be >= 1");
    std::vector<std::vector<InvariantId>> cols(n);
    for (int i = 1; i <= n; ++i) {
        auto& col = cols[i - 1];
        switch (stage) {
            case Stage::J:
                for (int j = 0; j <= i - 1; ++j) col.push_back(id_J(i, j));
                break;
            case Stage::Prime:
                for (int j = 0; j <= i - 1; ++j) col.push_back(id_Jp(i, j));
                break;
            case Stage::Ys:
                for (int j = 0; j <= i - 2; ++j) col.push_back(id_Jp(i, j));
                col.push_back(id_y(i));
                break;
            case Stage::DoublePrime:
                for (int j = 0; j <= i - 2; ++j) col.push_back(id_Jpp(i, j));
                col.push_back(id_y(i));
                break;
            case Stage::Final:
                for (int j = 0; j <= i - 2; ++j) col.push_back(id_Y(i, j));
                col.push_back(id_y(i));
                break;
        }
    }
    return cols;
}

/// The stage's generators flattened in table order (columns left to right,
/// each top to bottom). This is the canonical system ordering used by the
/// weight matrices and the kernel lattice.
inline std::vector<InvariantId> stage_system(int n, Stage stage) {
    std::vector<InvariantId> out;
    for (const auto& col : generator_table(n, stage))
        for (const auto& id : col) out.push_back(id);
    return out;
}

}  // namespace adjinv
