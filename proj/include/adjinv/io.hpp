#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "adjinv/chain.hpp"
#include "adjinv/lattice.hpp"
#include "adjinv/verify.hpp"

namespace adjinv {

using json = nlohmann::ordered_json;

/// [["1/2","0"],["3","-1/5"]] -- arrays of arrays of rational strings.
inline json matrix_to_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix<Rational> matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON: expected a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty())
        throw std::invalid_argument("matrix JSON: expected rows to be non-empty arrays");
    const int cols = static_cast<int>(j[0].size());
    Matrix<Rational> m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
            throw std::invalid_argument("matrix JSON: ragged rows");
        for (int c = 0; c < cols; ++c) {
            if (!j[r][c].is_string())
                throw std::invalid_argument("matrix JSON: entries must be rational strings");
            std::string s = j[r][c].get<std::string>();
            // tolerate U+2212 from typeset sources
            for (std::size_t pos; (pos = s.find("\xe2\x88\x92")) != std::string::npos;)
                s.replace(pos, 3, "-");
            m(r, c) = Rational::parse(s);
        }
    }
    return m;
}

inline Matrix<Rational> read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("matrix file is not valid JSON: " + std::string(e.what()));
    }
    return matrix_from_json(j);
}

/// {check, n, trials, seed, passes, failures:[{trial, witnesses, lhs, rhs}]}
inline json report_to_json(const VerificationReport& rep) {
    json j;
    j["check"] = rep.check_name;
    j["n"] = rep.n;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["passes"] = rep.passes;
    json fails = json::array();
    for (const auto& f : rep.failures) {
        json jf;
        jf["trial"] = f.trial;
        json w = json::object();
        for (const auto& [label, m] : f.witnesses) w[label] = matrix_to_json(m);
        for (const auto& [label, text] : f.notes) w[label] = text;
        jf["witnesses"] = std::move(w);
        jf["lhs"] = f.lhs;
        jf["rhs"] = f.rhs;
        fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    return j;
}

inline VerificationReport report_from_json(const json& j) {
    VerificationReport rep;
    rep.check_name = j.at("check").get<std::string>();
    rep.n = j.at("n").get<int>();
    rep.trials = j.at("trials").get<std::uint64_t>();
    rep.seed = j.at("seed").get<std::uint64_t>();
    rep.passes = j.at("passes").get<std::uint64_t>();
    for (const auto& jf : j.at("failures")) {
        FailureRecord f;
        f.trial = jf.at("trial").get<std::uint64_t>();
        for (const auto& [label, value] : jf.at("witnesses").items()) {
            if (value.is_array())
                f.witnesses.emplace_back(label, matrix_from_json(value));
            else
                f.notes.emplace_back(label, value.get<std::string>());
        }
        f.lhs = jf.at("lhs").get<std::string>();
        f.rhs = jf.at("rhs").get<std::string>();
        rep.failures.push_back(std::move(f));
    }
    return rep;
}

inline std::string report_to_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "check: " << rep.check_name << "\n"
       << "n: " << rep.n << "\n"
       << "trials: " << rep.trials << "\n"
       << "seed: " << rep.seed << "\n"
       << "passes: " << rep.passes << "\n"
       << "failures: " << rep.failures.size() << "\n";
    for (const auto& f : rep.failures) {
        os << "  trial " << f.trial << ": lhs = " << f.lhs << ", rhs = " << f.rhs << "\n";
        for (const auto& [label, m] : f.witnesses) os << "    " << label << " = " << to_string(m) << "\n";
        for (const auto& [label, text] : f.notes) os << "    " << label << " = " << text << "\n";
    }
    return os.str();
}

/// One row reference of a minor, e.g. "x(3,1) x(3,2)" for columns 1..i.
inline std::string render_row(const RowRef& ref, int width) {
    std::string s;
    const char* name = (ref.source == RowSource::X) ? "x" : "adj";
    for (int c = 1; c <= width; ++c) {
        if (c > 1) s += " ";
        s += std::string(name) + "(" + std::to_string(ref.row) + "," + std::to_string(c) + ")";
    }
    return s;
}

/// "J:2,1 = |x(3,1) x(3,2); adj(3,1) adj(3,2)|"; 1x1 minors print bare.
inline std::string render_minor(const MinorSpec& ms) {
    if (ms.i == 1) return render_row(ms.row_plan[0], 1);
    std::string s = "|";
    for (std::size_t r = 0; r < ms.row_plan.size(); ++r) {
        if (r) s += "; ";
        s += render_row(ms.row_plan[r], ms.i);
    }
    return s + "|";
}

/// Defining expression of a generator at its chain stage, in terms of the
/// previous stage's names.
inline std::string render_definition(int n, const InvariantId& id) {
    const int i = id.i, j = id.j;
    switch (id.kind) {
        case GenKind::J:
            return render_minor(minor_spec(n, i, j));
        case GenKind::JPrime:
            if (i >= 3 && j >= 1 && j <= i - 2)
                return to_string(id_J(i, j)) + "/" + to_string(id_J(i - 1, j));
            return to_string(id_J(i, j));
        case GenKind::SmallY:
            if (i == 1) return to_string(id_Jp(1, 0));
            return to_string(id_Jp(i, i - 1)) + "/" + to_string(id_Jp(i - 1, 0));
        case GenKind::JDoublePrime:
            if (j == 0)
                return to_string(id_Jp(i, 0)) + "/" +
                       to_string(i - 1 >= 2 ? id_Jp(i - 1, 0) : id_y(1));
            return to_string(id_Jp(i, j));
        case GenKind::BigY:
            return to_string(id_Jpp(i, j)) + "*" + to_string(id_y(n - i + j + 1)) + "/" +
                   to_string(id_y(i));
    }
    return "?";
}

/// Generator table as text: one generator per line, columns i = 1..n in
/// order.
inline std::string render_table_text(int n, Stage stage) {
    std::ostringstream os;
    for (const auto& column : generator_table(n, stage))
        for (const auto& id : column) os << to_string(id) << " = " << render_definition(n, id) << "\n";
    return os.str();
}

inline json table_to_json(int n, Stage stage) {
    json cols = json::array();
    for (const auto& column : generator_table(n, stage)) {
        json col = json::array();
        for (const auto& id : column) {
            json e;
            e["id"] = to_string(id);
            e["definition"] = render_definition(n, id);
            col.push_back(std::move(e));
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

/// Weight table as text: weights as Laurent monomials in a1..an.
inline std::string render_weights_text(int n, Stage stage) {
    std::ostringstream os;
    for (const auto& column : generator_table(n, stage))
        for (const auto& id : column)
            os << to_string(id) << " = " << weight_id(n, id).monomial() << "\n";
    return os.str();
}

/// Triangular arrays of exponent vectors mirroring the weight table.
inline json weights_to_json(int n, Stage stage) {
    json cols = json::array();
    for (const auto& column : generator_table(n, stage)) {
        json col = json::array();
        for (const auto& id : column) col.push_back(weight_id(n, id).exponents());
        cols.push_back(std::move(col));
    }
    return cols;
}

inline json intmat_to_json(const IntMat& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const Int& v : row) r.push_back(v.convert_to<long long>());
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace adjinv
