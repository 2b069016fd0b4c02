#pragma once

#include <map>
#include <variant>
#include <vector>

#include "adjinv/evaluate.hpp"
#include "adjinv/ids.hpp"

namespace adjinv {

/// Elementary transformation of a generator system: z_target -> z_target * z_factor^{+-1}.
struct ElementaryStep {
    InvariantId target;
    InvariantId factor;
    int exponent;  // +1 or -1
};

/// Pure renaming of a table entry; the value is untouched.
struct RenameStep {
    InvariantId from;
    InvariantId to;
};

using ChainStep = std::variant<ElementaryStep, RenameStep>;

/// The step list transforming the initial system {J_{i,j}} up to the given
/// stage:
///   1. J'_{i,j}  = J_{i,j} / J_{i-1,j}    (3 <= i <= n, 1 <= j <= i-2)
///   2. y_i       = J'_{i,i-1} / J'_{i-1,0} (2 <= i <= n), y_1 = J'_{1,0}
///   3. J''_{i,0} = J'_{i,0} / J'_{i-1,0}   (2 <= i <= n)
///   4. Y_{i,j}   = J''_{i,j} * y_{n-i+j+1} / y_i
/// Divisions that read an entry later modified by the same pass are emitted
/// in descending i so every factor still holds its pre-pass value.
inline std::vector<ChainStep> chain_steps(int n, Stage upto) {
    std::vector<ChainStep> steps;
    if (n < 1) throw IndexOutOfRange("chain_steps: n must be >= 1");
    if (upto == Stage::J) return steps;

    // step 1
    for (int j = 1; j <= n - 2; ++j)
        for (int i = n; i >= j + 2; --i)
            if (i >= 3) steps.push_back(ElementaryStep{id_J(i, j), id_J(i - 1, j), -1});
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= i - 1; ++j) steps.push_back(RenameStep{id_J(i, j), id_Jp(i, j)});
    if (upto == Stage::Prime) return steps;

    // step 2
    for (int i = n; i >= 2; --i)
        steps.push_back(ElementaryStep{id_Jp(i, i - 1), id_Jp(i - 1, 0), -1});
    for (int i = 2; i <= n; ++i) steps.push_back(RenameStep{id_Jp(i, i - 1), id_y(i)});
    steps.push_back(RenameStep{id_Jp(1, 0), id_y(1)});
    if (upto == Stage::Ys) return steps;

    // step 3 (applied for all 2 <= i <= n; the i = 2 divisor is y_1 = J'_{1,0})
    for (int i = n; i >= 2; --i)
        steps.push_back(ElementaryStep{id_Jp(i, 0), (i - 1 >= 2) ? id_Jp(i - 1, 0) : id_y(1), -1});
    for (int i = 2; i <= n; ++i)
        for (int j = 0; j <= i - 2; ++j) steps.push_back(RenameStep{id_Jp(i, j), id_Jpp(i, j)});
    if (upto == Stage::DoublePrime) return steps;

    // step 4
    for (int i = 2; i <= n; ++i)
        for (int j = 0; j <= i - 2; ++j) {
            steps.push_back(ElementaryStep{id_Jpp(i, j), id_y(n - i + j + 1), +1});
            steps.push_back(ElementaryStep{id_Jpp(i, j), id_y(i), -1});
            steps.push_back(RenameStep{id_Jpp(i, j), id_Y(i, j)});
        }
    return steps;
}

/// Replays a step list over a value table. Throws DegeneratePoint when a
/// division hits a non-unit, IndexOutOfRange when a step names a missing
/// entry.
template <class S>
std::map<InvariantId, S> chain_apply(const std::vector<ChainStep>& steps,
                                     std::map<InvariantId, S> table) {
    for (const auto& step : steps) {
        if (std::holds_alternative<ElementaryStep>(step)) {
            const auto& e = std::get<ElementaryStep>(step);
            auto ti = table.find(e.target);
            auto fi = table.find(e.factor);
            if (ti == table.end() || fi == table.end())
                throw IndexOutOfRange("chain step names a missing table entry");
            if (e.exponent > 0)
                ti->second = ti->second * fi->second;
            else
                ti->second = detail::checked_quotient(ti->second, fi->second, "chain step");
        } else {
            const auto& r = std::get<RenameStep>(step);
            auto node = table.extract(r.from);
            if (node.empty()) throw IndexOutOfRange("chain rename of a missing table entry");
            node.key() = r.to;
            table.insert(std::move(node));
        }
    }
    return table;
}

/// Full generator table at the requested stage, produced by replaying the
/// elementary-transformation chain from the J table at X.
template <class S>
std::map<InvariantId, S> chain_eval(int n, Stage stage, const Matrix<S>& x) {
    JTable<S> jt = eval_J_table(n, x);
    std::map<InvariantId, S> table;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= i - 1; ++j) table[id_J(i, j)] = jt.at(i, j);
    return chain_apply(chain_steps(n, stage), std::move(table));
}

}  // namespace adjinv
