#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjinv/chain.hpp"
#include "adjinv/lattice.hpp"
#include "adjinv/sampling.hpp"
#include "adjinv/weights.hpp"

namespace adjinv {

struct FailureRecord {
    std::uint64_t trial = 0;
    std::vector<std::pair<std::string, Matrix<Rational>>> witnesses;
    std::vector<std::pair<std::string, std::string>> notes;  // ids, scalars, labels
    std::string lhs, rhs;
};

/// Outcome of one named check: passes + |failures| = trials. Resampled
/// degenerate draws do not consume trials.
struct VerificationReport {
    std::string check_name;
    int n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t passes = 0;
    std::vector<FailureRecord> failures;

    bool ok() const { return failures.empty() && passes == trials; }
};

namespace detail {

// Runs `body` once per trial on the (seed, trial) stream; a returned record
// marks the trial failed.
template <class Body>
VerificationReport run_check(std::string name, int n, std::uint64_t trials, std::uint64_t seed,
                             Body&& body) {
    VerificationReport rep;
    rep.check_name = std::move(name);
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(seed, t);
        std::optional<FailureRecord> fail = body(rng, t);
        if (fail) {
            fail->trial = t;
            rep.failures.push_back(std::move(*fail));
        } else {
            ++rep.passes;
        }
    }
    return rep;
}

inline std::vector<Rational> diagonal_of(const Matrix<Rational>& h) {
    std::vector<Rational> d;
    for (int k = 0; k < h.rows(); ++k) d.push_back(h(k, k));
    return d;
}

}  // namespace detail

/// The full U-invariant system {J_{i,j}} and the B-invariant system
/// {y_n, Y_{i,j}}.
inline std::vector<InvariantId> j_system(int n) { return stage_system(n, Stage::J); }

inline std::vector<InvariantId> b_system(int n) {
    std::vector<InvariantId> out;
    for (const auto& id : stage_system(n, Stage::Final))
        if (id.kind == GenKind::BigY || (id.kind == GenKind::SmallY && id.i == n))
            out.push_back(id);
    return out;
}

/// f(h^{-1} X h) = prod a_k^{e_k} * f(X) for random diagonal h and random X.
/// f: (const Matrix<Rational>&) -> Rational, may throw DegeneratePoint.
template <class F>
VerificationReport weight_verify(int n, F&& f, const WeightVector& w, std::uint64_t trials,
                                 std::uint64_t seed, long long bound = 10,
                                 std::string name = "weight-verify") {
    return detail::run_check(std::move(name), n, trials, seed,
                             [&](TrialRng& rng, std::uint64_t) -> std::optional<FailureRecord> {
        Matrix<Rational> h = sample_group_element(rng, n, bound, Subgroup::H);
        Rational fx, fc;
        Matrix<Rational> x = sample_point_where(rng, n, bound, [&](const Matrix<Rational>& cand) {
            try {
                fx = f(cand);
                fc = f(conjugate_by_inverse(h, cand));
                return true;
            } catch (const DegeneratePoint&) {
                return false;
            }
        });
        Rational expected = w.eval(detail::diagonal_of(h)) * fx;
        if (fc == expected) return std::nullopt;
        FailureRecord rec;
        rec.witnesses = {{"h", h}, {"x", x}};
        rec.notes = {{"weight", w.to_string()}};
        rec.lhs = fc.to_string();
        rec.rhs = expected.to_string();
        return rec;
    });
}

/// Every J_{i,j} is invariant under unitriangular conjugation.
inline VerificationReport check_U_invariance(int n, std::uint64_t trials, std::uint64_t seed,
                                             long long bound = 10) {
    return detail::run_check("u-invariance", n, trials, seed,
                             [&](TrialRng& rng, std::uint64_t) -> std::optional<FailureRecord> {
        Matrix<Rational> u = sample_group_element(rng, n, bound, Subgroup::U);
        Matrix<Rational> x = sample_matrix(rng, n, bound);
        JTable<Rational> at_x = eval_J_table(n, x);
        JTable<Rational> at_c = eval_J_table(n, conjugate_by_inverse(u, x));
        for (int i = 1; i <= n; ++i)
            for (int j = 0; j <= i - 1; ++j)
                if (at_c.at(i, j) != at_x.at(i, j)) {
                    FailureRecord rec;
                    rec.witnesses = {{"u", u}, {"x", x}};
                    rec.notes = {{"id", to_string(id_J(i, j))}};
                    rec.lhs = at_c.at(i, j).to_string();
                    rec.rhs = at_x.at(i, j).to_string();
                    return rec;
                }
        return std::nullopt;
    });
}

/// {y_n} + {Y_{i,j}} invariant under Borel conjugation, and the
/// decomposition cross-check: the same values are unchanged by the separate
/// unipotent and torus factors of b = h u.
inline VerificationReport check_B_invariance(int n, std::uint64_t trials, std::uint64_t seed,
                                             long long bound = 10) {
    if (n < 2) throw IndexOutOfRange("check_B_invariance: n must be >= 2");
    const std::vector<InvariantId> system = b_system(n);
    return detail::run_check("b-invariance", n, trials, seed,
                             [&](TrialRng& rng, std::uint64_t) -> std::optional<FailureRecord> {
        BorelFactors bf = sample_borel_factors(rng, n, bound);
        std::map<InvariantId, Rational> vx, vb, vu, vh;
        auto values_at = [&](const Matrix<Rational>& pt) {
            std::map<InvariantId, Rational> out;
            JTable<Rational> jt = eval_J_table(n, pt);
            for (const auto& id : system) out[id] = eval_id_from_table(id, jt);
            return out;
        };
        Matrix<Rational> x = sample_point_where(rng, n, bound, [&](const Matrix<Rational>& cand) {
            try {
                vx = values_at(cand);
                vb = values_at(conjugate_by_inverse(bf.b, cand));
                vu = values_at(conjugate_by_inverse(bf.u, cand));
                vh = values_at(conjugate_by_inverse(bf.h, cand));
                return true;
            } catch (const DegeneratePoint&) {
                return false;
            }
        });
        for (const auto& id : system) {
            const struct {
                const char* label;
                const Rational& got;
            } routes[] = {{"b", vb.at(id)}, {"u", vu.at(id)}, {"h", vh.at(id)}};
            for (const auto& route : routes)
                if (route.got != vx.at(id)) {
                    FailureRecord rec;
                    rec.witnesses = {{"b", bf.b}, {"h", bf.h}, {"u", bf.u}, {"x", x}};
                    rec.notes = {{"id", to_string(id)}, {"conjugator", route.label}};
                    rec.lhs = route.got.to_string();
                    rec.rhs = vx.at(id).to_string();
                    return rec;
                }
        }
        return std::nullopt;
    });
}

/// Every generator of every chain stage transforms under diagonal
/// conjugation by exactly its predicted weight.
inline VerificationReport check_semi_invariance(int n, std::uint64_t trials, std::uint64_t seed,
                                                long long bound = 10) {
    static const Stage kStages[] = {Stage::J, Stage::Prime, Stage::Ys, Stage::DoublePrime,
                                    Stage::Final};
    return detail::run_check("semi-invariance", n, trials, seed,
                             [&](TrialRng& rng, std::uint64_t) -> std::optional<FailureRecord> {
        Matrix<Rational> h = sample_group_element(rng, n, bound, Subgroup::H);
        std::vector<Rational> a = detail::diagonal_of(h);
        std::map<InvariantId, Rational> vx, vc;
        auto all_stage_values = [&](const Matrix<Rational>& pt) {
            std::map<InvariantId, Rational> out;
            JTable<Rational> jt = eval_J_table(n, pt);
            std::map<InvariantId, Rational> base;
            for (int i = 1; i <= n; ++i)
                for (int j = 0; j <= i - 1; ++j) base[id_J(i, j)] = jt.at(i, j);
            for (Stage stage : kStages) {
                auto table = chain_apply(chain_steps(n, stage), base);
                out.insert(table.begin(), table.end());
            }
            return out;
        };
        Matrix<Rational> x = sample_point_where(rng, n, bound, [&](const Matrix<Rational>& cand) {
            try {
                vx = all_stage_values(cand);
                vc = all_stage_values(conjugate_by_inverse(h, cand));
                return true;
            } catch (const DegeneratePoint&) {
                return false;
            }
        });
        for (const auto& [id, fx] : vx) {
            Rational expected = weight_id(n, id).eval(a) * fx;
            const Rational& got = vc.at(id);
            if (got != expected) {
                FailureRecord rec;
                rec.witnesses = {{"h", h}, {"x", x}};
                rec.notes = {{"id", to_string(id)}, {"weight", weight_id(n, id).to_string()}};
                rec.lhs = got.to_string();
                rec.rhs = expected.to_string();
                return rec;
            }
        }
        return std::nullopt;
    });
}

/// Chain steps 1-4 replayed as elementary transformations, against the
/// direct quotient definitions.
inline VerificationReport check_chain_identity(int n, std::uint64_t trials, std::uint64_t seed,
                                               long long bound = 10) {
    static const Stage kStages[] = {Stage::Prime, Stage::Ys, Stage::DoublePrime, Stage::Final};
    return detail::run_check("chain-identity", n, trials, seed,
                             [&](TrialRng& rng, std::uint64_t) -> std::optional<FailureRecord> {
        std::vector<std::pair<Stage, std::map<InvariantId, Rational>>> replayed;
        JTable<Rational> jt(n);
        Matrix<Rational> x = sample_point_where(rng, n, bound, [&](const Matrix<Rational>& cand) {
            try {
                replayed.clear();
                for (Stage stage : kStages)
                    replayed.emplace_back(stage, chain_eval(n, stage, cand));
                jt = eval_J_table(n, cand);
                for (const auto& id : stage_system(n, Stage::Final))
                    (void)eval_id_from_table(id, jt);
                return true;
            } catch (const DegeneratePoint&) {
                return false;
            }
        });
        for (const auto& [stage, table] : replayed)
            for (const auto& id : stage_system(n, stage)) {
                Rational direct = eval_id_from_table(id, jt);
                const Rational& chained = table.at(id);
                if (chained != direct) {
                    FailureRecord rec;
                    rec.witnesses = {{"x", x}};
                    rec.notes = {{"id", to_string(id)}, {"stage", to_string(stage)}};
                    rec.lhs = chained.to_string();
                    rec.rhs = direct.to_string();
                    return rec;
                }
            }
        return std::nullopt;
    });
}

/// X X* = X* X = det(X) E for arbitrary (every fourth trial singular) X, and
/// adjugate equivariance under random GL conjugation.
inline VerificationReport check_adjugate_contract(int n, std::uint64_t trials, std::uint64_t seed,
                                                  long long bound = 10) {
    return detail::run_check("adjugate", n, trials, seed,
                             [&](TrialRng& rng, std::uint64_t t) -> std::optional<FailureRecord> {
        Matrix<Rational> x = sample_matrix(rng, n, bound);
        if (t % 4 == 3) {  // force a singular witness
            if (n >= 2)
                for (int c = 0; c < n; ++c) x(n - 1, c) = x(0, c);
            else
                x(0, 0) = Rational(0);
        }
        Matrix<Rational> adj = adjugate(x);
        Matrix<Rational> scaled = Matrix<Rational>::identity(n) * det(x);
        auto fail = [&](const char* what, const Matrix<Rational>& got,
                        const Matrix<Rational>& want) {
            FailureRecord rec;
            rec.witnesses = {{"x", x}};
            rec.notes = {{"identity", what}};
            rec.lhs = to_string(got);
            rec.rhs = to_string(want);
            return rec;
        };
        if (x * adj != scaled) return fail("x * adj(x) = det(x) E", x * adj, scaled);
        if (adj * x != scaled) return fail("adj(x) * x = det(x) E", adj * x, scaled);
        Matrix<Rational> g = sample_group_element(rng, n, bound, Subgroup::GL);
        Matrix<Rational> lhs = adjugate(conjugate(g, x));
        Matrix<Rational> rhs = conjugate(g, adj);
        if (lhs != rhs) {
            FailureRecord rec = fail("adj(g x g^-1) = g adj(x) g^-1", lhs, rhs);
            rec.witnesses.push_back({"g", g});
            return rec;
        }
        return std::nullopt;
    });
}

/// n = 2 oracle: J_{1,0} = x21, J_{2,1} = x21 (x11 + x22), y_2 = trace,
/// Y_{2,0} = det/trace, from entry arithmetic alone.
inline VerificationReport check_n2_closed_forms(std::uint64_t trials, std::uint64_t seed,
                                                long long bound = 10) {
    return detail::run_check("n2-closed-forms", 2, trials, seed,
                             [&](TrialRng& rng, std::uint64_t) -> std::optional<FailureRecord> {
        Matrix<Rational> x = sample_point_where(rng, 2, bound, [](const Matrix<Rational>& cand) {
            return !cand(1, 0).is_zero() && !(cand(0, 0) + cand(1, 1)).is_zero();
        });
        Rational tr = x(0, 0) + x(1, 1);
        Rational dt = x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0);
        const struct {
            InvariantId id;
            Rational want;
        } cases[] = {
            {id_J(1, 0), x(1, 0)},
            {id_J(2, 0), dt},
            {id_J(2, 1), x(1, 0) * tr},
            {id_y(2), tr},
            {id_Y(2, 0), dt / tr},
        };
        for (const auto& c : cases) {
            Rational got = eval_id(2, c.id, x);
            if (got != c.want) {
                FailureRecord rec;
                rec.witnesses = {{"x", x}};
                rec.notes = {{"id", to_string(c.id)}};
                rec.lhs = got.to_string();
                rec.rhs = c.want.to_string();
                return rec;
            }
        }
        return std::nullopt;
    });
}

/// eval_J(n,i,j, tX) = t^{i + j(n-2)} eval_J(n,i,j, X) for random t != 0.
inline VerificationReport check_homogeneity(int n, std::uint64_t trials, std::uint64_t seed,
                                            long long bound = 10) {
    return detail::run_check("homogeneity", n, trials, seed,
                             [&](TrialRng& rng, std::uint64_t) -> std::optional<FailureRecord> {
        Matrix<Rational> x = sample_matrix(rng, n, bound);
        Rational t = sample_nonzero_rational(rng, bound);
        JTable<Rational> at_x = eval_J_table(n, x);
        JTable<Rational> at_tx = eval_J_table(n, x * t);
        for (int i = 1; i <= n; ++i)
            for (int j = 0; j <= i - 1; ++j) {
                Rational expected = pow(t, homogeneity_degree(n, i, j)) * at_x.at(i, j);
                if (at_tx.at(i, j) != expected) {
                    FailureRecord rec;
                    rec.witnesses = {{"x", x}};
                    rec.notes = {{"id", to_string(id_J(i, j))}, {"t", t.to_string()}};
                    rec.lhs = at_tx.at(i, j).to_string();
                    rec.rhs = expected.to_string();
                    return rec;
                }
            }
        return std::nullopt;
    });
}

/// Exact Jacobian of the system at X0: row s holds the partials of f_s with
/// respect to x_{1,1}, x_{1,2}, ..., x_{n,n} (row-major), one dual-number
/// direction at a time.
inline Matrix<Rational> jacobian(const std::vector<InvariantId>& system, int n,
                                 const Matrix<Rational>& x0) {
    Matrix<Rational> jac(static_cast<int>(system.size()), n * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Matrix<DualRational> xd(n, n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    xd(a, b) = DualRational(x0(a, b),
                                            Rational((a == r && b == c) ? 1 : 0));
            JTable<DualRational> jt = eval_J_table(n, xd);
            for (std::size_t s = 0; s < system.size(); ++s)
                jac(static_cast<int>(s), r * n + c) = eval_id_from_table(system[s], jt).deriv;
        }
    return jac;
}

/// Rank certificate: the rank exhibited at a concrete sampled point.
struct RankCertificate {
    int rank = 0;
    Matrix<Rational> point;
    int attempts = 0;
};

/// Maximum Jacobian rank observed over <= 16 sampled points (stops early at
/// full row rank, which is the generic value under test).
inline RankCertificate independence_rank(const std::vector<InvariantId>& system, int n,
                                         std::uint64_t seed, long long bound = 10) {
    RankCertificate best;
    const int full = static_cast<int>(system.size());
    for (int attempt = 0; attempt < kPointRetries; ++attempt) {
        TrialRng rng(seed, static_cast<std::uint64_t>(attempt));
        Matrix<Rational> x = sample_matrix(rng, n, bound);
        int r;
        try {
            r = rank(jacobian(system, n, x));
        } catch (const DegeneratePoint&) {
            continue;
        }
        if (r > best.rank) {
            best.rank = r;
            best.point = x;
        }
        best.attempts = attempt + 1;
        if (best.rank == full) return best;
    }
    if (best.attempts == 0) throw SamplingExhausted("independence_rank: no usable point found");
    return best;
}

}  // namespace adjinv
