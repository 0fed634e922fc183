#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "qpaths/compact/compact.hpp"
#include "qpaths/errors.hpp"
#include "qpaths/graphs/gamma.hpp"
#include "qpaths/graphs/paths.hpp"
#include "qpaths/qsystem/hard_particle.hpp"
#include "qpaths/qsystem/qsystem.hpp"
#include "qpaths/qsystem/weights.hpp"
#include "qpaths/rank2/rank2.hpp"
#include "qpaths/totalpos/factorization.hpp"

namespace qpcli {

using namespace qp;

namespace {

// Results of one shard, keyed by check name in first-seen order.
class Report {
public:
    void record(const std::string& name, bool ok, const std::string& where) {
        auto& t = slot(name);
        ++t.total;
        if (ok)
            ++t.passed;
        else
            t.failures.push_back(where);
    }

    // Runs fn and records its verdict; library exceptions count as failures.
    void check(const std::string& name, const std::string& where, const std::function<bool()>& fn) {
        bool ok = false;
        std::string why;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            why = std::string(" (") + e.what() + ")";
        }
        record(name, ok, where + why);
    }

    void merge(const Report& other) {
        for (const auto& t : other.order_) {
            auto& mine = slot(t.name);
            mine.passed += t.passed;
            mine.total += t.total;
            mine.failures.insert(mine.failures.end(), t.failures.begin(), t.failures.end());
        }
    }

    const std::vector<CheckTally>& tallies() const { return order_; }

private:
    CheckTally& slot(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return order_[it->second];
        index_[name] = order_.size();
        order_.push_back(CheckTally{name, 0, 0, {}});
        return order_.back();
    }

    std::vector<CheckTally> order_;
    std::map<std::string, std::size_t> index_;
};

// Applies fn to every path on `jobs` threads. Shards share nothing: each
// work item builds its own seeds and registries.
Report over_paths(const std::vector<MotzkinPath>& paths, int jobs,
                  const std::function<void(const MotzkinPath&, Report&)>& fn) {
    std::vector<Report> shard(paths.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < paths.size(); i = next++) fn(paths[i], shard[i]);
    };
    const int n = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(paths.size(), 1)));
    std::vector<std::thread> pool;
    for (int k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    Report all;
    for (const auto& s : shard) all.merge(s);
    return all;
}

std::string at(const MotzkinPath& m, const std::string& extra = "") {
    return "m=" + m.to_string() + (extra.empty() ? "" : " " + extra);
}

Report suite_qsys(const VerifyOptions& o) {
    const int span = std::max(1, o.order / 2);
    Report rep = over_paths(fundamental_domain(o.rank), o.jobs, [&](const MotzkinPath& m, Report& rep) {
        Seed seed(m);
        QSystem q(seed);
        const int r = m.rank();
        for (int a = 1; a <= r; ++a)
            for (int n = m.at(a) - span; n <= m.at(a) + span; ++n) {
                const std::string w = at(m, "a=" + std::to_string(a) + " n=" + std::to_string(n));
                rep.check("Q-system recursion", w, [&] {
                    const LaurentPoly rhs = q.R(a, n).pow(2) + q.R(a + 1, n) * q.R(a - 1, n);
                    return q.R(a, n + 1) * q.R(a, n - 1) == rhs;
                });
                rep.check("positive Laurent values", w, [&] { return is_positive(q.R(a, n)); });
                rep.check("determinant formula", w, [&] { return det_formula_R(seed, a, n) == q.R(a, n); });
            }
        const auto ws = weights_from_seed(q);
        const auto g = HardParticleGraph::make(r);
        for (int p = 1; p <= r; ++p)
            rep.check("conserved quantities are hard-particle sums", at(m, "p=" + std::to_string(p)),
                      [&] { return q.conserved(p) == hard_particle_Z(g, ws.y, p); });
        if (r == 1) {
            rep.check("A1 conserved quantity closed form", at(m), [&] {
                const LaurentPoly x0 = q.R(1, m.at(1)), x1 = q.R(1, m.at(1) + 1);
                const LaurentPoly c = exact_div(x1, x0) + exact_div(LaurentPoly(1), x0 * x1) + exact_div(x0, x1);
                return q.conserved(1) == c;
            });
        }
    });
    VarRegistry reg;
    for (int r = 0; r <= std::min(o.rank, 5); ++r) {
        const auto y = symbolic_weights(reg, 2 * r + 1);
        const auto g = HardParticleGraph::make(r);
        for (int k = 0; k <= r + 1; ++k)
            rep.check("hard-particle recursion vs brute force", "r=" + std::to_string(r),
                      [&] { return hard_particle_Z(g, y, k) == hard_particle_Z_brute(g, y, k); });
    }
    return rep;
}

Report suite_rank2(const VerifyOptions& o) {
    Report rep;
    const int N = std::max(o.order, 1);
    VarRegistry reg;
    const auto s22 = Rank2System::make(2, 2, reg);
    const auto X = series_22(s22, N);
    const auto R22 = resolvent_series(transfer_22_compact(s22), 0, 0, N);
    for (int n = 0; n <= N; ++n) {
        const std::string w = "(2,2) n=" + std::to_string(n);
        rep.check("series equals recursion", w, [&] { return X[n] == iterate(s22, n); });
        rep.check("orbit conservation", w, [&] { return conserved_22_at(s22, n) == conserved_22(s22); });
        rep.check("two-vertex path model", w, [&] { return s22.seed(1) * R22[n] == iterate(s22, n + 1); });
    }
    for (int k = 0; k <= 1; ++k) {
        const auto s = Rank2System::make(1, 4, reg, k);
        const auto U = series_14(s, N);
        const auto R = resolvent_series(transfer_14(weights_14(s)), 0, 0, N);
        const LaurentPoly u0 = iterate(s, 2 * k);
        for (int n = 0; n <= N; ++n) {
            const std::string w = "(1,4) case " + std::to_string(k) + " n=" + std::to_string(n);
            rep.check("series equals recursion", w, [&] { return U[n] == iterate(s, 2 * (n + k)); });
            rep.check("orbit conservation", w, [&] { return conserved_14_at(s, n) == conserved_14(s); });
            rep.check("two-vertex path model", w, [&] { return u0 * R[n] == U[n]; });
        }
        for (int n = 0; n <= std::min(N, 4); ++n) {
            const std::string w = "(1,4) case " + std::to_string(k) + " n=" + std::to_string(n);
            rep.check("closed forms equal recursion", w,
                      [&] { return closed_form_14(s, n) == iterate(s, 2 * n + 2 * k); });
            rep.check("odd terms from even closed forms", w,
                      [&] { return odd_from_even_14(s, n) == iterate(s, 2 * n + 2 * k + 1); });
        }
    }
    const auto s41 = Rank2System::make(4, 1, reg);
    const Rank2System mirror{1, 4, 0, s41.second, s41.first};
    for (int n = -N; n <= N; ++n)
        rep.check("(4,1) and (1,4) symmetry", "n=" + std::to_string(n),
                  [&] { return iterate(s41, n) == iterate(mirror, 1 - n); });
    return rep;
}

Report suite_paths(const VerifyOptions& o) {
    const int N = o.order;
    return over_paths(fundamental_domain(o.rank), o.jobs, [&](const MotzkinPath& m, Report& rep) {
        Seed seed(m);
        QSystem q(seed);
        const auto g = build_gamma(m, weights_from_seed(q));
        const TSeries Z = resolvent_series(transfer_matrix(g), 0, 0, N);
        const int m1 = m.at(1);
        for (int n = 0; n <= N; ++n)
            rep.check("rerooted resolvent equals R_{1,n}", at(m, "n=" + std::to_string(n)),
                      [&] { return q.R(1, m1) * Z[n] == q.R(1, n + m1); });
        for (int n = 0; n <= std::min(N, 4); ++n)
            rep.check("path enumeration equals resolvent", at(m, "n=" + std::to_string(n)),
                      [&] { return path_sum(enumerate_paths(g, 0, 0, n)) == Z[n]; });
        for (int a = 1; a <= m.rank(); ++a)
            for (int n = a - 1; n <= a + 1; ++n)
                rep.check("LGV determinant equals Q-system", at(m, "a=" + std::to_string(a) + " n=" + std::to_string(n)),
                          [&] { return lgv_R(seed, a, n) * q.R(1, m1).pow(a) == q.R(a, n + m1); });
    });
}

Report suite_compact(const VerifyOptions& o) {
    return over_paths(fundamental_domain(o.rank), o.jobs, [&](const MotzkinPath& m, Report& rep) {
        VarRegistry reg;
        const auto y = symbolic_weights(reg, 2 * m.rank() + 1);
        rep.check("compactification equals direct construction", at(m), [&] {
            const auto a = compactify(build_gamma(m, y)).transfer();
            const auto b = build_gamma_prime_direct(m, y).transfer();
            return a.U == b.U && a.D == b.D;
        });
        rep.check("resolvent equality (seed weights)", at(m), [&] { return verify_resolvent_equality(m, o.order); });
        rep.check("resolvent equality (symbolic weights)", at(m),
                  [&] { return verify_resolvent_equality(m, y, o.order); });
    });
}

Report suite_totalpos(const VerifyOptions& o) {
    return over_paths(fundamental_domain(o.rank), o.jobs, [&](const MotzkinPath& m, Report& rep) {
        VarRegistry reg;
        const auto y = symbolic_weights(reg, 2 * m.rank() + 1);
        rep.check("N + B decomposition", at(m), [&] {
            build_N_B(m, y);
            return true;
        });
        rep.check("network resolvent identity", at(m), [&] { return verify_resolvent_theorem(m, o.order); });
        rep.check("P' is conjugate to P", at(m), [&] {
            const auto F = build_F(ElemFactorization::make(m, y));
            return build_P_prime(m, y) == unitriangular_inverse(F) * build_P(m, y) * F;
        });
        if (m.rank() <= 3) {
            rep.check("total positivity at the all-ones point", at(m), [&] {
                Seed s(m);
                std::map<VarId, mpq_class> ones;
                for (VarId v : s.all_ids()) ones[v] = 1;
                return check_total_positivity(s, ones, m.rank() + 1);
            });
        }
    });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"qsys", "rank2", "paths", "compact", "totalpos"};
    return names;
}

bool run_verify(const VerifyOptions& opt, std::ostream& out) {
    const std::map<std::string, std::function<Report(const VerifyOptions&)>> suites{
        {"qsys", suite_qsys},       {"rank2", suite_rank2},       {"paths", suite_paths},
        {"compact", suite_compact}, {"totalpos", suite_totalpos},
    };
    std::vector<std::string> chosen;
    if (opt.suite == "all")
        chosen = suite_names();
    else if (suites.count(opt.suite))
        chosen = {opt.suite};
    else
        throw std::invalid_argument("unknown suite: " + opt.suite);

    bool all_ok = true;
    for (const auto& name : chosen) {
        const Report rep = suites.at(name)(opt);
        for (const auto& t : rep.tallies()) {
            out << (t.ok() ? "[PASS] " : "[FAIL] ") << name << ": " << t.name << " (" << t.passed << "/" << t.total
                << ")\n";
            for (const auto& f : t.failures) out << "       failed at " << f << "\n";
            all_ok = all_ok && t.ok();
        }
    }
    return all_ok;
}

}  // namespace qpcli
