#include "exsys/verify.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace exsys {

namespace {

template <Semiring S>
BilinearForm<S> kronecker() {
    return BilinearForm<S>::kronecker();
}

CheckReport make_report(std::string check, std::string_view semiring, int r, const Partition& lambda) {
    CheckReport rep;
    rep.check = std::move(check);
    rep.semiring = std::string(semiring);
    rep.r = r;
    rep.lambda = lambda;
    return rep;
}

void absorb(CheckReport& rep, const SeriesComparison& cmp, const std::string& label = {}) {
    if (cmp.verdict == Verdict::holds) return;
    if (rep.verdict == Verdict::fails) return;
    if (cmp.verdict == Verdict::inconclusive && rep.verdict == Verdict::inconclusive) return;
    rep.verdict = cmp.verdict;
    rep.witness = cmp.witness;
    if (!label.empty()) rep.note = label;
}

// Reported window: z up to zmax, every w (all w-directions are computed exactly).
SeriesWindow report_window(const CheckConfig& cfg) { return SeriesWindow{{}, cfg.zmax, {}, {}}; }

// σ₊ is kept r degrees past the reported window.
int guarded_cap(const CheckConfig& cfg, int r) { return cfg.zmax + r; }

template <Semiring S>
BiSeries<S> basis_series(int r, const Partition& lambda) {
    return BiSeries<S>::from_wedge(schubert_basis<S>(r, lambda));
}

template <Semiring S>
BiSeries<S> contract_series(int dual, const BiSeries<S>& s) {
    const auto form = kronecker<S>();
    return map_coefficients(s, [&](const Wedge<S>& u) { return contract(dual, u, form); });
}

template <Semiring S>
BiSeries<S> wedge_right_x0(const BiSeries<S>& s) {
    return series_wedge(s, BiSeries<S>::from_wedge(wedge_x<S>(0)));
}

}  // namespace

std::vector<std::string> CheckConfig::validate() const {
    if (semirings.empty()) throw std::invalid_argument("no semiring selected");
    for (const auto& id : semirings) with_semiring(id, [](auto) { return 0; });
    if (rmax < 1) throw std::invalid_argument("rmax must be positive");
    if (weight < 0) throw std::invalid_argument("weight bound must be nonnegative");
    if (zmax < 0 || wmax < 0) throw std::invalid_argument("zmax and wmax must be nonnegative");
    if (pieri_max < 0) throw std::invalid_argument("pieri bound must be nonnegative");
    if (bound.n && *bound.n < 1) throw std::invalid_argument("rank bound must be positive");
    for (const auto& c : checks)
        if (std::find(all_check_names().begin(), all_check_names().end(), c) == all_check_names().end())
            throw std::invalid_argument("unknown check '" + c + "'");
    std::vector<std::string> warnings;
    if (zmax < rmax + weight)
        warnings.push_back("zmax < rmax + weight: high z-degrees of large instances are not reported");
    return warnings;
}

bool CheckConfig::enabled(const std::string& check) const {
    return checks.empty() || std::find(checks.begin(), checks.end(), check) != checks.end();
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names{
        "quasi_inverse", "quasi_inverse_endo", "thm313",     "thm515",
        "thm515_corrected", "lem633",         "lemma433",   "main_theorem",
        "main_theorem_corrected", "clifford_relations", "commutations", "pieri",
    };
    return names;
}

template <Semiring S>
CheckReport check_quasi_inverse(const CheckConfig& cfg, int r, const Partition& lambda) {
    auto rep = make_report("quasi_inverse", S::id, r, lambda);
    auto u = basis_series<S>(r, lambda);
    auto minus = sigma_minus<S>(Var::z, cfg.bound);
    auto minus_bar = sigma_minus_bar<S>(Var::z, cfg.bound);
    absorb(rep, series_surpasses(u, apply_map(compose(minus, minus_bar), u), SeriesWindow{}),
           "sigma_minus sigma_minus_bar");
    absorb(rep, series_surpasses(u, apply_map(compose(minus_bar, minus), u), SeriesWindow{}),
           "sigma_minus_bar sigma_minus");
    return rep;
}

template <Semiring S>
CheckReport check_quasi_inverse_endo(const CheckConfig& cfg, int r, const Partition& lambda) {
    auto rep = make_report("quasi_inverse_endo", S::id, r, lambda);
    auto u = basis_series<S>(r, lambda);
    auto plus = sigma_plus<S>(Var::z, guarded_cap(cfg, r), cfg.bound);
    auto plus_bar = sigma_plus_bar<S>(Var::z, cfg.bound);
    const auto window = report_window(cfg);
    absorb(rep, series_surpasses(u, apply_map(compose(plus, plus_bar), u), window), "D_f Dbar_f");
    absorb(rep, series_surpasses(u, apply_map(compose(plus_bar, plus), u), window), "Dbar_f D_f");
    return rep;
}

template <Semiring S>
CheckReport check_thm313(const CheckConfig& cfg, int r, const Partition& lambda) {
    auto rep = make_report("thm313", S::id, r, lambda);
    const int cap = guarded_cap(cfg, r);
    auto lhs = series_wedge(generating_x<S>(cap, cfg.bound), basis_series<S>(r, lambda));
    auto op = compose(sigma_plus<S>(Var::z, cap, cfg.bound), sigma_minus_bar<S>(Var::z, cfg.bound));
    auto rhs = apply_map(op, basis_series<S>(r + 1, lambda)).shifted(r, 0);
    absorb(rep, series_surpasses(lhs, rhs, report_window(cfg)));
    return rep;
}

namespace {

template <Semiring S>
BiSeries<S> thm515_lhs(const CheckConfig& cfg, int r, const Partition& lambda) {
    const auto form = kronecker<S>();
    auto dual = transpose_sigma_minus(0, cfg.wmax);
    return evaluate_dual_series(dual, schubert_basis<S>(r, lambda), form);
}

template <Semiring S>
BiSeries<S> contracted_sigma_minus(const CheckConfig& cfg, int r, const Partition& lambda) {
    return contract_series(0, apply_map(sigma_minus<S>(Var::w, cfg.bound), basis_series<S>(r, lambda)));
}

// Exponents above wmax pair with duals the truncated transpose does not contain.
bool transpose_covers(const CheckConfig& cfg, int r, const Partition& lambda, CheckReport& rep) {
    if (r - 1 + lambda.part(1) <= cfg.wmax) return true;
    rep.verdict = Verdict::inconclusive;
    rep.note = "largest exponent exceeds wmax";
    rep.witness = Witness{0, cfg.wmax + 1, exponent_tuple(r, lambda)};
    return false;
}

template <Semiring S>
void mutual(CheckReport& rep, const BiSeries<S>& a, const BiSeries<S>& b, const SeriesWindow& window) {
    absorb(rep, series_surpasses(a, b, window), "lhs below rhs");
    absorb(rep, series_surpasses(b, a, window), "rhs below lhs");
}

}  // namespace

template <Semiring S>
CheckReport check_thm515(const CheckConfig& cfg, int r, const Partition& lambda) {
    auto rep = make_report("thm515", S::id, r, lambda);
    if (!transpose_covers(cfg, r, lambda, rep)) return rep;
    auto lhs = thm515_lhs<S>(cfg, r, lambda);
    auto rhs = apply_map(sigma_plus_bar<S>(Var::w, cfg.bound), contracted_sigma_minus<S>(cfg, r, lambda))
                   .shifted(0, -r + 1);
    mutual(rep, lhs, rhs, SeriesWindow{});
    return rep;
}

template <Semiring S>
CheckReport check_thm515_corrected(const CheckConfig& cfg, int r, const Partition& lambda) {
    auto rep = make_report("thm515_corrected", S::id, r, lambda);
    if (!transpose_covers(cfg, r, lambda, rep)) return rep;
    auto lhs = thm515_lhs<S>(cfg, r, lambda);
    auto rhs = apply_map(sigma_minus_bar<S>(Var::w, cfg.bound), contracted_sigma_minus<S>(cfg, r, lambda));
    // the right side carries extra quasi-zeros, so only one direction is expected
    absorb(rep, series_surpasses(lhs, rhs, SeriesWindow{}));
    return rep;
}

template <Semiring S>
CheckReport check_lem633(const CheckConfig& cfg, int r, const Partition& lambda) {
    auto rep = make_report("lem633", S::id, r, lambda);
    std::vector<int> raised(r);
    for (int i = 1; i <= r; ++i) raised[i - 1] = lambda.part(i) + 1;
    auto lhs = BiSeries<S>::from_wedge(wedge(wedge_x<S>(0), schubert_basis<S>(r, Partition(raised))));
    auto op = compose(sigma_plus_bar<S>(Var::w, cfg.bound), sigma_minus<S>(Var::w, cfg.bound));
    auto rhs = wedge_right_x0(apply_map(op, basis_series<S>(r, lambda))).shifted(0, -r);
    absorb(rep, series_surpasses(lhs, rhs, SeriesWindow{}));
    return rep;
}

template <Semiring S>
CheckReport check_lemma433(const CheckConfig& cfg, int r, const Partition& lambda) {
    auto rep = make_report("lemma433", S::id, r, lambda);
    auto zbar = sigma_minus_bar<S>(Var::z, cfg.bound);
    auto wbar = sigma_plus_bar<S>(Var::w, cfg.bound);
    auto u = basis_series<S>(r, lambda);
    auto lhs = wedge_right_x0(apply_map(compose(zbar, wbar), u));
    auto rhs = wedge_right_x0(apply_map(compose(wbar, zbar), u));
    mutual(rep, lhs, rhs, SeriesWindow{});
    return rep;
}

template <Semiring S>
MainTheoremSides<S> main_theorem_sides(const CheckConfig& cfg, int r, const Partition& lambda, Prefactor prefactor) {
    const auto form = kronecker<S>();
    const int cap = guarded_cap(cfg, r);
    const auto u = schubert_basis<S>(r, lambda);
    const auto exps = exponent_tuple(r, lambda);

    MainTheoremSides<S> out;
    out.window = report_window(cfg);
    out.lhs = series_wedge(generating_x<S>(cap, cfg.bound), generating_partial(u, form));

    auto plus = sigma_plus<S>(Var::z, cap, cfg.bound);
    auto column_op = compose_chain<S>({plus, sigma_plus_bar<S>(Var::w, cfg.bound),
                                       sigma_minus_bar<S>(Var::z, cfg.bound), sigma_minus<S>(Var::w, cfg.bound)});
    auto corrected_op = compose(plus, sigma_minus_bar<S>(Var::z, cfg.bound));
    const auto last = plus.image(0);

    auto expand = [&](const VectorMap<S>& op) {
        std::vector<BiSeries<S>> scalars;
        std::vector<BiSeries<S>> vectors;
        for (int i = 0; i < r; ++i) {
            scalars.push_back(BiSeries<S>::scalar(Pair<S>::one(), 0, -exps[i]));
            vectors.push_back(op.image(exps[i] + 1));
        }
        scalars.push_back(BiSeries<S>{});
        vectors.push_back(last);
        return two_row_expand(scalars, vectors);
    };
    const int wshift = prefactor == Prefactor::w_pos ? r - 1 : -(r - 1);
    out.rhs = expand(column_op).shifted(r - 1, wshift);
    out.rhs_corrected = expand(corrected_op).shifted(r - 1, 0);
    return out;
}

template <Semiring S>
CheckReport check_main_theorem(const CheckConfig& cfg, int r, const Partition& lambda, Prefactor prefactor) {
    auto rep = make_report("main_theorem", S::id, r, lambda);
    auto sides = main_theorem_sides<S>(cfg, r, lambda, prefactor);
    absorb(rep, series_surpasses(sides.lhs, sides.rhs, sides.window));
    rep.note = std::string("prefactor ") + prefactor_name(prefactor) + (rep.note.empty() ? "" : "; " + rep.note);
    return rep;
}

template <Semiring S>
CheckReport check_main_theorem_corrected(const CheckConfig& cfg, int r, const Partition& lambda) {
    auto rep = make_report("main_theorem_corrected", S::id, r, lambda);
    auto sides = main_theorem_sides<S>(cfg, r, lambda, Prefactor::w_pos);
    absorb(rep, series_surpasses(sides.lhs, sides.rhs_corrected, sides.window));
    return rep;
}

template <Semiring S>
Wedge<S> pinned_generating_coefficient() {
    const auto form = kronecker<S>();
    auto u = schubert_basis<S>(3, Partition({3, 2, 1}));
    auto lhs = series_wedge(generating_x<S>(4), generating_partial(u, form));
    return lhs.coefficient(2, -3);
}

template <Semiring S>
CheckReport check_clifford_relations(const CheckConfig& cfg, int r, const Partition& lambda) {
    auto rep = make_report("clifford_relations", S::id, r, lambda);
    const auto form = kronecker<S>();
    const int cap = guarded_cap(cfg, r);
    const auto u = schubert_basis<S>(r, lambda);
    auto x = generating_x<S>(cap, cfg.bound);
    auto lhs = series_wedge(x, generating_partial(u, form)) +
               generating_partial(series_wedge(x, BiSeries<S>::from_wedge(u)), form);
    std::vector<typename BiSeries<S>::term_type> geometric;
    for (int i = 0; i <= cap; ++i)
        for (const auto& [k, c] : u) geometric.push_back({SeriesKey{i, -i, k}, c});
    auto rhs = BiSeries<S>::from_terms(std::move(geometric), cap, {});
    absorb(rep, series_surpasses(rhs, lhs, report_window(cfg)));
    return rep;
}

template <Semiring S>
CheckReport check_commutations(const CheckConfig&, int r, const Partition& lambda) {
    auto rep = make_report("commutations", S::id, r, lambda);
    const auto form = kronecker<S>();
    const auto u = schubert_basis<S>(r, lambda);
    const int top = r + lambda.part(1);
    for (int i = 0; i <= top; ++i)
        for (int j = 0; j <= top; ++j) {
            auto v = check_commutations(i, j, u, form);
            const char* which = !v.wedge_anticommute      ? "wedge"
                                : !v.contract_anticommute ? "contract"
                                : !v.mixed                ? "mixed"
                                : !v.mixed_swapped        ? "mixed_swapped"
                                                          : nullptr;
            if (which && rep.verdict == Verdict::holds) {
                rep.verdict = Verdict::fails;
                rep.note = std::string(which) + " at i=" + std::to_string(i) + " j=" + std::to_string(j);
            }
        }
    return rep;
}

template <Semiring S>
CheckReport check_pieri(const CheckConfig& cfg, int r, const Partition& lambda, const PieriOracle& oracle) {
    auto rep = make_report("pieri", S::id, r, lambda);
    const int top = cfg.pieri_max;
    auto expansion = apply_map(sigma_plus<S>(Var::z, top, cfg.bound), basis_series<S>(r, lambda));
    for (int i = 0; i <= top && rep.verdict == Verdict::holds; ++i) {
        auto coeff = expansion.coefficient(i, 0);
        Wedge<S> expected;
        for (const auto& mu : oracle(lambda, i, r, cfg.bound)) expected += schubert_basis<S>(r, mu);
        if (const auto* key = first_surpass_failure(expected, coeff)) {
            rep.verdict = Verdict::fails;
            rep.witness = Witness{i, 0, *key};
            rep.note = "pieri sum not below expansion";
        } else if (!S::idempotent_add && !(fe_tangible_part(coeff) == expected)) {
            rep.verdict = Verdict::fails;
            rep.witness = Witness{i, 0, {}};
            rep.note = "tangible part differs from pieri sum";
        }
    }
    return rep;
}

#define EXSYS_INSTANTIATE(S)                                                                                 \
    template CheckReport check_quasi_inverse<S>(const CheckConfig&, int, const Partition&);                 \
    template CheckReport check_quasi_inverse_endo<S>(const CheckConfig&, int, const Partition&);            \
    template CheckReport check_thm313<S>(const CheckConfig&, int, const Partition&);                        \
    template CheckReport check_thm515<S>(const CheckConfig&, int, const Partition&);                        \
    template CheckReport check_thm515_corrected<S>(const CheckConfig&, int, const Partition&);              \
    template CheckReport check_lem633<S>(const CheckConfig&, int, const Partition&);                        \
    template CheckReport check_lemma433<S>(const CheckConfig&, int, const Partition&);                      \
    template CheckReport check_main_theorem<S>(const CheckConfig&, int, const Partition&, Prefactor);       \
    template CheckReport check_main_theorem_corrected<S>(const CheckConfig&, int, const Partition&);        \
    template CheckReport check_clifford_relations<S>(const CheckConfig&, int, const Partition&);            \
    template CheckReport check_commutations<S>(const CheckConfig&, int, const Partition&);                  \
    template CheckReport check_pieri<S>(const CheckConfig&, int, const Partition&, const PieriOracle&);     \
    template MainTheoremSides<S> main_theorem_sides<S>(const CheckConfig&, int, const Partition&, Prefactor); \
    template Wedge<S> pinned_generating_coefficient<S>();

EXSYS_INSTANTIATE(Nat)
EXSYS_INSTANTIATE(QPlus)
EXSYS_INSTANTIATE(MaxPlus)

#undef EXSYS_INSTANTIATE

namespace {

struct Job {
    std::size_t check_rank;
    std::string semiring;
    int r;
    Partition lambda;
};

template <Semiring S>
CheckReport run_one(const CheckConfig& cfg, const std::string& check, int r, const Partition& lambda,
                    Prefactor prefactor, const PieriOracle& oracle) {
    if (check == "quasi_inverse") return check_quasi_inverse<S>(cfg, r, lambda);
    if (check == "quasi_inverse_endo") return check_quasi_inverse_endo<S>(cfg, r, lambda);
    if (check == "thm313") return check_thm313<S>(cfg, r, lambda);
    if (check == "thm515") return check_thm515<S>(cfg, r, lambda);
    if (check == "thm515_corrected") return check_thm515_corrected<S>(cfg, r, lambda);
    if (check == "lem633") return check_lem633<S>(cfg, r, lambda);
    if (check == "lemma433") return check_lemma433<S>(cfg, r, lambda);
    if (check == "main_theorem") return check_main_theorem<S>(cfg, r, lambda, prefactor);
    if (check == "main_theorem_corrected") return check_main_theorem_corrected<S>(cfg, r, lambda);
    if (check == "clifford_relations") return check_clifford_relations<S>(cfg, r, lambda);
    if (check == "commutations") return check_commutations<S>(cfg, r, lambda);
    if (check == "pieri") return check_pieri<S>(cfg, r, lambda, oracle);
    throw std::invalid_argument("unknown check '" + check + "'");
}

bool instance_allowed(const CheckConfig& cfg, const std::string& check, int r, const Partition& lambda) {
    if (!cfg.bound.n) return true;
    // thm313 also uses [x]^{r+1}_λ. lemma433 lowers after raising, and lowering does not pass to the
    // truncated space, so the top exponent needs one step of headroom.
    const int extra = check == "thm313" || check == "lemma433" ? 1 : 0;
    return r + extra < *cfg.bound.n && lambda.part(1) <= *cfg.bound.n - r - extra;
}

// Prefactor variant that makes the main theorem hold on the r = 1, 2 instances over ℕ.
std::string resolve_prefactor(const CheckConfig& cfg) {
    CheckConfig small = cfg;
    small.zmax = std::min(cfg.zmax, 6);
    bool pos_ok = true, neg_ok = true;
    for (int r = 1; r <= std::min(2, cfg.rmax); ++r)
        for (const auto& lambda : partitions_up_to(std::min(cfg.weight, 3), r)) {
            if (!instance_allowed(cfg, "main_theorem", r, lambda)) continue;
            pos_ok = pos_ok && check_main_theorem<Nat>(small, r, lambda, Prefactor::w_pos).verdict == Verdict::holds;
            neg_ok = neg_ok && check_main_theorem<Nat>(small, r, lambda, Prefactor::w_neg).verdict == Verdict::holds;
        }
    if (pos_ok && neg_ok) return "both";
    if (pos_ok) return "w_pos";
    if (neg_ok) return "w_neg";
    return "none";
}

}  // namespace

SuiteResult run_suite(const CheckConfig& cfg, const PieriOracle& oracle) {
    SuiteResult result;
    result.summary.warnings = cfg.validate();

    const auto& names = all_check_names();
    Prefactor prefactor = Prefactor::w_pos;
    if (cfg.enabled("main_theorem")) {
        result.summary.prefactor = resolve_prefactor(cfg);
        if (result.summary.prefactor == "w_neg") prefactor = Prefactor::w_neg;
    }

    std::vector<Job> jobs;
    for (std::size_t c = 0; c < names.size(); ++c) {
        if (!cfg.enabled(names[c])) continue;
        for (const auto& sr : cfg.semirings)
            for (int r = 1; r <= cfg.rmax; ++r)
                for (const auto& lambda : partitions_up_to(cfg.weight, r))
                    if (instance_allowed(cfg, names[c], r, lambda)) jobs.push_back({c, sr, r, lambda});
    }

    // heaviest instances first for better load balance
    std::vector<std::size_t> order(jobs.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return jobs[a].r + jobs[a].lambda.weight() > jobs[b].r + jobs[b].lambda.weight();
    });

    std::vector<CheckReport> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k = next++; k < order.size(); k = next++) {
            const auto& job = jobs[order[k]];
            try {
                reports[order[k]] = with_semiring(job.semiring, [&](auto s) {
                    using S = decltype(s);
                    return run_one<S>(cfg, names[job.check_rank], job.r, job.lambda, prefactor, oracle);
                });
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    for (const auto& rep : reports) {
        switch (rep.verdict) {
            case Verdict::holds: ++result.summary.holds; break;
            case Verdict::fails: ++result.summary.fails; break;
            case Verdict::inconclusive: ++result.summary.inconclusive; break;
        }
    }
    result.reports = std::move(reports);
    return result;
}

int suite_exit_code(const SuiteSummary& summary) {
    if (summary.fails > 0) return 1;
    if (summary.inconclusive > 0) return 2;
    return 0;
}

}  // namespace exsys
