#pragma once

#include "exsys/schubert.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace exsys {

enum class Prefactor { w_pos, w_neg };

inline const char* prefactor_name(Prefactor p) { return p == Prefactor::w_pos ? "w_pos" : "w_neg"; }

struct CheckConfig {
    std::vector<std::string> semirings{"nat"};
    RankBound bound;
    int rmax = 3;
    int weight = 6;
    int zmax = 8;
    int wmax = 8;
    int pieri_max = 4;
    std::vector<std::string> checks;  // empty: every check
    unsigned threads = 0;             // 0: hardware concurrency

    // Throws std::invalid_argument on a bad configuration; returns advisory warnings.
    std::vector<std::string> validate() const;
    bool enabled(const std::string& check) const;
};

struct CheckReport {
    std::string check;
    std::string semiring;
    int r = 0;
    Partition lambda;
    Verdict verdict = Verdict::holds;
    std::optional<Witness> witness;
    std::string note;
};

struct SuiteSummary {
    int holds = 0;
    int fails = 0;
    int inconclusive = 0;
    std::string prefactor;  // resolved main-theorem prefactor: w_pos, w_neg, both or none
    std::vector<std::string> warnings;
};

struct SuiteResult {
    std::vector<CheckReport> reports;
    SuiteSummary summary;
};

// Checks in the order they run and are reported.
const std::vector<std::string>& all_check_names();

// Each check evaluates one instance (r, λ) over semiring S.
template <Semiring S>
CheckReport check_quasi_inverse(const CheckConfig& cfg, int r, const Partition& lambda);
template <Semiring S>
CheckReport check_quasi_inverse_endo(const CheckConfig& cfg, int r, const Partition& lambda);
template <Semiring S>
CheckReport check_thm313(const CheckConfig& cfg, int r, const Partition& lambda);
template <Semiring S>
CheckReport check_thm515(const CheckConfig& cfg, int r, const Partition& lambda);
template <Semiring S>
CheckReport check_thm515_corrected(const CheckConfig& cfg, int r, const Partition& lambda);
template <Semiring S>
CheckReport check_lem633(const CheckConfig& cfg, int r, const Partition& lambda);
template <Semiring S>
CheckReport check_lemma433(const CheckConfig& cfg, int r, const Partition& lambda);
template <Semiring S>
CheckReport check_main_theorem(const CheckConfig& cfg, int r, const Partition& lambda, Prefactor prefactor);
template <Semiring S>
CheckReport check_main_theorem_corrected(const CheckConfig& cfg, int r, const Partition& lambda);
template <Semiring S>
CheckReport check_clifford_relations(const CheckConfig& cfg, int r, const Partition& lambda);
template <Semiring S>
CheckReport check_commutations(const CheckConfig& cfg, int r, const Partition& lambda);

using PieriOracle = std::function<std::vector<Partition>(const Partition&, int, int, RankBound)>;

template <Semiring S>
CheckReport check_pieri(const CheckConfig& cfg, int r, const Partition& lambda, const PieriOracle& oracle = pieri);

// Both sides of the main theorem for one instance, truncated to the configured window.
template <Semiring S>
struct MainTheoremSides {
    BiSeries<S> lhs;
    BiSeries<S> rhs;
    BiSeries<S> rhs_corrected;
    SeriesWindow window;
};

template <Semiring S>
MainTheoremSides<S> main_theorem_sides(const CheckConfig& cfg, int r, const Partition& lambda, Prefactor prefactor);

// Coefficient of z^2 w^{-3} in x(z) ∧ ∂(w⁻¹)⌟[x]^3_{(3,2,1)}.
template <Semiring S>
Wedge<S> pinned_generating_coefficient();

// Runs every enabled check on every instance and semiring, in parallel, ordered deterministically.
SuiteResult run_suite(const CheckConfig& cfg, const PieriOracle& oracle = pieri);

// Exit status convention: 0 all hold, 1 any fails, 2 inconclusive present.
int suite_exit_code(const SuiteSummary& summary);

}  // namespace exsys
