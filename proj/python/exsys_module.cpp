#include "exsys/json_io.hpp"
#include "exsys/parse.hpp"
#include "exsys/schubert.hpp"
#include "exsys/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace exsys;

namespace {

RankBound bound_of(std::optional<int> n) { return RankBound{n}; }

std::string normal_form_text(const std::string& expr, const std::string& semiring, const std::string& strategy,
                             bool eager_kill, std::optional<int> n) {
    return with_semiring(semiring, [&]<class S>(S) {
        auto parsed = parse_expression<S>(expr, {bound_of(n)});
        NormalFormOptions opts;
        opts.strategy = strategy == "rightmost" ? RewriteStrategy::rightmost : RewriteStrategy::leftmost;
        opts.eager_kill = eager_kill;
        return format_mixed(normal_form(parsed.value, BilinearForm<S>::kronecker(), opts));
    });
}

std::string wedge_text(const std::string& expr, const std::string& semiring, std::optional<int> n) {
    return with_semiring(semiring, [&]<class S>(S) { return format_wedge(parse_wedge<S>(expr, nullptr, {bound_of(n)})); });
}

std::string contract_text(const std::string& expr, int d, const std::string& semiring, std::optional<int> n) {
    return with_semiring(semiring, [&]<class S>(S) {
        auto u = parse_wedge<S>(expr, nullptr, {bound_of(n)});
        return format_wedge(contract(d, u, BilinearForm<S>::kronecker()));
    });
}

std::string schubert_text(int r, const std::vector<int>& lambda, std::optional<int> sigma, const std::string& semiring,
                          std::optional<int> n) {
    const Partition p(lambda);
    return with_semiring(semiring, [&]<class S>(S) {
        auto u = truncate_rank(schubert_basis<S>(r, p), bound_of(n));
        return format_wedge(sigma ? sigma_component(*sigma, u, bound_of(n)) : u);
    });
}

std::vector<std::vector<int>> pieri_parts(const std::vector<int>& lambda, int i, int r, std::optional<int> n) {
    std::vector<std::vector<int>> out;
    for (const auto& mu : pieri(Partition(lambda), i, r, bound_of(n))) out.push_back(mu.parts());
    return out;
}

std::string verify_json(std::vector<std::string> semirings, int rmax, int weight, int zmax, int wmax, int pieri_max,
                        std::vector<std::string> checks, std::optional<int> n, unsigned threads) {
    CheckConfig cfg;
    if (semirings.size() == 1 && semirings.front() == "all") semirings = {"nat", "qplus", "maxplus"};
    cfg.semirings = std::move(semirings);
    cfg.rmax = rmax;
    cfg.weight = weight;
    cfg.zmax = zmax;
    cfg.wmax = wmax;
    cfg.pieri_max = pieri_max;
    cfg.checks = std::move(checks);
    cfg.bound = bound_of(n);
    cfg.threads = threads;
    cfg.validate();
    SuiteResult result;
    {
        py::gil_scoped_release release;
        result = run_suite(cfg);
    }
    return suite_to_json(cfg, result).dump();
}

}  // namespace

PYBIND11_MODULE(_exsys, m) {
    m.doc() = "Exterior algebras and Schubert derivations over symmetrized semirings";
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("normal_form", &normal_form_text, py::arg("expr"), py::arg("semiring") = "nat",
          py::arg("strategy") = "leftmost", py::arg("eager_kill") = false, py::arg("n") = py::none());
    m.def("wedge", &wedge_text, py::arg("expr"), py::arg("semiring") = "nat", py::arg("n") = py::none());
    m.def("contract", &contract_text, py::arg("expr"), py::arg("d"), py::arg("semiring") = "nat",
          py::arg("n") = py::none());
    m.def("schubert", &schubert_text, py::arg("r"), py::arg("partition") = std::vector<int>{},
          py::arg("sigma") = py::none(), py::arg("semiring") = "nat", py::arg("n") = py::none());
    m.def("pieri", &pieri_parts, py::arg("partition"), py::arg("i"), py::arg("r"), py::arg("n") = py::none());
    m.def("conjugate", [](const std::vector<int>& lambda) { return conjugate(Partition(lambda)).parts(); });
    m.def("check_names", &all_check_names);
    m.def("_verify_json", &verify_json, py::arg("semirings"), py::arg("rmax"), py::arg("weight"), py::arg("zmax"),
          py::arg("wmax"), py::arg("pieri_max"), py::arg("checks"), py::arg("n"), py::arg("threads"));
}
