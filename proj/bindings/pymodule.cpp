#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "apcqc/apc.hpp"
#include "apcqc/codec.hpp"
#include "apcqc/klverify.hpp"
#include "apcqc/logicfn.hpp"

namespace py = pybind11;

namespace {

using apcqc::CodeSpec;
using apcqc::FpFunction;
using apcqc::FpVector;

FpVector to_vec(int p, const std::vector<int>& coords) { return FpVector(p, coords); }

std::vector<FpVector> to_family(int p, const std::vector<std::vector<int>>& betas) {
    std::vector<FpVector> out;
    out.reserve(betas.size());
    for (const auto& b : betas) out.emplace_back(p, b);
    return out;
}

std::vector<std::vector<int>> from_family(const std::vector<FpVector>& betas) {
    std::vector<std::vector<int>> out;
    out.reserve(betas.size());
    for (const auto& b : betas) out.push_back(b.coords());
    return out;
}

std::vector<long long> cyc_coeffs(const apcqc::CycInt& value) {
    std::vector<long long> out;
    for (const auto& c : value.canonical()) out.push_back(static_cast<long long>(c));
    return out;
}

py::dict apc_dict(const apcqc::ApcResult& result) {
    py::dict out;
    if (result.attained()) {
        out["distance"] = *result.distance;
        out["witness_a"] = result.witness->a.coords();
        out["witness_b"] = result.witness->b.coords();
    } else {
        out["distance"] = py::none();
    }
    return out;
}

py::dict witness_dict(const apcqc::KlWitness& w) {
    py::dict out;
    out["a"] = w.a.coords();
    out["b"] = w.b.coords();
    out["i"] = w.i;
    out["j"] = w.j;
    out["kind"] = w.kind_str();
    return out;
}

CodeSpec make_code(int p, int n, const std::vector<int>& table,
                   const std::vector<std::vector<int>>& betas, int d_prime, int d_claimed) {
    CodeSpec code{FpFunction(p, n, table), to_family(p, betas), d_prime, d_claimed};
    code.validate();
    return code;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "APC distance and logic-state quantum code toolkit over F_p";

    m.def("is_prime", &apcqc::is_prime, py::arg("p"));

    m.def(
        "ws", [](int p, const std::vector<int>& a, const std::vector<int>& b) {
            return apcqc::ws(to_vec(p, a), to_vec(p, b));
        },
        py::arg("p"), py::arg("a"), py::arg("b"),
        "Symmetrical weight: positions where (a_i, b_i) != (0, 0)");
    m.def(
        "wh", [](int p, const std::vector<int>& a, const std::vector<int>& b) {
            return apcqc::wh(to_vec(p, a), to_vec(p, b));
        },
        py::arg("p"), py::arg("a"), py::arg("b"), "Hamming distance");
    m.def(
        "dot", [](int p, const std::vector<int>& a, const std::vector<int>& b) {
            return apcqc::dot(to_vec(p, a), to_vec(p, b));
        },
        py::arg("p"), py::arg("a"), py::arg("b"), "Inner product mod p");

    m.def(
        "parse_poly", [](const std::string& expr, int p, int n) {
            return apcqc::parse_poly(expr, p, n).table();
        },
        py::arg("expr"), py::arg("p"), py::arg("n"),
        "Truth table of a polynomial expression, big-endian in x1");
    m.def(
        "add_linear", [](int p, int n, const std::vector<int>& table,
                         const std::vector<int>& beta) {
            return FpFunction(p, n, table).add_linear(to_vec(p, beta)).table();
        },
        py::arg("p"), py::arg("n"), py::arg("table"), py::arg("beta"));

    m.def(
        "char_sum", [](int p, int n, const std::vector<int>& table, const std::vector<int>& a,
                       const std::vector<int>& b) {
            return cyc_coeffs(apcqc::char_sum(FpFunction(p, n, table), to_vec(p, a), to_vec(p, b)));
        },
        py::arg("p"), py::arg("n"), py::arg("table"), py::arg("a"), py::arg("b"),
        "Canonical cyclotomic coefficients of the character sum");
    m.def(
        "apc_distance", [](int p, int n, const std::vector<int>& table) {
            return apc_dict(apcqc::apc_distance(FpFunction(p, n, table)));
        },
        py::arg("p"), py::arg("n"), py::arg("table"));

    m.def(
        "code_distance", [](int p, int n, const std::vector<std::vector<int>>& betas,
                            int d_prime) {
            return apcqc::code_distance(to_family(p, betas), d_prime, p, n);
        },
        py::arg("p"), py::arg("n"), py::arg("betas"), py::arg("d_prime"),
        "Distance of the code built from a beta family");
    m.def(
        "build_betas_large_p", [](int n, int k, int p) {
            return from_family(apcqc::build_betas_large_p(n, k, p));
        },
        py::arg("n"), py::arg("k"), py::arg("p"));
    m.def(
        "build_betas_small_p", [](int n, int k, int p) {
            return from_family(apcqc::build_betas_small_p(n, k, p));
        },
        py::arg("n"), py::arg("k"), py::arg("p"));
    m.def(
        "check_wh_constraint", [](int p, const std::vector<std::vector<int>>& betas, int k) {
            return apcqc::check_wh_constraint(to_family(p, betas), k);
        },
        py::arg("p"), py::arg("betas"), py::arg("k"));
    m.def(
        "max_K", [](int n, int p, int d_prime, int k, bool headline) {
            return apcqc::max_K(n, p, d_prime, k,
                                headline ? apcqc::KBoundVersion::kHeadline
                                         : apcqc::KBoundVersion::kDerived);
        },
        py::arg("n"), py::arg("p"), py::arg("d_prime"), py::arg("k"),
        py::arg("headline") = false);
    m.def("singleton_bound_K", &apcqc::singleton_bound_K, py::arg("n"), py::arg("d"),
          py::arg("p"));
    m.def("mds_saturates", &apcqc::mds_saturates, py::arg("n"), py::arg("K"), py::arg("d"),
          py::arg("p"));
    m.def(
        "mds_condition", [](int n, int p, int d_prime, int k) {
            auto cond = apcqc::mds_condition(n, p, d_prime, k);
            py::dict out;
            out["case"] = cond.case_id;
            out["holds"] = cond.holds;
            out["beyond_k_bound_range"] = cond.beyond_k_bound_range;
            return out;
        },
        py::arg("n"), py::arg("p"), py::arg("d_prime"), py::arg("k"));

    m.def(
        "build_state", [](int p, int n, const std::vector<int>& table,
                          const std::vector<int>& beta) {
            return apcqc::build_state(FpFunction(p, n, table), to_vec(p, beta)).exponents();
        },
        py::arg("p"), py::arg("n"), py::arg("table"), py::arg("beta"),
        "Exponent table of the logic state of f shifted by beta");
    m.def(
        "apply_error", [](int p, int n, const std::vector<int>& exponents,
                          const std::vector<int>& a, const std::vector<int>& b) {
            return apcqc::apply_error(apcqc::PhaseState(p, n, exponents), to_vec(p, a),
                                      to_vec(p, b))
                .exponents();
        },
        py::arg("p"), py::arg("n"), py::arg("exponents"), py::arg("a"), py::arg("b"));
    m.def(
        "inner", [](int p, int n, const std::vector<int>& e1, const std::vector<int>& e2) {
            return cyc_coeffs(apcqc::inner(apcqc::PhaseState(p, n, e1),
                                           apcqc::PhaseState(p, n, e2)));
        },
        py::arg("p"), py::arg("n"), py::arg("e1"), py::arg("e2"),
        "Exact p^n times <s1|s2>, as canonical cyclotomic coefficients");

    m.def(
        "kl_check", [](int p, int n, const std::vector<int>& table,
                       const std::vector<std::vector<int>>& betas, int d_prime, int d_claimed,
                       int t) {
            auto result = apcqc::kl_check(make_code(p, n, table, betas, d_prime, d_claimed), t);
            py::dict out;
            out["ok"] = result.ok;
            out["witness"] = result.witness ? py::object(witness_dict(*result.witness))
                                            : py::object(py::none());
            return out;
        },
        py::arg("p"), py::arg("n"), py::arg("table"), py::arg("betas"), py::arg("d_prime") = 2,
        py::arg("d_claimed") = 0, py::arg("t") = 0);
    m.def(
        "kl_distance", [](int p, int n, const std::vector<int>& table,
                          const std::vector<std::vector<int>>& betas) {
            auto result =
                apcqc::kl_distance(make_code(p, n, table, betas, /*d_prime=*/2, /*d_claimed=*/0));
            py::dict out;
            out["distance"] = result.distance;
            out["witness"] = result.witness ? py::object(witness_dict(*result.witness))
                                            : py::object(py::none());
            return out;
        },
        py::arg("p"), py::arg("n"), py::arg("table"), py::arg("betas"),
        "Exhaustive Knill-Laflamme distance of the code");
}
