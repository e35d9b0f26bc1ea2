#include "apcqc/report.hpp"

#include <fstream>
#include <sstream>

namespace apcqc {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string table_digest(const FpFunction& f) {
    std::string joined;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) joined += ' ';
        joined += std::to_string(f.at(i));
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(joined)));
    return buf;
}

nlohmann::json vector_json(const FpVector& v) {
    return nlohmann::json(v.coords());
}

FpVector vector_from_json(int p, const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::runtime_error("vector must be a nonempty JSON array");
    }
    std::vector<int> coords;
    coords.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number_integer()) {
            throw std::runtime_error("vector entries must be integers");
        }
        coords.push_back(e.get<int>());
    }
    return FpVector(p, std::move(coords));
}

nlohmann::json cycint_json(const CycInt& value) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : value.canonical()) {
        // Canonical coefficients of the sums produced here are bounded by
        // p^n and fit comfortably in 64 bits.
        out.push_back(static_cast<std::int64_t>(c));
    }
    return out;
}

nlohmann::json function_echo_json(const FpFunction& f) {
    return nlohmann::json{{"p", f.p()},
                          {"n", f.n()},
                          {"header", f.header()},
                          {"table_digest", table_digest(f)}};
}

nlohmann::json apc_result_json(const ApcResult& result) {
    nlohmann::json out;
    if (result.attained()) {
        out["attained"] = true;
        out["distance"] = *result.distance;
        out["witness"] = {{"a", vector_json(result.witness->a)},
                          {"b", vector_json(result.witness->b)}};
    } else {
        out["attained"] = false;
    }
    return out;
}

nlohmann::json codespec_json(const CodeSpec& code) {
    nlohmann::json betas = nlohmann::json::array();
    for (const auto& beta : code.betas) {
        betas.push_back(vector_json(beta));
    }
    return nlohmann::json{{"p", code.p()},
                          {"n", code.n()},
                          {"f", {{"header", code.f.header()}, {"table", code.f.table()}}},
                          {"betas", betas},
                          {"d_prime", code.d_prime},
                          {"d_claimed", code.d_claimed}};
}

CodeSpec codespec_from_json(const nlohmann::json& j) {
    for (const char* key : {"p", "n", "f", "betas", "d_prime", "d_claimed"}) {
        if (!j.contains(key)) {
            throw std::runtime_error(std::string("code spec: missing field '") + key + "'");
        }
    }
    int p = j.at("p").get<int>();
    int n = j.at("n").get<int>();
    const auto& fj = j.at("f");
    if (!fj.contains("table")) {
        throw std::runtime_error("code spec: missing f.table");
    }
    std::vector<int> table = fj.at("table").get<std::vector<int>>();
    FpFunction f(p, n, std::move(table));
    if (fj.contains("header") && fj.at("header").get<std::string>() != f.header()) {
        throw std::runtime_error("code spec: header does not match p/n");
    }
    std::vector<FpVector> betas;
    for (const auto& bj : j.at("betas")) {
        betas.push_back(vector_from_json(p, bj));
    }
    CodeSpec code{std::move(f), std::move(betas), j.at("d_prime").get<int>(),
                  j.at("d_claimed").get<int>()};
    code.validate();
    return code;
}

CodeSpec load_codespec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("code spec: invalid JSON: " + std::string(e.what()));
    }
    return codespec_from_json(j);
}

void save_codespec(const std::string& path, const CodeSpec& code) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write code spec file: " + path);
    out << codespec_json(code).dump(2) << '\n';
}

nlohmann::json kl_witness_json(const KlWitness& w) {
    return nlohmann::json{{"a", vector_json(w.a)},
                          {"b", vector_json(w.b)},
                          {"i", w.i},
                          {"j", w.j},
                          {"kind", w.kind_str()}};
}

}  // namespace apcqc
