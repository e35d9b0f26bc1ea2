#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "apcqc/apc.hpp"
#include "apcqc/codec.hpp"
#include "apcqc/cyclotomic.hpp"
#include "apcqc/ffvec.hpp"
#include "apcqc/klverify.hpp"
#include "apcqc/logicfn.hpp"

namespace apcqc {

// FNV-1a over the space-joined decimal truth table; stable across runs.
std::uint64_t fnv1a64(const std::string& data);
std::string table_digest(const FpFunction& f);

// JSON forms used by reports and by the code-spec file format. Every value
// is an exact integer; vectors are arrays of residues.
nlohmann::json vector_json(const FpVector& v);
FpVector vector_from_json(int p, const nlohmann::json& j);

nlohmann::json cycint_json(const CycInt& value);  // canonical coefficients

// Echo of an input function: header, sizes and a digest (not the table).
nlohmann::json function_echo_json(const FpFunction& f);

nlohmann::json apc_result_json(const ApcResult& result);

// Code-spec file format:
// {"p":..,"n":..,"f":{"header":..,"table":[..]},"betas":[[..]],
//  "d_prime":..,"d_claimed":..}
nlohmann::json codespec_json(const CodeSpec& code);
CodeSpec codespec_from_json(const nlohmann::json& j);
CodeSpec load_codespec(const std::string& path);
void save_codespec(const std::string& path, const CodeSpec& code);

nlohmann::json kl_witness_json(const KlWitness& w);

}  // namespace apcqc
