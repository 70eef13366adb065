#pragma once

#include <gmpxx.h>

#include <nlohmann/json.hpp>
#include <string>

#include "ordgen/finalg.hpp"
#include "ordgen/solver.hpp"

namespace ordgen {

/// Machine documents use nlohmann::json, whose objects keep keys sorted, so
/// parse(render_machine(doc)) re-renders byte-identically. Integers that may
/// exceed 64 bits and all rationals are strings ("num/den").
using Json = nlohmann::json;

std::string rational_string(const mpq_class& x);
/// Decimal rendering with `digits` significant digits.
std::string decimal_string(const mpq_class& x, int digits = 12);

Json verdict_json(const OrderSpec& spec, const Verdict& v);
Json density_json(const OrderSpec& spec, const DensityInterval& d);
Json quaternion_json(const QuaternionTable& t);
Json estimate_json(const FiniteAlgebra& a, int k, std::uint64_t seed, const SampleEstimate& e);

std::string render_machine(const Json& doc);
std::string render_verdict_text(const Json& doc);
std::string render_density_text(const Json& doc);
std::string render_quaternion_text(const Json& doc);
/// Aligned "key  value" lines for flat documents.
std::string render_flat_text(const Json& doc);

}  // namespace ordgen
