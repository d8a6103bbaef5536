#pragma once

#include <string>

#include <json.hpp>

#include "cyw/brauer_dga.hpp"
#include "cyw/config.hpp"
#include "cyw/truncpoly.hpp"

namespace cyw {

using json = nlohmann::ordered_json;

json to_json(const polygon& P);
json to_json(const brauer_relation& B);
json to_json(const b_cycle& c);
json to_json(const graded_quiver& Q);
json to_json(const algebra_presentation& A);
json to_json(const augmented_quiver& Q);
json to_json(const cm_quiver& Q);
json config_to_json(const quotient_context& ctx, const configuration& S);

std::string to_dot(const graded_quiver& Q);
std::string to_dot(const augmented_quiver& Q);
std::string to_dot(const cm_quiver& Q);

std::string to_tikz(const polygon& P, const brauer_relation& B);
std::string to_tikz(const graded_quiver& Q);
std::string to_tikz(const augmented_quiver& Q);
std::string to_tikz(const cm_quiver& Q);

/// Light syntactic validation used by the test suite: balanced structure and
/// well-formed statements only.
bool validate_dot(const std::string& doc);
bool validate_tikz(const std::string& doc);

} // namespace cyw
