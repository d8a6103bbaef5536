#pragma once

#include <cstdint>
#include <vector>

#include "cyw/homtable.hpp"
#include "cyw/quotient.hpp"

namespace cyw {

/// Configurations are sorted lists of quotient vertex indices, bound to the
/// quotient the table was built for.
using configuration = std::vector<int>;

/// Conditions (1) and (2): hbar_x(y) = delta_{x,y} and hbar_x(y[-j]) = 0 for
/// 0 < j <= d-1, over all x, y in S.
bool is_preconfiguration(const hom_table& table, const configuration& S);

/// Pre-configuration plus coverage: every quotient vertex z has some x in S
/// and 0 <= j <= d-1 with hbar_x(z[-j]) != 0.
bool is_configuration(const hom_table& table, const configuration& S);

/// The complete, duplicate-free set of configurations, sorted canonically.
/// max_states caps the number of search nodes (0 = unlimited).
std::vector<configuration> enumerate_configurations(const hom_table& table, std::uint64_t max_states = 0);

/// Preimage of the configuration in Z\Delta, w copies per vertex: the orbit
/// elements g^m(rep) for 0 <= m < w.
std::vector<zvertex> lift(const quotient_context& ctx, const configuration& S, int w);

/// Partition into orbits under the shift [1]; each class is sorted with the
/// lexicographically smallest configuration first.
std::vector<std::vector<configuration>> rotation_classes(const quotient_context& ctx,
                                                         const std::vector<configuration>& configs);

configuration shift_configuration(const quotient_context& ctx, const configuration& S);

/// Sorted label list ("i-j" for family A, "(p,q)" otherwise).
std::vector<std::string> configuration_labels(const quotient_context& ctx, const configuration& S);
std::string configuration_name(const quotient_context& ctx, const configuration& S);

} // namespace cyw
