// bosim: photon occupation states and their enumeration.
#pragma once

#include "bosim/types.hpp"

#include <string>
#include <vector>

namespace bosim {

// Occupation numbers per mode, s[0]..s[m-1].
using FockState = std::vector<int>;

int total_photons(const FockState& s);

double factorial(int n);

/// Product of s_i! over the state.
double occupation_factorial(const FockState& s);

/// All m-mode states with n photons total, ascending lexicographic order.
/// collision_free restricts to occupations 0/1 (C(m,n) states instead of
/// C(m+n-1, n)).
std::vector<FockState> enumerate_states(int m, int n, bool collision_free);

/// "10101" or "1,0,1,0,1" -> occupations. Throws Error("parse") on anything
/// else; multi-digit occupations require the comma form.
FockState parse_state(const std::string& text);

std::string format_state(const FockState& s);

} // namespace bosim
