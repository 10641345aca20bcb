#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "balcx/json_io.hpp"

namespace balcx {

inline constexpr int kFixtureVersion = 1;

/// Alternating +-1 on the cycle 1-2-...-m-1, labels inside [n-1].
WeightedComplex alternating_cycle(int m, int n, FieldSpec field = FieldSpec{});

/// Tetrahedra {2i-1, 2i, 2i+1, 2i+2}, the last wrapping to {2m-1, 2m, 1, 2},
/// with faces abc, abd weighted 1 and acd, bcd weighted -1 for the listed
/// order (a, b, c, d). Needs m >= 3; n = 2m + 1.
WeightedComplex tetrahedra_cycle(int m, FieldSpec field = FieldSpec{});

/// Product of the 0-complexes {2i-1} - {2i}, i = 1..d, with product weights;
/// n = 2d + 1.
WeightedComplex orthoplex(int d, FieldSpec field = FieldSpec{});

/// Names accepted by fixture(), sorted.
std::vector<std::string> fixture_names();

/// Embedded JSON document with a "kind" member: "complex",
/// "weighted-complex", "divisor-class", "curve-class" or "hypertree".
Json fixture(std::string_view name);

/// "fixtures://NAME", "-" for standard input, or a file path, parsed as JSON.
/// Malformed JSON and unreadable files throw DomainError.
Json load_document(std::string_view source);

}  // namespace balcx
