#pragma once

// Decomposition results shared by the closed-form and brute-force engines.

#include "osprep/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace osprep {

struct Summand {
    Weight nonstandard;
    Weight standard;
    int multiplicity = 1;

    friend bool operator==(const Summand&, const Summand&) = default;
};

enum class Shape { completely_reducible, chain };

inline const char* to_string(Shape s) { return s == Shape::chain ? "chain" : "completely_reducible"; }

/// W contains V, V contains K_inner, V / K_inner = K_upper; nothing is claimed about W / V.
struct ChainInfo {
    Weight upper;
    Weight inner;
    std::vector<std::string> notes;
};

struct DecompositionResult {
    Context ctx;
    std::vector<Summand> summands;
    Shape shape = Shape::completely_reducible;
    std::optional<ChainInfo> chain;
};

/// Summand from a nonstandard label; the standard label follows by odd reflections.
inline Summand summand_from_nonstandard(const Weight& mu, int mult = 1) {
    return {mu, to_standard_formal(mu), mult};
}

}  // namespace osprep
