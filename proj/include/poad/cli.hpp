#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "poad/catalog.hpp"

namespace poad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

/// Runs one command. args excludes the program name.
/// Exit codes: 0 success, 1 usage or parse error, 2 computation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct LawCheck {
    std::string law;
    std::size_t cases = 0;
    std::size_t failures = 0;
};

/// Exercises the stringing/scaling group laws and the overlap unit identity
/// on every pattern (pair, triple) of the catalog.
std::vector<LawCheck> check_axioms(const Catalog& catalog);

}  // namespace poad::cli
