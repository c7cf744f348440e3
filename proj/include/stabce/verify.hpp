#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stabce {

struct VerifyCheck {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0; }
};

struct VerifyOptions {
    std::uint64_t seed = 20240101;
    std::size_t purity_cases = 500;
    std::size_t measurement_cases = 200;
    std::size_t lemma_cases = 100;
    std::size_t max_qubits = 10;
};

/// Randomised cross-checks of the stabilizer engine against the dense oracle.
std::vector<VerifyCheck> run_verification(const VerifyOptions& options);

}  // namespace stabce
