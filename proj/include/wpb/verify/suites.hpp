#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpb/verify/config.hpp"
#include "wpb/verify/report.hpp"

namespace wpb::verify {

/// algebra, pairing, bicoherent, identities, displacement, all.
const std::vector<std::string>& suite_names();

/// Runs a named suite; std::nullopt for an unknown name.
std::optional<VerificationReport> run_suite(const std::string& name, const ToleranceConfig& tol);

VerificationReport run_algebra(const ToleranceConfig& tol);
VerificationReport run_pairing(const ToleranceConfig& tol);
VerificationReport run_bicoherent(const ToleranceConfig& tol);
VerificationReport run_identities(const ToleranceConfig& tol);
VerificationReport run_displacement(const ToleranceConfig& tol);

}  // namespace wpb::verify
