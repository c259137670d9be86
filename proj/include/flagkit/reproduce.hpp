#pragma once

#include "flagkit/report.hpp"

namespace flagkit {

/// One-shot reproduction suite for the worked examples: closed-form ρ checks
/// and the ρ_c = ρ_nc classification for SU(r,s), the Sp(2n) parity formula,
/// the cup-pair searches (Sp(4) empty, Sp(6) discovery, Sp(8)/Sp(10) empty),
/// the witness-lemma sweeps, the Chevalley suite, and the su(2,1) threshold.
/// Deterministic: identical calls produce identical reports.
VerificationReport reproduce_examples();

}  // namespace flagkit
