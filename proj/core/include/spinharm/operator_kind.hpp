#pragma once

#include <array>

namespace spinharm {

// The six angular-momentum operators, with hbar = 1: eigenvalues of Mz come
// out in units of hbar, of M2 in units of hbar^2. MplusPrime/MminusPrime are
// the ladder operators divided by hbar.
enum class OperatorKind { Mx, My, Mz, M2, MplusPrime, MminusPrime };

constexpr std::array<OperatorKind, 6> kAllOperators = {
    OperatorKind::Mx, OperatorKind::My,         OperatorKind::Mz,
    OperatorKind::M2, OperatorKind::MplusPrime, OperatorKind::MminusPrime};

const char* operator_name(OperatorKind kind);

}  // namespace spinharm
