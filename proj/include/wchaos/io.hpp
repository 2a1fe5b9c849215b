#pragma once

#include <iosfwd>
#include <string>

#include "wchaos/chaos.hpp"
#include "wchaos/montecarlo.hpp"
#include "wchaos/symtensor.hpp"

namespace wchaos {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Kernel file format: {"q": int, "dim": int, "entries": [{"idx": [...], "val": r}]}
// with 1-based sorted indices; unlisted indices are zero.
SymTensor kernel_from_json(const std::string& text);
std::string kernel_to_json(const SymTensor& f);

// Expansion format: {"dim": int, "constant": r, "kernels": [{"q": int, "tensor": ...}]}
ChaosExpansion expansion_from_json(const std::string& text);
std::string expansion_to_json(const ChaosExpansion& F);

// Detects either format. Single kernels are wrapped as I_q(f).
ChaosExpansion load_input(const std::string& path);
std::string read_file(const std::string& path);

std::string estimator_to_jsonl(const EstimatorResult& r);

}  // namespace wchaos
