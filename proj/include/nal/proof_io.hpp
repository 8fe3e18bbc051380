#pragma once

// Canonical proof-tree document: one JSON object per node with fields
// rule, [hyp], sequent, [position], [aux], premises — premises in rule order.

#include <string>

#include "nal/calculus.hpp"

namespace nal {

std::string proof_to_text(const Proof& p);
Proof proof_from_text(const std::string& text, const LanguageOpts& lang);

void save_proof(const std::string& path, const Proof& p);
Proof load_proof(const std::string& path, const LanguageOpts& lang);

}  // namespace nal
