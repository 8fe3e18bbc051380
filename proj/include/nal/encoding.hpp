#pragma once

// Translations between structures, formulas and hypothesis sequents: rho
// turns a structure into the corresponding fusion formula, sigma maps the
// empty succedent to 0, tau(s) = !(rho(x)\a), tau*(s) = !(rho(x)\sigma(a)),
// and encode_consequence reduces provability-from-hypotheses to plain
// provability by pairing the goal with the right-nested fold of the tau's.

#include <iosfwd>
#include <string>
#include <vector>

#include "nal/syntax.hpp"

namespace nal {

Formula rho(const Structure& x);

// Identity on formulas, 0 on the empty succedent.
Formula sigma(const Formula& succ);

Formula tau(const Sequent& s);
Formula tau_star(const Sequent& s);

// Antecedent becomes goal.ante . (tau(s1) . (tau(s2) . ... tau(sn))), with the
// fold strictly right-nested; empty hyps return the goal unchanged.
// `classical` selects tau* instead of tau.
Sequent encode_consequence(const HypothesisSet& hyps, const Sequent& goal,
                           bool classical = false);

// One sequent per line; '#' starts a comment line, blank lines are skipped.
// Line order fixes the fold order.
HypothesisSet parse_hypothesis_lines(std::istream& in, const LanguageOpts& lang);
HypothesisSet load_hypothesis_file(const std::string& path, const LanguageOpts& lang);

}  // namespace nal
