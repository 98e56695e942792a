#pragma once

// Minimal uncompletable words: completeness of Fact(S*) for finite S,
// shortest uncompletable words, and the brute-force oracles that check them.
// muw/report.hpp (JSON) is separate; it needs nlohmann/json on the include path.

#include "muw/analysis.hpp"
#include "muw/automaton.hpp"
#include "muw/error.hpp"
#include "muw/families.hpp"
#include "muw/oracle.hpp"
#include "muw/search.hpp"
#include "muw/word.hpp"
#include "muw/wordlist.hpp"
