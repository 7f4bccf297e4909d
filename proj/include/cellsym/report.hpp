#pragma once

#include <string>
#include <vector>

#include "cellsym/bsymbol.hpp"
#include "cellsym/dsymbol.hpp"
#include "cellsym/exceptional.hpp"
#include "cellsym/f2_lattice.hpp"

namespace cellsym {

// {"n": n, "families": [{"key": [...], "p": p, "members": [...],
//  "special": "...", "antispecial": [...]}]}, families sorted by key.
std::string families_json(unsigned n, const std::vector<Family>& fams);

// Same schema with "type": "D" and "kind": "prime".
std::string families_json_d(unsigned n, const std::vector<DFamily>& fams);

std::string symbols_json(unsigned n, const std::vector<BSymbol>& symbols);
std::string symbols_json_d(unsigned n, DKind kind, const std::vector<DSymbol>& symbols);

// Catalog dump with canonical bases as sorted lists of bit-strings.
std::string catalog_json(const SubspaceCatalog& cat);

// Full dump of one exceptional-family record.
std::string family_record_json(const ExceptionalFamily& fam);

}  // namespace cellsym
