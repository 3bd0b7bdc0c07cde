// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "intmult/bipath.hpp"
#include "intmult/homology.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace intmult::io {

using json = nlohmann::json;

/// Either {"n","labels","hasse"} or a generator string such as "grid:4x2",
/// "chain:5", "bipath:3,2" or "zigzag:<><".
PosetPtr poset_from_json(const json& j);
json poset_to_json(const Poset& p);

/// Resolves a label, falling back to a decimal index.
Element element_from_token(const Poset& p, const std::string& token);

/// `field_override` wins over the "field" key; the default is GF(2).
PersistenceModule module_from_json(const json& j, std::optional<Field> field_override = std::nullopt);
json module_to_json(const PersistenceModule& m);

/// Accepts "a,b,c" element lists, or "sc=a,b sk=c,d" endpoint form.
Interval interval_from_spec(const PosetPtr& p, const std::string& spec);
Interval interval_from_json(const PosetPtr& p, const json& j);
json interval_to_json(const Interval& i);

/// {"Z": poset, "P": poset, "map": [elements]}; `p` replaces "P" if given.
OrderMap order_map_from_json(const json& j, const PosetPtr& p = nullptr);

SimplicialFiltration filtration_from_json(const json& j);

/// {"entries": [{"interval": [...], "mult": n}], "decomposable": bool}.
json diagram_to_json(const Diagram& d, bool bipath_kinds = false);
std::string diagram_to_table(const Diagram& d, bool bipath_kinds = false);

json witness_to_json(const CoverWitness& w, const OrderMap& zeta);

json read_json_file(const std::string& path);

} // namespace intmult::io
