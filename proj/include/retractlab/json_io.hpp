#pragma once

#include <string>

#include <json.hpp>

#include "retractlab/lattice.hpp"

namespace retractlab {

struct Partition;
struct Relation;
struct EndoMap;
struct RetPoset;
struct AbsorptionProperty;

/// {"n": int, "covers": [[lo,hi],...], "labels": [...]?} — lossless round trip.
nlohmann::json lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const nlohmann::json& j, int cap = caps::construction);

Lattice load_lattice_file(const std::string& path, int cap = caps::construction);
void save_lattice_file(const Lattice& L, const std::string& path);

/// Hasse diagram in DOT, one node per element, lower element at the tail.
std::string lattice_to_dot(const Lattice& L, const std::string& graph_name = "lattice");

/// blocks sorted by least element: [[0,1],[2],[3]]
nlohmann::json partition_to_json(const Partition& P);
Partition partition_from_json(const nlohmann::json& j, int n);

/// row-major 0/1 string of length n*n
nlohmann::json relation_to_json(const Relation& R);
Relation relation_from_json(const nlohmann::json& j, int n);

nlohmann::json endomap_to_json(const EndoMap& f);
EndoMap endomap_from_json(const nlohmann::json& j, int n);

nlohmann::json subset_to_json(const DynBitset& S);
DynBitset subset_from_json(const nlohmann::json& j, int n);

nlohmann::json ret_poset_to_json(const RetPoset& P);
std::string ret_poset_to_dot(const RetPoset& P);

nlohmann::json absorption_property_to_json(const AbsorptionProperty& prop);
AbsorptionProperty absorption_property_from_json(const nlohmann::json& j);
AbsorptionProperty load_absorption_property_file(const std::string& path);

}  // namespace retractlab
