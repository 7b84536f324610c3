#pragma once

#include <string>

#include "json.hpp"
#include "rcl/construct.hpp"
#include "rcl/magnify.hpp"

namespace rcl {

using Json = nlohmann::ordered_json;

// Stable JSON shapes. Permutations are 1-based image arrays; points and
// cluster indices are 1-based; fingerprints are 16-hex-digit strings.
Json perm_json(const Perm& p);
Json subgroup_json(const Subgroup& h);
Json group_json(const Group& g);

Json cluster_report_json(const ClusterReport& r);
Json partition_json(const std::vector<std::vector<int32_t>>& blocks);
Json tower_report_json(const TowerReport& r);
Json tower_sweep_json(const TowerSweep& s);
Json capacity_report_json(const CapacityReport& r);
Json chain_report_json(const ChainReport& r);
Json link_profile_json(const LinkProfile& p);
Json hint_report_json(const HintReport& r);
Json decomposition_list_json(const std::vector<Decomposition>& ds);
Json weak_magnification_json(const WeakMagnification& w);
Json base_change_json(const BaseChangeFlags& f);
Json strong_chain_json(const StrongChainFlags& f);
Json euler_checks_json(const EulerChecks& c);

std::string fingerprint_hex(uint64_t fp);

}  // namespace rcl
