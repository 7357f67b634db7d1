#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "trmap/cdv.hpp"
#include "trmap/explosion.hpp"
#include "trmap/planar_map.hpp"

namespace trmap {

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // first failing input, empty when passed
  std::string detail;
};

/// The bijections exercised by the suites. Defaults are the library
/// functions; tests substitute broken ones to check that the harness
/// notices.
struct Bijections {
  std::function<std::string(const TreeRootedMap&)> xi;
  std::function<TreeRootedMap(std::string_view)> xi_inv;
  std::function<OrientedMap(const TreeRootedMap&)> delta;
  std::function<TreeRootedMap(const OrientedMap&)> gamma;
  std::function<TreePartitionPair(const OrientedMap&)> phi;
  std::function<OrientedMap(const PlaneTree&, const NonCrossingPartition&)> psi;
  std::function<CdvPair(std::string_view)> lambda;
  std::function<std::string(const CdvPair&)> lambda_inv;

  static Bijections library();
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "counts", "xi", "orientation", "explosion", "cdv", "isomorphism", "prefix"};
  return names;
}

/// Runs one suite exhaustively up to size `n`. Map-enumerating checks stop
/// at min(n, 4), the orientation oracle at min(n, 3); prefix checks cover
/// words of length up to 2n (evolutions up to 2n - 1).
SuiteReport run_suite(std::string_view name, unsigned n,
                      const Bijections& f = Bijections::library());

/// "all" expands to every suite. Throws Error(InvalidFormat) on an unknown
/// suite name.
std::vector<SuiteReport> run_suites(std::string_view name, unsigned n,
                                    const Bijections& f = Bijections::library());

std::string format_report(const SuiteReport& r);

}  // namespace trmap
