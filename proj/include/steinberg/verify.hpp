#pragma once

#include "steinberg/wposet.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace steinberg {

// The rank-4 degree-0 example with rows = cols = [(2,0), (2,0)]; only the
// (1,1) entry varies between the three families.
CMatrix example_u(std::int64_t n);  // [[(2,-n), (0,n)], [(0,n), (2,-n)]], n >= 0
CMatrix example_w(std::int64_t m);  // [[(1,m), (1,-m)], [(1,-m), (1,m)]]
CMatrix example_v(std::int64_t d);  // [[(0,d), (2,-d)], [(2,-d), (0,d)]], d >= 0
/// u_0 < ... < u_b < w_b < ... < w_{-b} < v_b < ... < v_0.
std::vector<CMatrix> example_chain(std::int64_t b);

struct CheckResult {
  std::string suite;
  std::string check;
  std::string topic;
  bool pass = false;
  std::string detail;
};

const std::vector<std::string>& verify_suites();
/// Throws DomainError on an unknown suite; "all" runs every suite.
std::vector<CheckResult> run_verify(const std::string& suite, std::uint64_t seed);

}  // namespace steinberg
