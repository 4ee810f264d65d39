#pragma once

#include <map>
#include <string>
#include <vector>

#include "tensortomo/ncpoly.hpp"

namespace tt {

// Closed forms of the published operators, transcribed literally with the
// pi-power prefactors multiplied out. Words that act as zero on rank m are
// dropped, as everywhere else.
NCPoly fixture_a(int m, int r, int l);       // A~(m,r,l), r <= 2 (equals A for r = 0)
std::map<int, NCPoly> fixture_p1(int m);     // P^(1,k)

struct TermDiff {
  std::string word;
  std::string pipeline;
  std::string fixture;
  std::string difference;
};

struct CompareEntry {
  std::string name;  // e.g. "A~(2,1,0)" or "P(1,-1)"
  bool match = true;
  std::vector<TermDiff> diffs;
};

struct CompareReport {
  int m = 0;
  int r = 0;
  std::vector<CompareEntry> entries;
  bool all_match() const;
};

CompareEntry compare_ops(const std::string& name, const NCPoly& pipeline, const NCPoly& fixture);

// r = 0: A(m,0,0); r = 1: A~(m,1,l) and P^(1,k); r = 2: A~(m,2,l).
CompareReport reference_compare(int m, int r);
CompareReport compare_p1(int m);

std::string to_json(const CompareReport& rep);

}  // namespace tt
