#pragma once

#include <string>
#include <vector>

#include "toricapprox/decide.hpp"

namespace toric {

struct CatalogParams {
  long r = 0;             // hirzebruch, p11r
  std::size_t n = 0;      // pn-darmon: number of homogeneous coordinates
  std::size_t d = 0;      // affine-space
  ExtVec m;               // per-ray multiplicities
  bool T_nonempty = true;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  ToricPair pair;
  FieldDescriptor field;
  bool T_nonempty = true;
  Holds expected = Holds::Unknown;
  std::string formula;  // the closed-form test that produced `expected`
};

std::vector<std::string> catalog_names();

// Worked setups over Q with expected verdicts from closed-form criteria evaluated
// independently of the lattice pipeline.  Unknown names and bad params: InputError.
CatalogEntry example_catalog(const std::string& name, const CatalogParams& params);

// Runs the pipeline matching the entry (strong approximation for affine-space).
Verdict run_catalog_entry(const CatalogEntry& e);

}  // namespace toric
