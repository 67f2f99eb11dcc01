#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "dunkl/sampled_function.hpp"

namespace dunkl {

/// Rows of a sampled-function CSV: columns x,re,im and optionally dre,dim.
struct SampleTable {
  std::vector<double> x;
  std::vector<Complex> values;
  std::vector<Complex> derivative;  // empty when the file has no dre,dim
};

SampleTable read_sample_table(std::istream& in);
SampleTable read_sample_table(const std::filesystem::path& path);

/// Binds a table to a grid whose nodes it must reproduce.
SampledFunction bind_to_grid(const SampleTable& table, GridPtr grid, double tol = 1e-10);

void write_sampled_function(std::ostream& out, const SampledFunction& f);
void write_sampled_function(const std::filesystem::path& path, const SampledFunction& f);

}  // namespace dunkl
