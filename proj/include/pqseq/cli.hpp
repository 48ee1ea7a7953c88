#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pqseq/kerror.hpp"

namespace pqseq {

/// Exit statuses of the command-line surface.
enum ExitStatus : int {
  kExitOk = 0,
  kExitMismatch = 1,   // a verification run found a mismatch
  kExitConfig = 2,     // invalid configuration or failed hypothesis
  kExitBudget = 3,     // the request exceeds the pattern budget
};

struct RunConfig {
  enum class Command { generate, lc, klc, spectrum, verify };
  enum class Format { csv, json };

  Command command = Command::lc;
  uint32_t p = 0;
  uint32_t w = 1;
  Field field = Field::f2;
  std::vector<uint32_t> index_set;        // expanded residues
  bool complement = false;                // treat index_set as J and build the
                                          // complement-style sequence
  std::optional<Variant> theorem;         // verify only
  uint32_t k = 0;                         // klc
  std::optional<uint32_t> k_max;          // spectrum / verify; default = weight
  uint64_t budget = kDefaultBudget;
  Format format = Format::csv;
  std::string output_path;                // empty = standard output
  unsigned threads = 0;
};

/// Expands "threshold", "legendre" or a comma-separated residue list.
std::vector<uint32_t> expand_index_set(const std::string& text, uint32_t p);

/// Executes one command, writing the artifact to `out` and diagnostics to
/// `err`.  Returns an ExitStatus value.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full argv-level entry point (parsing included) used by the pqseq binary.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pqseq
