#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace altramsey::commands {

// Exit-code contract shared by the CLI binary:
//   0 ok, 1 verification failure, 2 precondition, 3 input malformed,
//   4 internal error.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailure = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kMalformed = 3;
inline constexpr int kInternal = 4;

int cmd_solve(const std::string& instance_path, size_t s, size_t t,
              bool truncate_to_t, const std::string& out_path,
              std::ostream& log);

int cmd_verify(const std::string& instance_path,
               const std::string& witness_path, size_t s, size_t t,
               std::ostream& log);

int cmd_gen_uniform(uint32_t p, size_t n, size_t m, uint64_t seed,
                    const std::string& out_path, std::ostream& log);

int cmd_gen_bgh(size_t s, size_t t, uint32_t p, uint64_t seed,
                const std::string& out_path, std::ostream& log);

int cmd_gen_hypergraph(const std::string& edge_path, uint32_t p,
                       const std::string& out_path, std::ostream& log);

/// ell = 2: every graph on <= max_n vertices, exhaustively.
/// ell > 2: `trials` seeded random hypergraphs on max_n vertices.
int cmd_check_prop_alpha(size_t max_n, size_t ell, uint32_t q, size_t trials,
                         uint64_t seed, std::ostream& log);

int cmd_check_baer(uint32_t p, std::ostream& log);

int cmd_check_bgh_experiment(size_t s, size_t t, uint32_t p, size_t trials,
                             uint64_t seed, const std::string& csv_path,
                             std::ostream& log);

}  // namespace altramsey::commands
