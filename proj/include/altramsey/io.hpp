#pragma once

#include <filesystem>
#include <string>

#include "altramsey/altspace.hpp"
#include "altramsey/hypergraph.hpp"

namespace altramsey::io {

/// Instance files are JSON:
///   {"p": 3, "n": 4, "m": 2, "matrices": [[[1,2,1],[3,4,2]], [[1,3,1]]]}
/// with 1-based sparse strict-upper-triangle entries [i, j, val], i < j;
/// the lower triangle is implied by negation and absent entries are 0.
AltSpace load_instance(const std::filesystem::path& path);
AltSpace parse_instance(const std::string& text);
void save_instance(const std::filesystem::path& path, const AltSpace& a);
std::string dump_instance(const AltSpace& a);

/// Witness files are JSON:
///   {"kind": "isotropic"|"complete", "dim": d, "basis": [col, ...],
///    "verified": bool, "measured_dim": int}
/// with d basis columns of length n.
struct WitnessFile {
    WitnessKind kind;
    size_t dim;
    Mat basis;  // n x dim, as given in the file (rank not assumed)
    bool verified;
    size_t measured_dim;
};

WitnessFile load_witness(const std::filesystem::path& path, const FieldCtx& ctx);
void save_witness(const std::filesystem::path& path, const Witness& w,
                  const VerifyReport& report);

Hypergraph load_hypergraph(const std::filesystem::path& path);

}  // namespace altramsey::io
