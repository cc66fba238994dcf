#ifndef JDLAT_IO_HPP
#define JDLAT_IO_HPP

#include <iosfwd>
#include <string>

#include "jdlat/coordinates.hpp"
#include "jdlat/jd.hpp"
#include "jdlat/setsystem.hpp"

#include <nlohmann/json_fwd.hpp>

namespace jdlat::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lattice file: { "size": m, "covers": [[a,b],...], "chains": [[ids...],...] }
// with "chains" optional. Ids are 0-based.
json lattice_to_json(const FiniteLattice& L, const std::vector<Chain>& chains = {});
FiniteLattice lattice_from_json(const json& j);
std::vector<Chain> chains_from_json(const json& j); // empty when absent

// Permutation vector file: { "n": 3, "k": 3, "perms": [[2,1,3],[3,2,1]] },
// one-line notation, 1-based.
json perm_vector_to_json(const PermVector& v);
PermVector perm_vector_from_json(const json& j);

// Set system file: { "ground": [...], "family": [[...],...] }, members
// sorted canonically by the serializer.
json set_system_to_json(const SetSystem& s);
SetSystem set_system_from_json(const json& j);

json jd_report_to_json(const JdReport& r);

json parse(std::istream& in);
json parse_file(const std::string& path); // "-" reads stdin

/// Canonically formatted JSON text (sorted keys, 2-space indent, trailing
/// newline), byte-identical for identical values.
std::string dump(const json& j);

enum class FileKind { Lattice, PermVector, SetSystem };
FileKind detect_kind(const json& j);

/// Deterministic Hasse diagram in DOT: one node per element (labeled by its
/// feet vector when chains are given), one edge per covering pair, elements
/// of equal height on one rank.
std::string export_dot(const FiniteLattice& L, const std::vector<Chain>& chains = {});

} // namespace jdlat::io

#endif
