#pragma once

// JSON encodings of matrices, witnesses, certificates and constructions, plus
// file helpers and the content hash embedded in every report.

#include <cstdint>
#include <string>
#include <string_view>

#include "symgraph/constructions.hpp"
#include "symgraph/criterion.hpp"
#include "symgraph/edge_matrix.hpp"
#include "symgraph/symmetrize.hpp"

namespace symgraph {

std::string version();

// FNV-1a, 64-bit.
std::uint64_t fnv1a64(std::string_view data);
// "fnv1a64:" followed by 16 lowercase hex digits.
std::string content_hash(std::string_view data);

// Throws DomainError when the file cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// {"n": N, "upper": [...]} or {"n": N, "edges": [[i, j, mult], ...]} (1-based, i < j).
// Rejects N < 2 and malformed documents with DomainError.
EdgeMatrix parse_matrix_json(const std::string& text);
EdgeMatrix read_matrix_file(const std::string& path);

// Compact JSON documents; indices in certificates are 1-based.
std::string matrix_json(const EdgeMatrix& m);
std::string int_matrix_json(const IntMatrix& m);  // list of rows
std::string witness_json(const SymmWitness& w);
std::string certificate_json(const Thm1Certificate& c);
std::string construction_json(const Construction& c);
std::string family_member_json(const FamilyMember& m);
std::string family_json(const FamilyInstance& f);

}  // namespace symgraph
