#pragma once

// File formats: triangle CSV (header n,k,value), JSON Lines with method
// provenance, OEIS b-file ("index value" per line, LF, no trailing blank
// line), and the plain-text renderings of words and partitions.

#include <iosfwd>
#include <string>
#include <vector>

#include "flatpart/permutation.hpp"
#include "flatpart/set_partition.hpp"
#include "flatpart/triangle.hpp"

namespace flatpart {

void write_triangle_csv(std::ostream& out, const CountTriangle& t);
void write_triangle_jsonl(std::ostream& out, const CountTriangle& t);
void write_triangle_text(std::ostream& out, const CountTriangle& t);

// Re-ingestion for the report command. The CSV carries no provenance, so
// the caller supplies label and refinement level; JSONL rows carry theirs.
CountTriangle read_triangle_csv(std::istream& in, const std::string& method, int s);
CountTriangle read_triangle_jsonl(std::istream& in);

// values[i] is written as "(start_index + i) value".
void write_bfile(std::ostream& out, const std::vector<Integer>& values, long long start_index);

// Words print as compact digit strings up to n = 9 and space-separated
// beyond; partitions use "|" between blocks ("12|3|45").
std::string format_word(const Permutation& p);
std::string format_partition(const SetPartition& p);
Permutation parse_word(const std::string& text);
SetPartition parse_partition(const std::string& text);

}  // namespace flatpart
