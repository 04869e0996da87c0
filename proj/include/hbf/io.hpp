#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hbf/psap.hpp"

namespace hbf {

/// On-disk truth table:
///   HBF v1 n=<n> k=<k> modulus=<hex>
/// followed by 2^n words, each F(element i) as a fixed-width big-endian hex
/// word of ceil(k/4) digits, concatenated in index order and wrapped at 64
/// hex characters per line.
struct TruthTableFile {
    unsigned n = 0;
    unsigned k = 0;
    std::uint64_t modulus = 0;
    std::vector<std::uint32_t> words;
};

void write_truth_table(std::ostream& os, const VectorialFunction& F);
void write_truth_table_file(const std::string& path, const VectorialFunction& F);

/// Parses and validates: word count 2^n, every word < 2^k, modulus equal to
/// the shipped table entry for n.
TruthTableFile read_truth_table(std::istream& is);
TruthTableFile read_truth_table_file(const std::string& path);

/// Attaches a parsed table to a field context (which must match the header).
VectorialFunction to_vectorial(const TruthTableFile& tt, const Field& f);

/// Balanced-table file:
///   HTBL v1 m=<m> k=<k>
/// followed by 2^m decimal words.
std::vector<std::uint32_t> read_h_table(std::istream& is, unsigned& m, unsigned& k);

/// Trace-form coefficient file:
///   TFORM v1 n=<n> k=<k>
/// followed by k lines of 2^m + 1 hex element indices (a_{i,0} .. a_{i,2^m}).
TraceForm read_trace_form(std::istream& is, const Field& f);

} // namespace hbf
