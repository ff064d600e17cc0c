#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shc/colouring.hpp"
#include "shc/instance.hpp"
#include "shc/record.hpp"

namespace shc {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal that parses back to the same double (at most 17 significant digits).
std::string format_double(double x);

/// DIMACS edge format with extension lines:
///
///     c shc k <k>
///     c shc rho <rho>
///     c shc params <n> <k> <p> <q> <pcc> <seed>      (optional)
///     p edge <n> <m>
///     e <u> <v>            u < v, 1-indexed, ascending
///     x <v> <community>    one per vertex, ascending
///     f <v> <colour>       one per precoloured vertex, ascending
std::string write_instance(const Instance& inst);

/// Parses and validates. Throws ParseError (with line number where one
/// applies) or InstanceError for invariant violations.
Instance parse_instance(std::string_view text);

/// `c shc colouring <n> <k>` followed by one `v <vertex> <colour>` line per
/// vertex, 1-indexed; colour 0 is uncoloured.
std::string write_colouring(const Colouring& c);
Colouring parse_colouring(std::string_view text);

inline constexpr std::string_view kRecordHeader =
    "instance_id,n,k,p,q,pcc,rho,seed,mu,xi,xi_tilde,bucket,algorithm,alpha,acd,happy_count,"
    "complete,reverted,elapsed_ms";

std::string record_row(const ExperimentRecord& r);

/// Header plus one RFC 4180 row per record, in input order.
std::string write_records(std::span<const ExperimentRecord> records);

/// Inverse of write_records. Throws ParseError on a bad header or row.
std::vector<ExperimentRecord> parse_records(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);
void append_file(const std::filesystem::path& path, std::string_view contents);

} // namespace shc
