#ifndef POLARCG_TABLE_HPP
#define POLARCG_TABLE_HPP

#include <string>

namespace polarcg::table {

enum class What { cg, threej, sixj };
enum class Format { csv, json };

/// Deterministic sweep table: rows ordered lexicographically on the doubled
/// quantum numbers, each carrying the doubled inputs, the canonical exact
/// value, and the squared (rational) value. Byte-identical output for any
/// worker count.
std::string emit_table(int max_2j, What what, Format format, int threads = 1);

What what_from_string(const std::string& name);
Format format_from_string(const std::string& name);

} // namespace polarcg::table

#endif
