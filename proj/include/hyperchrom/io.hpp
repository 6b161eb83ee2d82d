#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperchrom/bounds.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/listcolor.hpp"
#include "hyperchrom/polynomial.hpp"

namespace hyperchrom {

/// {"n":5,"edges":[[1,2,3],[3,4,5]]}; edges are canonicalized to sorted form.
/// Throws InvalidInput on malformed JSON, bad shape, or an invalid hypergraph.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph load_hypergraph(const std::filesystem::path& path);
std::string to_json(const Hypergraph& h);

/// {"k":2,"lists":{"1":[1,2],"2":[1,2],"3":[2,3]}}; "lists" may also be an array
/// indexed by vertex - 1.
ListAssignment parse_list_assignment(std::string_view text);
ListAssignment load_list_assignment(const std::filesystem::path& path);
nlohmann::ordered_json to_json_value(const ListAssignment& l);
std::string to_json(const ListAssignment& l);

/// Decimal string for values outside int64, a JSON integer otherwise.
nlohmann::ordered_json big_to_json(const BigInt& v);
/// [[exponent, coefficient], ...] in decreasing exponent order.
nlohmann::ordered_json to_json_value(const IntPolynomial& p);

/// 1-based sorted edge indices, e.g. "[1,3,4]".
std::string format_subset(EdgeSubset s);

std::string format_real(Real v);
/// Column header: name,m,r,rho,k,lhs,rhs,verdict
std::string report_csv_header();
std::string to_csv_row(const BoundReport& r);
nlohmann::ordered_json to_json_value(const BoundReport& r);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace hyperchrom
