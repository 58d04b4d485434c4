#pragma once

// JSON documents exchanged by the command-line tool.
//
// ChannelDocument (format_version 1):
//   {"format_version": 1, "name": "...", "provenance": "...",
//    "dim_in": n, "dim_out": m,
//    "kraus": [ [[ [re, im], ... ], ...], ... ]}   row-major rows of [re, im]
// "name" and "provenance" are optional.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qchan/channel.hpp"
#include "qchan/choi.hpp"
#include "qchan/extremal.hpp"

namespace qchan {

inline constexpr int kFormatVersion = 1;
inline constexpr std::string_view kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

struct ChannelDocument {
  std::optional<std::string> name;
  std::optional<std::string> provenance;
  KrausSet kraus;
};

Json matrix_to_json(const ComplexMatrix& m);
/// Throws InputError on ragged rows, non-numeric or non-finite entries.
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const ChannelDocument& doc);
/// Validates format_version, dimensions and every operator's shape.
ChannelDocument channel_from_json(const Json& j);

/// Throws InputError when the file is missing or does not parse.
ChannelDocument load_channel(const std::filesystem::path& path);
void save_channel(const ChannelDocument& doc, const std::filesystem::path& path);

/// Canonical text form: two-space indentation, trailing newline.
std::string dump(const Json& j);

Json report_to_json(const ExtremalityReport& rep, const TolerancePolicy& tol,
                    std::optional<double> elapsed_ms = std::nullopt);

Json choi_to_json(const ChoiMatrix& c);

}  // namespace qchan
