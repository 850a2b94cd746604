#pragma once

// Grid sampling of field evaluators and the on-disk field format.
//
// Binary layout: 8-byte magic "BIWFIELD", uint32 little-endian header length,
// UTF-8 JSON header, then float64 little-endian payload, row-major over
// (tau, x, y, z, component) with components Re s, Im s, Re v1, Im v1, ...
// CSV layout: "# <header json>", a column-name line, then one row per node.

#include <filesystem>
#include <string>
#include <string_view>

#include "biwave/twistor_factory.hpp"
#include "biwave/wave_calculus.hpp"
#include "json.hpp"

namespace biwave {

inline constexpr int kFieldFormatVersion = 1;

struct FieldDump {
  GridField field;
  nlohmann::json generator = nlohmann::json::object();
};

enum class DumpFormat { Binary, Csv };

/// Evaluates f at every node. Throws Errc::BadSpec for an invalid spec.
GridField sample_to_grid(const FieldEvaluator& f, const GridSpec& spec);

/// ".csv" selects CSV, anything else the binary format.
DumpFormat format_for_path(const std::filesystem::path& path);

std::string encode_binary(const FieldDump& dump);
std::string encode_csv(const FieldDump& dump);
/// Detects the format from the first bytes. Errors: Io (unrecognized or
/// malformed), FormatVersionMismatch, HeaderPayloadMismatch.
FieldDump decode_field(std::string_view bytes);

void write_field(const FieldDump& dump, const std::filesystem::path& path);
void write_field(const FieldDump& dump, const std::filesystem::path& path, DumpFormat format);
FieldDump read_field(const std::filesystem::path& path);

}  // namespace biwave
