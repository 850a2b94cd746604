#include "biwave/field_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "biwave/error.hpp"

namespace biwave {

namespace {

constexpr std::string_view kMagic{"BIWFIELD", 8};
constexpr std::string_view kFormatName = "biwave-field";
constexpr std::array<const char*, 8> kComponents = {"re_s",  "im_s",  "re_v1", "im_v1",
                                                    "re_v2", "im_v2", "re_v3", "im_v3"};

std::array<double, 8> components(const Biquaternion& b) {
  return {b.s.real(),   b.s.imag(),   b.v.x.real(), b.v.x.imag(),
          b.v.y.real(), b.v.y.imag(), b.v.z.real(), b.v.z.imag()};
}

Biquaternion from_components(const double* c) {
  return {{c[0], c[1]}, {{c[2], c[3]}, {c[4], c[5]}, {c[6], c[7]}}};
}

template <class T>
T to_le(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  } else {
    return v;
  }
}

nlohmann::json make_header(const FieldDump& dump, std::string_view encoding) {
  const GridSpec& s = dump.field.spec();
  nlohmann::json h;
  h["format"] = kFormatName;
  h["version"] = kFieldFormatVersion;
  h["dims"] = s.dims;
  h["origin"] = s.origin;
  h["spacing"] = s.spacing;
  h["margin"] = dump.field.margin();
  h["layout"] = "row-major(tau,x,y,z,component)";
  h["components"] = kComponents;
  h["encoding"] = encoding;
  h["generator"] = dump.generator;
  return h;
}

FieldDump field_from_header(const nlohmann::json& h) {
  try {
    if (h.at("format").get<std::string>() != kFormatName) {
      throw Error(Errc::Io, "not a biwave field header");
    }
    const int version = h.at("version").get<int>();
    if (version != kFieldFormatVersion) {
      throw Error(Errc::FormatVersionMismatch,
                  "field format version " + std::to_string(version) + ", expected " +
                      std::to_string(kFieldFormatVersion));
    }
    GridSpec spec;
    spec.dims = h.at("dims").get<std::array<std::size_t, 4>>();
    spec.origin = h.at("origin").get<std::array<double, 4>>();
    spec.spacing = h.at("spacing").get<std::array<double, 4>>();
    spec.validate();
    FieldDump dump{GridField(spec), h.value("generator", nlohmann::json::object())};
    if (h.contains("margin")) dump.field.set_margin(h["margin"].get<std::array<std::size_t, 4>>());
    return dump;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Io, std::string("malformed field header: ") + e.what());
  }
}

FieldDump decode_binary(std::string_view bytes) {
  if (bytes.size() < kMagic.size() + 4) throw Error(Errc::Io, "truncated field file");
  std::uint32_t len = 0;
  std::memcpy(&len, bytes.data() + kMagic.size(), 4);
  len = to_le(len);
  const std::size_t body = kMagic.size() + 4 + std::size_t{len};
  if (bytes.size() < body) throw Error(Errc::Io, "truncated field header");
  nlohmann::json h;
  try {
    h = nlohmann::json::parse(bytes.substr(kMagic.size() + 4, len));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Io, std::string("malformed field header: ") + e.what());
  }
  FieldDump dump = field_from_header(h);
  auto& data = dump.field.data();
  const std::size_t expected = data.size() * 8 * sizeof(double);
  if (bytes.size() - body != expected) {
    throw Error(Errc::HeaderPayloadMismatch,
                "payload has " + std::to_string(bytes.size() - body) + " bytes, header implies " +
                    std::to_string(expected));
  }
  const char* p = bytes.data() + body;
  double c[8];
  for (auto& b : data) {
    for (double& x : c) {
      std::memcpy(&x, p, sizeof(double));
      x = to_le(x);
      p += sizeof(double);
    }
    b = from_components(c);
  }
  return dump;
}

void append_number(std::string& out, double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, r.ptr);
}

FieldDump decode_csv(std::string_view text) {
  auto next_line = [&](std::string_view& rest) {
    const auto nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  };
  std::string_view rest = text;
  const std::string_view first = next_line(rest);
  nlohmann::json h;
  try {
    h = nlohmann::json::parse(first.substr(1));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Io, std::string("malformed field header: ") + e.what());
  }
  FieldDump dump = field_from_header(h);
  next_line(rest);  // column names

  auto& data = dump.field.data();
  std::size_t row = 0;
  while (!rest.empty()) {
    const std::string_view line = next_line(rest);
    if (line.empty()) continue;
    if (row == data.size()) throw Error(Errc::HeaderPayloadMismatch, "extra CSV rows");
    double v[12];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int k = 0; k < 12; ++k) {
      const auto r = std::from_chars(p, end, v[k]);
      if (r.ec != std::errc{}) {
        throw Error(Errc::Io, "bad number in CSV row " + std::to_string(row));
      }
      p = r.ptr;
      if (k < 11) {
        if (p == end || *p != ',') throw Error(Errc::HeaderPayloadMismatch, "short CSV row");
        ++p;
      }
    }
    if (p != end) throw Error(Errc::HeaderPayloadMismatch, "long CSV row");
    data[row++] = from_components(v + 4);
  }
  if (row != data.size()) {
    throw Error(Errc::HeaderPayloadMismatch, "CSV has " + std::to_string(row) +
                                                 " rows, header implies " +
                                                 std::to_string(data.size()));
  }
  return dump;
}

}  // namespace

GridField sample_to_grid(const FieldEvaluator& f, const GridSpec& spec) {
  GridField g(spec);
  const auto& d = spec.dims;
  for (std::size_t it = 0; it < d[0]; ++it)
    for (std::size_t ix = 0; ix < d[1]; ++ix)
      for (std::size_t iy = 0; iy < d[2]; ++iy)
        for (std::size_t iz = 0; iz < d[3]; ++iz)
          g.at(it, ix, iy, iz) = f(g.tau(it), g.position(ix, iy, iz));
  return g;
}

DumpFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? DumpFormat::Csv : DumpFormat::Binary;
}

std::string encode_binary(const FieldDump& dump) {
  const std::string header = make_header(dump, "float64-le").dump();
  std::string out;
  out.reserve(kMagic.size() + 4 + header.size() + dump.field.data().size() * 64);
  out.append(kMagic);
  const std::uint32_t len = to_le(static_cast<std::uint32_t>(header.size()));
  out.append(reinterpret_cast<const char*>(&len), 4);
  out.append(header);
  for (const auto& b : dump.field.data()) {
    for (double x : components(b)) {
      const double le = to_le(x);
      out.append(reinterpret_cast<const char*>(&le), sizeof le);
    }
  }
  return out;
}

std::string encode_csv(const FieldDump& dump) {
  std::string out = "# " + make_header(dump, "csv").dump() + "\n";
  out += "tau,x,y,z";
  for (const char* c : kComponents) (out += ',') += c;
  out += '\n';
  const GridField& g = dump.field;
  const auto& d = g.dims();
  for (std::size_t it = 0; it < d[0]; ++it)
    for (std::size_t ix = 0; ix < d[1]; ++ix)
      for (std::size_t iy = 0; iy < d[2]; ++iy)
        for (std::size_t iz = 0; iz < d[3]; ++iz) {
          const Vec3 x = g.position(ix, iy, iz);
          append_number(out, g.tau(it));
          for (double c : {x.x, x.y, x.z}) append_number(out += ',', c);
          for (double c : components(g.at(it, ix, iy, iz))) append_number(out += ',', c);
          out += '\n';
        }
  return out;
}

FieldDump decode_field(std::string_view bytes) {
  if (bytes.substr(0, kMagic.size()) == kMagic) return decode_binary(bytes);
  if (!bytes.empty() && bytes.front() == '#') return decode_csv(bytes);
  throw Error(Errc::Io, "unrecognized field file");
}

void write_field(const FieldDump& dump, const std::filesystem::path& path) {
  write_field(dump, path, format_for_path(path));
}

void write_field(const FieldDump& dump, const std::filesystem::path& path, DumpFormat format) {
  const std::string bytes = format == DumpFormat::Csv ? encode_csv(dump) : encode_binary(dump);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::Io, "write to '" + path.string() + "' failed");
}

FieldDump read_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open '" + path.string() + "'");
  const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return decode_field(bytes);
}

}  // namespace biwave
