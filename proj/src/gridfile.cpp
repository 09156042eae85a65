#include "sfwm/gridfile.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "sfwm/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "grid files are little-endian; big-endian hosts need byte swaps");

namespace sfwm {
namespace {

constexpr char kMagic[8] = {'J', 'A', 'G', 'R', 'I', 'D', '1', '\0'};
constexpr size_t kHeaderBytes = 8 + 2 * 4 + 4 * 8 + 8;

void write_header(std::ofstream& out, std::uint32_t ns, std::uint32_t ni, double step_s,
                  double step_i, double origin_s, double origin_i, std::uint8_t domain) {
  char hdr[kHeaderBytes] = {};
  char* p = hdr;
  std::memcpy(p, kMagic, 8); p += 8;
  std::memcpy(p, &ns, 4); p += 4;
  std::memcpy(p, &ni, 4); p += 4;
  std::memcpy(p, &step_s, 8); p += 8;
  std::memcpy(p, &step_i, 8); p += 8;
  std::memcpy(p, &origin_s, 8); p += 8;
  std::memcpy(p, &origin_i, 8); p += 8;
  std::memcpy(p, &domain, 1);
  out.write(hdr, kHeaderBytes);
}

}  // namespace

void save_grid(const JointAmplitude& ja, const std::string& path) {
  if (ja.a.size() != (size_t)ja.s.n * ja.i.n)
    throw ValidationError("grid payload size does not match its axes");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write grid file '" + path + "'");
  write_header(out, (std::uint32_t)ja.s.n, (std::uint32_t)ja.i.n, ja.s.step, ja.i.step,
               ja.s.origin, ja.i.origin, (std::uint8_t)ja.domain);
  out.write(reinterpret_cast<const char*>(ja.a.data()),
            (std::streamsize)(ja.a.size() * sizeof(cd)));
  if (!out) throw ValidationError("failed writing grid file '" + path + "'");
}

JointAmplitude load_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open grid file '" + path + "'");
  char hdr[kHeaderBytes];
  in.read(hdr, kHeaderBytes);
  if (!in || std::memcmp(hdr, kMagic, 8) != 0)
    throw ValidationError("'" + path + "' is not a JAGRID1 file");
  std::uint32_t ns, ni;
  double step_s, step_i, origin_s, origin_i;
  std::uint8_t domain;
  const char* p = hdr + 8;
  std::memcpy(&ns, p, 4); p += 4;
  std::memcpy(&ni, p, 4); p += 4;
  std::memcpy(&step_s, p, 8); p += 8;
  std::memcpy(&step_i, p, 8); p += 8;
  std::memcpy(&origin_s, p, 8); p += 8;
  std::memcpy(&origin_i, p, 8); p += 8;
  std::memcpy(&domain, p, 1);
  if (ns == 0 || ni == 0) throw ValidationError("'" + path + "' has an empty axis");
  if (domain > 1) throw ValidationError("'" + path + "' has an unknown domain flag");

  JointAmplitude ja;
  ja.s = Axis{(int)ns, step_s, origin_s};
  ja.i = Axis{(int)ni, step_i, origin_i};
  ja.domain = (Domain)domain;
  ja.a.resize((size_t)ns * ni);
  in.read(reinterpret_cast<char*>(ja.a.data()), (std::streamsize)(ja.a.size() * sizeof(cd)));
  if (!in) throw ValidationError("'" + path + "' is truncated");
  char extra;
  if (in.read(&extra, 1)) throw ValidationError("'" + path + "' has trailing bytes");
  return ja;
}

void save_pump_grid(const PumpField& pump, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write grid file '" + path + "'");
  write_header(out, (std::uint32_t)pump.t.n, 1, pump.t.step, 0.0, pump.t.origin, 0.0, 0);
  out.write(reinterpret_cast<const char*>(pump.a.data()),
            (std::streamsize)(pump.a.size() * sizeof(cd)));
  if (!out) throw ValidationError("failed writing grid file '" + path + "'");
}

}  // namespace sfwm
