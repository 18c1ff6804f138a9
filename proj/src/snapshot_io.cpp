#include "geosph/snapshot_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "geosph/errors.hpp"

namespace geosph {

SnapshotFrame make_frame(const ParticleSystem& st, double time, std::uint64_t step,
                         const FrameDiagnostics& diagnostics) {
  SnapshotFrame f;
  f.time = time;
  f.step = step;
  f.diagnostics = diagnostics;
  f.x = st.x;
  f.y = st.y;
  f.vx = st.vx;
  f.vy = st.vy;
  f.rho = st.rho;
  f.sxx = st.sxx;
  f.syy = st.syy;
  f.szz = st.szz;
  f.sxy = st.sxy;
  f.eps_p = st.eps_p;
  f.knot = st.knot;
  const std::size_t n = st.size();
  f.kind.resize(n);
  f.p.resize(n);
  f.sqrt_j2.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.kind[i] = static_cast<std::uint8_t>(st.kind(i));
    const Stress s = st.stress(i);
    f.p[i] = s.pressure();
    f.sqrt_j2[i] = std::sqrt(s.j2());
  }
  return f;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {"id",  "kind", "x",   "y",   "vx", "vy",      "rho",   "sxx",
                                                "syy", "szz",  "sxy", "p",   "sqrt_j2", "eps_p", "knot"};
  return cols;
}

namespace {

void append(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

void append(std::string& out, std::uint64_t v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace

std::string format_csv(const SnapshotFrame& f) {
  std::string out;
  const auto& cols = csv_columns();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c) out += ',';
    out += cols[c];
  }
  out += '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    append(out, static_cast<std::uint64_t>(i));
    out += ',';
    append(out, static_cast<std::uint64_t>(f.kind[i]));
    for (const auto* field : {&f.x, &f.y, &f.vx, &f.vy, &f.rho, &f.sxx, &f.syy, &f.szz, &f.sxy, &f.p, &f.sqrt_j2,
                              &f.eps_p, &f.knot}) {
      out += ',';
      append(out, (*field)[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_vtk(const SnapshotFrame& f) {
  const std::size_t n = f.size();
  std::string out = "# vtk DataFile Version 3.0\ngeosph frame t=";
  append(out, f.time);
  out += "\nASCII\nDATASET POLYDATA\nPOINTS ";
  append(out, static_cast<std::uint64_t>(n));
  out += " double\n";
  for (std::size_t i = 0; i < n; ++i) {
    append(out, f.x[i]);
    out += ' ';
    append(out, f.y[i]);
    out += " 0\n";
  }
  out += "VERTICES ";
  append(out, static_cast<std::uint64_t>(n));
  out += ' ';
  append(out, static_cast<std::uint64_t>(2 * n));
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out += "1 ";
    append(out, static_cast<std::uint64_t>(i));
    out += '\n';
  }
  out += "POINT_DATA ";
  append(out, static_cast<std::uint64_t>(n));
  out += '\n';

  auto scalars = [&](const char* name, const std::vector<double>& v) {
    out += "SCALARS ";
    out += name;
    out += " double 1\nLOOKUP_TABLE default\n";
    for (double x : v) {
      append(out, x);
      out += '\n';
    }
  };
  out += "SCALARS kind int 1\nLOOKUP_TABLE default\n";
  for (auto k : f.kind) {
    append(out, static_cast<std::uint64_t>(k));
    out += '\n';
  }
  scalars("rho", f.rho);
  scalars("p", f.p);
  scalars("sqrt_j2", f.sqrt_j2);
  scalars("eps_p", f.eps_p);
  scalars("knot", f.knot);

  out += "VECTORS velocity double\n";
  for (std::size_t i = 0; i < n; ++i) {
    append(out, f.vx[i]);
    out += ' ';
    append(out, f.vy[i]);
    out += " 0\n";
  }
  out += "TENSORS stress double\n";
  for (std::size_t i = 0; i < n; ++i) {
    append(out, f.sxx[i]);
    out += ' ';
    append(out, f.sxy[i]);
    out += " 0\n";
    append(out, f.sxy[i]);
    out += ' ';
    append(out, f.syy[i]);
    out += " 0\n0 0 ";
    append(out, f.szz[i]);
    out += "\n\n";
  }
  return out;
}

void write_snapshot(const SnapshotFrame& frame, const std::string& path, SnapshotFormat format) {
  write_file(path, format == SnapshotFormat::csv ? format_csv(frame) : format_vtk(frame));
}

SnapshotFrame read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw IoError("'" + path + "' is empty");

  std::string expected;
  for (std::size_t c = 0; c < csv_columns().size(); ++c) expected += (c ? "," : "") + csv_columns()[c];
  if (line != expected) throw IoError("'" + path + "' has an unexpected header");

  SnapshotFrame f;
  std::vector<std::vector<double>*> fields = {&f.x,   &f.y,   &f.vx, &f.vy,      &f.rho,   &f.sxx, &f.syy,
                                              &f.szz, &f.sxy, &f.p,  &f.sqrt_j2, &f.eps_p, &f.knot};
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const char* cur = line.data();
    const char* end = cur + line.size();
    auto next_field = [&]() -> std::pair<const char*, const char*> {
      const char* start = cur;
      while (cur < end && *cur != ',') ++cur;
      const char* stop = cur;
      if (cur < end) ++cur;
      return {start, stop};
    };
    auto fail = [&]() { throw IoError("'" + path + "' row " + std::to_string(row) + " is malformed"); };

    std::uint64_t id = 0, kind = 0;
    auto [a0, a1] = next_field();
    if (std::from_chars(a0, a1, id).ec != std::errc{}) fail();
    auto [b0, b1] = next_field();
    if (std::from_chars(b0, b1, kind).ec != std::errc{}) fail();
    f.kind.push_back(static_cast<std::uint8_t>(kind));
    for (auto* field : fields) {
      auto [c0, c1] = next_field();
      double v = 0.0;
      if (c0 == c1 || std::from_chars(c0, c1, v).ptr != c1) fail();
      field->push_back(v);
    }
  }
  return f;
}

}  // namespace geosph
