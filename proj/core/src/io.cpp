// Copyright 2026 The clickhd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clickhd/io.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "clickhd/errors.hpp"
#include "clickhd/fock.hpp"

namespace clickhd::io {
namespace {

using nlohmann::json;

Parity parity_from_json(const json& j) {
  const auto name = j.value("parity", std::string("even"));
  if (name == "even") return Parity::even;
  if (name == "odd") return Parity::odd;
  throw InvalidArgument("parity must be \"even\" or \"odd\", got \"" + name + "\"");
}

std::vector<Complex> amplitudes_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("amplitude list must be an array");
  std::vector<Complex> out;
  for (const auto& a : j) out.push_back(complex_from_json(a));
  return out;
}

CoherentSuperposition pure_from_json(const json& d) {
  State s = state_from_json(d);
  if (const auto* p = std::get_if<CoherentSuperposition>(&s)) return *p;
  throw InvalidArgument("mixture components must be coherent superpositions");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

Complex complex_from_json(const json& value) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
    return {value[0].get<double>(), value[1].get<double>()};
  }
  throw InvalidArgument("complex value must be a number or [re, im], got " + value.dump());
}

json complex_to_json(Complex value) { return json::array({value.real(), value.imag()}); }

State state_from_json(const json& d) {
  if (!d.is_object()) throw InvalidArgument("state description must be an object");
  if (d.contains("terms")) {
    std::vector<CoherentTerm> terms;
    for (const auto& t : d.at("terms")) {
      terms.push_back({complex_from_json(t.value("c", json(1.0))), amplitudes_from_json(t.at("alphas"))});
    }
    const std::size_t modes = d.value("modes", terms.empty() ? std::size_t{1} : terms.front().amplitudes.size());
    return CoherentSuperposition::normalized(modes, std::move(terms));
  }
  if (d.contains("cat")) {
    const auto& c = d.at("cat");
    return make_cat(complex_from_json(c.at("alpha")), parity_from_json(c));
  }
  if (d.contains("two_mode_cat")) {
    const auto& c = d.at("two_mode_cat");
    return make_two_mode_cat(complex_from_json(c.at("alpha")), parity_from_json(c));
  }
  if (d.contains("coherent")) {
    const auto& c = d.at("coherent");
    if (c.contains("alphas")) return coherent(amplitudes_from_json(c.at("alphas")));
    return coherent(complex_from_json(c.at("alpha")));
  }
  if (d.contains("vacuum")) return vacuum(d.at("vacuum").value("modes", std::size_t{1}));
  if (d.contains("mixture")) {
    std::vector<Mixture::Component> components;
    for (const auto& c : d.at("mixture")) {
      components.push_back({c.at("weight").get<double>(), pure_from_json(c.at("state"))});
    }
    return Mixture::of(std::move(components));
  }
  if (d.contains("fock")) {
    const auto& f = d.at("fock");
    return FockVector(f.value("modes", std::size_t{1}), f.at("truncation").get<int>(),
                      amplitudes_from_json(f.at("amplitudes")));
  }
  throw InvalidArgument("unrecognized state description: " + d.dump());
}

DetectorConfig detector_from_json(const json& d) {
  return DetectorConfig(d.value("N", 8), d.value("eta", 1.0), d.value("nu", 0.0));
}

SchemeArms SchemeConfig::arms() const {
  switch (kind) {
    case SchemeKind::direct:
      return SchemeArms({{ArmDescriptor{0, 1.0, Complex{}, detector}, ArmRole::single, 0.0}});
    case SchemeKind::unbalanced4: {
      const auto arm = unbalanced_arm(BeamSplitter(t, r), {beta}, detector);
      return SchemeArms({{arm, ArmRole::single, std::arg(arm.displacement)}});
    }
    case SchemeKind::balanced4:
      return four_port_arms(BeamSplitter(t, r), {beta}, detector, detector);
    case SchemeKind::eight:
      return eight_port_arms({beta}, detector);
    case SchemeKind::two_mode:
      return two_mode_arms({beta}, {beta2}, detector);
  }
  throw InvalidArgument("unknown scheme kind");
}

SchemeConfig scheme_from_json(const json& d) {
  static const std::map<std::string, SchemeKind> kinds = {{"direct", SchemeKind::direct},
                                                          {"unbalanced4", SchemeKind::unbalanced4},
                                                          {"balanced4", SchemeKind::balanced4},
                                                          {"eight", SchemeKind::eight},
                                                          {"two_mode", SchemeKind::two_mode}};
  SchemeConfig config;
  const auto name = d.value("scheme", std::string("unbalanced4"));
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw InvalidArgument("unknown scheme \"" + name + "\"");
  config.kind = it->second;
  const double h = 1.0 / std::sqrt(2.0);
  const bool balanced = config.kind == SchemeKind::balanced4;
  config.t = d.contains("t") ? complex_from_json(d.at("t")) : Complex{balanced ? h : 0.8};
  config.r = d.contains("r") ? complex_from_json(d.at("r")) : Complex{balanced ? h : 0.6};
  config.beta = d.contains("beta") ? complex_from_json(d.at("beta")) : Complex{4.0};
  config.beta2 = d.contains("beta2") ? complex_from_json(d.at("beta2")) : config.beta;
  if (d.contains("detector")) config.detector = detector_from_json(d.at("detector"));
  return config;
}

const char* to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::direct: return "direct";
    case SchemeKind::unbalanced4: return "unbalanced4";
    case SchemeKind::balanced4: return "balanced4";
    case SchemeKind::eight: return "eight";
    case SchemeKind::two_mode: return "two_mode";
  }
  return "unknown";
}

SpectralSetup spectral_setup_from_json(const json& d) {
  SpectralSetup s;
  s.omega = d.at("omega").get<std::vector<double>>();
  s.response = d.at("G").get<std::vector<double>>();
  s.signal_profile = amplitudes_from_json(d.at("f_SI"));
  s.lo_profile = amplitudes_from_json(d.at("f_LO"));
  s.transmission = amplitudes_from_json(d.at("t"));
  s.reflection = amplitudes_from_json(d.at("r"));
  s.beta = complex_from_json(d.at("beta"));
  s.validate();
  return s;
}

void write_distribution_csv(std::ostream& out, const ClickDistribution& distribution) {
  for (std::size_t a = 0; a < distribution.arm_count(); ++a) out << 'k' << a + 1 << ',';
  out << "prob\n";
  out.precision(17);
  const auto& p = distribution.probabilities();
  for (std::size_t flat = 0; flat < p.size(); ++flat) {
    for (int k : distribution.unflatten(flat)) out << k << ',';
    out << p[flat] << '\n';
  }
}

json distribution_to_json(const ClickDistribution& distribution) {
  return {{"sizes", distribution.sizes()}, {"probabilities", distribution.probabilities()}};
}

void write_histogram_csv(std::ostream& out, const ClickHistogram& histogram) {
  out << "# sizes=";
  for (std::size_t a = 0; a < histogram.sizes().size(); ++a) out << (a ? "," : "") << histogram.sizes()[a];
  out << '\n';
  for (std::size_t a = 0; a < histogram.sizes().size(); ++a) out << 'k' << a + 1 << ',';
  out << "count\n";
  std::vector<int> clicks(histogram.sizes().size(), 0);
  for (std::size_t flat = 0; flat < histogram.counts().size(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t a = clicks.size(); a-- > 0;) {
      const std::size_t width = static_cast<std::size_t>(histogram.sizes()[a]) + 1;
      clicks[a] = static_cast<int>(rest % width);
      rest /= width;
    }
    for (int k : clicks) out << k << ',';
    out << histogram.counts()[flat] << '\n';
  }
}

ClickHistogram read_histogram_csv(std::istream& in) {
  std::vector<int> sizes;
  std::vector<std::pair<std::vector<int>, std::uint64_t>> rows;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("sizes=");
      if (pos != std::string::npos) {
        sizes.clear();
        for (const auto& s : split(line.substr(pos + 6), ',')) sizes.push_back(std::stoi(s));
      }
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() < 2) throw InvalidArgument("histogram line " + std::to_string(line_number) + " is malformed");
    if (!fields.front().empty() && fields.front()[0] == 'k') continue;  // header row
    std::vector<int> clicks;
    try {
      for (std::size_t i = 0; i + 1 < fields.size(); ++i) clicks.push_back(std::stoi(fields[i]));
      rows.push_back({std::move(clicks), std::stoull(trim(fields.back()))});
    } catch (const std::logic_error&) {
      throw InvalidArgument("histogram line " + std::to_string(line_number) + " is not numeric");
    }
  }
  if (rows.empty()) throw InvalidArgument("histogram has no data rows");
  const std::size_t arms = rows.front().first.size();
  if (sizes.empty()) {
    sizes.assign(arms, 1);
    for (const auto& [clicks, count] : rows) {
      for (std::size_t a = 0; a < arms && a < clicks.size(); ++a) sizes[a] = std::max(sizes[a], clicks[a]);
    }
  }
  if (sizes.size() != arms) throw InvalidArgument("histogram sizes do not match the column count");
  std::vector<std::uint64_t> counts;
  std::size_t total = 1;
  for (int n : sizes) total *= static_cast<std::size_t>(n) + 1;
  counts.assign(total, 0);
  for (const auto& [clicks, count] : rows) {
    if (clicks.size() != arms) throw InvalidArgument("histogram rows have inconsistent widths");
    std::size_t flat = 0;
    for (std::size_t a = 0; a < arms; ++a) {
      if (clicks[a] < 0 || clicks[a] > sizes[a]) throw InvalidArgument("histogram click index out of range");
      flat = flat * (static_cast<std::size_t>(sizes[a]) + 1) + static_cast<std::size_t>(clicks[a]);
    }
    counts[flat] += count;
  }
  return ClickHistogram(std::move(sizes), std::move(counts));
}

}  // namespace clickhd::io
