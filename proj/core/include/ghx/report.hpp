// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ghx/config.hpp"
#include "ghx/counterexample.hpp"
#include "ghx/diagnostics.hpp"
#include "ghx/format.hpp"

namespace ghx {

// Minimal deterministic JSON writer: insertion-ordered keys, doubles printed
// with up to 17 significant digits. Reports produced with it are
// byte-identical across runs and thread counts.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& k);
  void value(double v);
  void value(long long v);
  void value(int v) { value(static_cast<long long>(v)); }
  void value(long v) { value(static_cast<long long>(v)); }
  void value(bool v);
  void value(const std::string& v);
  void value(const char* v) { value(std::string(v)); }
  void null_value();
  void raw(const std::string& fragment);  // pre-serialized JSON

  std::string take();

 private:
  void separator();
  std::string out_;
  std::vector<bool> first_;
  bool pending_key_ = false;
};

std::string scan_report_json(const SystemConfig& cfg, const ScanResult& scan_result);
std::string scan_csv(const ScanResult& scan_result);
std::string verdict_report_json(const SystemConfig& cfg, const ScanResult& scan_result,
                                const Verdict& verdict);
std::string witness_json(const CounterexampleWitness& w);

// Reads a report produced by scan_report_json and rebuilds the embedded
// system configuration.
ScanResult parse_scan_report(const std::string& json_text, const std::string& origin,
                             SystemConfig* config_out);

}  // namespace ghx
