#include "hfk11/scan.hpp"

#include <atomic>
#include <optional>
#include <thread>

#include "json.hpp"

#include "hfk11/error.hpp"
#include "hfk11/pipeline.hpp"

namespace hfk11 {

namespace {

std::optional<std::string> scan_row(const RasmussenParams& params) {
  nlohmann::json row;
  row["params"] = {params.p, params.q, params.r, params.s};
  OneOneDiagram d = decode(RasmussenParams{1, 0, 0, 0, {}});
  try {
    d = decode(params);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kValidity) return std::nullopt;
    throw;
  }
  try {
    const Analysis a = analyze(d);
    const InvariantReport& r = a.report;
    nlohmann::json alexander = nlohmann::json::array();
    for (auto [e, c] : r.alexander) alexander.push_back({e, c});
    row["status"] = "ok";
    row["alexander"] = alexander;
    row["conway_trivial"] = r.conway_trivial;
    row["genus"] = r.seifert_genus;
    row["rank"] = [&] {
      int total = 0;
      for (auto [am, dim] : r.hfk) total += dim;
      return total;
    }();
    row["tau"] = r.tau;
    row["flagged"] = r.conway_trivial && r.tau != 0;
  } catch (const Error& e) {
    row["status"] = "error";
    row["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    row["flagged"] = false;
  }
  return row.dump();
}

}  // namespace

std::vector<RasmussenParams> scan_tuples(int p_max) {
  std::vector<RasmussenParams> out;
  for (int p = 1; p <= p_max; ++p) {
    for (int q = 0; 2 * q < p; ++q) {
      for (int r = 0; r < p; ++r) {
        for (int u = 0; u < p - 2 * q; ++u) {
          const int s = 2 * q - r + u;
          if (s >= 0) out.push_back({p, q, r, s, std::nullopt});
        }
      }
    }
  }
  return out;
}

std::vector<std::string> scan(int p_max, unsigned threads) {
  if (p_max < 1 || p_max > kScanCeiling) {
    throw Error(ErrorCode::kParameterRange, "p-max must lie in [1, " + std::to_string(kScanCeiling) + "]");
  }
  const std::vector<RasmussenParams> tuples = scan_tuples(p_max);
  std::vector<std::optional<std::string>> rows(tuples.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) rows[i] = scan_row(tuples[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::vector<std::string> out;
  for (auto& r : rows) {
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace hfk11
