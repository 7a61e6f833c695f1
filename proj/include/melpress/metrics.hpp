#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace melpress {

// Append-only metrics stream. Every record is one JSON object; emit adds the
// run id and a timestamp. Key order and number formatting come from
// nlohmann::json's sorted-key dump, so identical records serialize
// identically across runs.
class MetricsSink {
 public:
  virtual ~MetricsSink() = default;
  void emit(nlohmann::json record);

 protected:
  virtual void write(const nlohmann::json& record) = 0;
  std::string run_id;
};

class JsonlWriter : public MetricsSink {
 public:
  JsonlWriter(const std::string& path, std::string run_id_v);

 protected:
  void write(const nlohmann::json& record) override;

 private:
  std::ofstream out_;
  std::string path_;
};

class VectorSink : public MetricsSink {
 public:
  explicit VectorSink(std::string run_id_v = "test");
  std::vector<nlohmann::json> records;

 protected:
  void write(const nlohmann::json& record) override;
};

// RFC 3339 UTC timestamp with second resolution.
std::string iso8601_now();

}  // namespace melpress
