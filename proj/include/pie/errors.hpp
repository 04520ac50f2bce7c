#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace pie {

// Input/contract violations. The CLI maps these to exit code 2 and a
// machine-readable error object: code() is the stable identifier,
// details() the structured payload.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string code, const std::string& message,
                  std::map<std::string, std::string> details = {})
      : std::runtime_error(message),
        code_(std::move(code)),
        details_(std::move(details)) {}

  const std::string& code() const noexcept { return code_; }
  const std::map<std::string, std::string>& details() const noexcept {
    return details_;
  }

private:
  std::string code_;
  std::map<std::string, std::string> details_;
};

// Filesystem and serialization failures; CLI exit code 3.
class IoError : public std::runtime_error {
public:
  IoError(const std::string& message, std::string path = "")
      : std::runtime_error(message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

struct EmptyDataset : ValidationError {
  EmptyDataset()
      : ValidationError("EmptyDataset", "dataset has no records") {}
};

struct NonPositiveTime : ValidationError {
  explicit NonPositiveTime(std::size_t index)
      : ValidationError("NonPositiveTime",
                        "record " + std::to_string(index) +
                            ": time must be positive and finite",
                        {{"index", std::to_string(index)}}),
        index(index) {}
  std::size_t index;
};

struct NoEvents : ValidationError {
  NoEvents()
      : ValidationError("NoEvents",
                        "dataset contains no observed events") {}
};

struct InconsistentRiskTable : ValidationError {
  explicit InconsistentRiskTable(const std::string& message)
      : ValidationError("InconsistentRiskTable", message) {}
};

struct IrreparableCoords : ValidationError {
  explicit IrreparableCoords(const std::string& message)
      : ValidationError("IrreparableCoords", message) {}
};

struct DegenerateU : ValidationError {
  explicit DegenerateU(double u)
      : ValidationError("DegenerateU",
                        "survival quantile requires u in (0,1], got " +
                            std::to_string(u)) {}
};

struct MissingInput : ValidationError {
  explicit MissingInput(const std::string& path)
      : ValidationError("MissingInput", "input file not found: " + path,
                        {{"path", path}}) {}
};

struct MissingArtifact : ValidationError {
  explicit MissingArtifact(const std::string& path)
      : ValidationError("MissingArtifact",
                        "expected run artifact not found: " + path,
                        {{"path", path}}) {}
};

struct UsageError : ValidationError {
  explicit UsageError(const std::string& message)
      : ValidationError("UsageError", message) {}
};

struct ConfigError : ValidationError {
  explicit ConfigError(const std::string& message)
      : ValidationError("BadConfig", message) {}
};

}  // namespace pie
