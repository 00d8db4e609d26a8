#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace commval {

enum class Errc {
  // corpus
  FileUnreadable,
  SchemaError,
  // labeling
  EmptyInput,
  CommunitySkipped,
  // extraction
  TemplateError,
  ParseError,
  ProviderUnavailable,
  Quarantined,
  RunAborted,
  // canonicalize
  EmbedderUnavailable,
  BadK,
  UnknownLabel,
  UnknownKeyword,
  // scales
  UnmappedKeyword,
  UnknownValue,
  UnknownCommunity,
  // prosocial
  CollinearInput,
  DegenerateColumn,
  DegenerateInput,
  SeparationDetected,
  SingleClass,
  // reliability
  InsufficientData,
  UnadjudicatedItem,
  // cli / pipeline
  ConfigError,
  StageFailed,
  MissingStageOutput,
  // generic precondition violation
  BadInput,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace commval
