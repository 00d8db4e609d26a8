#include "commval/error.hpp"

namespace commval {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::FileUnreadable: return "FileUnreadable";
    case Errc::SchemaError: return "SchemaError";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::CommunitySkipped: return "CommunitySkipped";
    case Errc::TemplateError: return "TemplateError";
    case Errc::ParseError: return "ParseError";
    case Errc::ProviderUnavailable: return "ProviderUnavailable";
    case Errc::Quarantined: return "Quarantined";
    case Errc::RunAborted: return "RunAborted";
    case Errc::EmbedderUnavailable: return "EmbedderUnavailable";
    case Errc::BadK: return "BadK";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::UnknownKeyword: return "UnknownKeyword";
    case Errc::UnmappedKeyword: return "UnmappedKeyword";
    case Errc::UnknownValue: return "UnknownValue";
    case Errc::UnknownCommunity: return "UnknownCommunity";
    case Errc::CollinearInput: return "CollinearInput";
    case Errc::DegenerateColumn: return "DegenerateColumn";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::SeparationDetected: return "SeparationDetected";
    case Errc::SingleClass: return "SingleClass";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::UnadjudicatedItem: return "UnadjudicatedItem";
    case Errc::ConfigError: return "ConfigError";
    case Errc::StageFailed: return "StageFailed";
    case Errc::MissingStageOutput: return "MissingStageOutput";
    case Errc::BadInput: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace commval
