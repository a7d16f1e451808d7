// zs: partial multiplications, Zappa-Szep products, and rewriting at desk scale.
// SPDX-License-Identifier: Apache-2.0

#ifndef ZS_CORE_HPP_
#define ZS_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zs {

/// Index of an element inside the carrier of a magma (dense, 0..size-1).
using element_id = std::size_t;

enum class verdict { pass, fail, not_applicable, inconclusive };

inline std::string to_string(verdict v) {
  switch (v) {
    case verdict::pass: return "pass";
    case verdict::fail: return "fail";
    case verdict::not_applicable: return "not-applicable";
    case verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

enum class error_code {
  duplicate_entry,
  index_out_of_range,
  duplicate_name,
  not_closed,
  factorization_missing,
  factorization_ambiguous,
  not_categorical,
  hypothesis_failed,
  clause_failed,
  condition_failed,
  no_common_left_multiple,
  fuel_exhausted,
  alphabet_collision,
  kind_check_failed,
  shape_mismatch,
  not_terminating,
  not_complete,
  ill_formed_category,
  embedding_not_injective,
  situation_check_failed,
  unknown_example,
  bad_file,
  unsupported
};

inline const char* to_string(error_code c) {
  switch (c) {
    case error_code::duplicate_entry: return "DuplicateEntry";
    case error_code::index_out_of_range: return "IndexOutOfRange";
    case error_code::duplicate_name: return "DuplicateName";
    case error_code::not_closed: return "NotClosed";
    case error_code::factorization_missing: return "FactorizationMissing";
    case error_code::factorization_ambiguous: return "FactorizationAmbiguous";
    case error_code::not_categorical: return "NotCategorical";
    case error_code::hypothesis_failed: return "HypothesisFailed";
    case error_code::clause_failed: return "ClauseFailed";
    case error_code::condition_failed: return "ConditionFailed";
    case error_code::no_common_left_multiple: return "NoCommonLeftMultipleFound";
    case error_code::fuel_exhausted: return "FuelExhausted";
    case error_code::alphabet_collision: return "AlphabetCollision";
    case error_code::kind_check_failed: return "KindCheckFailed";
    case error_code::shape_mismatch: return "ShapeMismatch";
    case error_code::not_terminating: return "NotTerminating";
    case error_code::not_complete: return "NotComplete";
    case error_code::ill_formed_category: return "IllFormedCategory";
    case error_code::embedding_not_injective: return "EmbeddingNotInjective";
    case error_code::situation_check_failed: return "SituationCheckFailed";
    case error_code::unknown_example: return "UnknownExample";
    case error_code::bad_file: return "BadFile";
    case error_code::unsupported: return "Unsupported";
  }
  return "Error";
}

/// The one exception type of the library.  `code` tells callers (and the CLI)
/// which contract was violated; `what()` carries the human-readable story.
struct error : std::runtime_error {
  error(error_code c, const std::string& msg)
      : std::runtime_error(std::string(to_string(c)) + ": " + msg), code(c) {}
  error_code code;
};

/// Result of checking one named property.  A fail verdict always comes with a
/// witness tuple: substituting it into the property's defining condition
/// violates the condition.  Witnesses are the lexicographically least violating
/// tuple, so reports are deterministic and diff-friendly.
struct property_report {
  std::string property;
  verdict result = verdict::pass;
  std::vector<element_id> witness;        // element indices, when elements are indexed
  std::vector<std::string> witness_names; // display form (also used by word-domain checks)
  std::string note;

  bool ok() const { return result == verdict::pass; }
  static property_report passed(std::string prop, std::string note = "") {
    return property_report{std::move(prop), verdict::pass, {}, {}, std::move(note)};
  }
  static property_report failed(std::string prop, std::vector<element_id> w,
                                std::string note = "") {
    return property_report{std::move(prop), verdict::fail, std::move(w), {}, std::move(note)};
  }
};

/// Default fuel values, sized for desk-scale experiments.
struct fuel_defaults {
  static constexpr std::size_t word_length = 12;
  static constexpr std::size_t rewrite_steps = 100000;
};

}  // namespace zs

#endif  // ZS_CORE_HPP_
