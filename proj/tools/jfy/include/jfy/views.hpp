#pragma once

// JSON renderings shared by the CLI and the service. Objects are key-sorted.

#include "jfy/loading.hpp"
#include "json.hpp"
#include "jt/explanation.hpp"
#include "jt/session.hpp"

namespace jfy {

/// Reads {"edge(a,b)": true, ...}; null reads as no opens. Throws
/// InvalidArgument for anything else.
jt::NamedOpens opens_from_json(const nlohmann::json& value);

nlohmann::json explanation_view(const jt::Explanation& e);

/// {name: value} for every answered open.
nlohmann::json answered_view(const jt::SessionState& state);

/// {answered, queries: [{fact, status, relevant_opens, explanation?}], semantics}
nlohmann::json session_view(const jt::SessionState& state);

/// {result, semantics, unassigned_opens}
nlohmann::json models_view(const Loaded& loaded, jt::BranchEvaluation be);

} // namespace jfy
