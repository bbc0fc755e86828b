#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "rglab/core/env.hpp"

namespace rglab::envs {

struct EnvSpec {
  std::string name;             // cartpole | blackjack | watchrepair | chockale
  nlohmann::json params = nlohmann::json::object();
};

// Builds an environment from its spec. Unknown environment names or
// unknown/ill-typed parameter keys throw std::invalid_argument with a
// message naming every offending key.
std::unique_ptr<Environment> make_env(const EnvSpec& spec);

}  // namespace rglab::envs
