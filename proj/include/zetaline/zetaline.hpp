#pragma once

#include "zetaline/config.hpp"
#include "zetaline/constants.hpp"
#include "zetaline/engine.hpp"
#include "zetaline/errors.hpp"
#include "zetaline/hardy_z.hpp"
#include "zetaline/ladder.hpp"
#include "zetaline/oscillation.hpp"
#include "zetaline/quad.hpp"
#include "zetaline/roots.hpp"
#include "zetaline/theta.hpp"
