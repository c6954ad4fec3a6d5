// Convenience umbrella for the whole library.

#pragma once

#include "gifc/channel.hpp"
#include "gifc/cli_app.hpp"
#include "gifc/config.hpp"
#include "gifc/exact_oracle.hpp"
#include "gifc/infodensity.hpp"
#include "gifc/quadrature.hpp"
#include "gifc/region.hpp"
#include "gifc/trellis.hpp"
