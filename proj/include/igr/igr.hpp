#pragma once

#include "igr/bigmath.hpp"
#include "igr/canonical.hpp"
#include "igr/certificate.hpp"
#include "igr/degeneracy.hpp"
#include "igr/errors.hpp"
#include "igr/graph.hpp"
#include "igr/labeling.hpp"
#include "igr/prng.hpp"
#include "igr/reports.hpp"
#include "igr/sampler.hpp"
#include "igr/universal.hpp"

namespace igr {
inline constexpr const char* version = "0.1.0";
}
