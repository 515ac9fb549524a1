#pragma once

// Umbrella header: cyclic orbit flag codes over F_{p^n}.

#include "flagforge/errors.hpp"
#include "flagforge/numtheory.hpp"
#include "flagforge/ffield.hpp"
#include "flagforge/subspace.hpp"
#include "flagforge/flag.hpp"
#include "flagforge/orbit.hpp"
#include "flagforge/oracle.hpp"
#include "flagforge/galois.hpp"
#include "flagforge/odfc.hpp"
#include "flagforge/flagspec.hpp"
#include "flagforge/report.hpp"
#include "flagforge/version.hpp"
