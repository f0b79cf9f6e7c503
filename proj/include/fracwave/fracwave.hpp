#pragma once
// Umbrella header.

#include "fracwave/analysis.hpp"
#include "fracwave/core.hpp"
#include "fracwave/dispersion.hpp"
#include "fracwave/errors.hpp"
#include "fracwave/fft.hpp"
#include "fracwave/field.hpp"
#include "fracwave/fracops.hpp"
#include "fracwave/media.hpp"
#include "fracwave/solvers.hpp"
